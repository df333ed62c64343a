#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toricmirror/toric_data.hpp"

namespace toricmirror {

/// Registered fixture names: P2, P1xP1, P1xP2, P2xP2, BlP2.
const std::vector<std::string>& fixture_names();

/// Builds a registered fixture; throws UnknownFixture otherwise.
///
/// Product fixtures list each factor's rays e_1..e_{n_a}, -sum e_j in turn.
/// BlP2 uses rays (1,0),(0,1),(-1,-1),(0,-1) with kernel basis
/// (1,0,1,-1),(0,1,0,1), so e^lambda = (1, 1, q1 q2, q2).
ToricFanoData make_fixture(std::string_view name);

/// Product of projective spaces CP^{dims[0]} x ... in block coordinates.
ToricFanoData make_projective_product(const std::vector<std::size_t>& dims, std::string name = {});

}  // namespace toricmirror
