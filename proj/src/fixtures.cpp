#include "toricmirror/fixtures.hpp"

#include <numeric>

#include "toricmirror/error.hpp"

namespace toricmirror {

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"P2", "P1xP1", "P1xP2", "P2xP2", "BlP2"};
  return names;
}

ToricFanoData make_projective_product(const std::vector<std::size_t>& dims, std::string name) {
  const std::size_t n = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  std::vector<LatticePoint> rays;
  std::size_t offset = 0;
  for (std::size_t na : dims) {
    LatticePoint last = LatticePoint::zero(n);
    for (std::size_t j = 0; j < na; ++j) {
      rays.push_back(LatticePoint::basis(n, offset + j));
      last[offset + j] = -1;
    }
    rays.push_back(last);
    offset += na;
  }
  return build_toric_data(std::move(rays), std::nullopt, std::nullopt, std::nullopt, std::move(name));
}

ToricFanoData make_fixture(std::string_view name) {
  if (name == "P2") return make_projective_product({2}, "P2");
  if (name == "P1xP1") return make_projective_product({1, 1}, "P1xP1");
  if (name == "P1xP2") return make_projective_product({1, 2}, "P1xP2");
  if (name == "P2xP2") return make_projective_product({2, 2}, "P2xP2");
  if (name == "BlP2") {
    IntMatrix kbasis = IntMatrix::from_columns({{1, 0, 1, -1}, {0, 1, 0, 1}}, 4);
    return build_toric_data({{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, std::nullopt, std::move(kbasis), std::nullopt,
                            "BlP2");
  }
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace toricmirror
