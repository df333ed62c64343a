#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "toricmirror/lattice.hpp"
#include "toricmirror/quantum_ring.hpp"
#include "toricmirror/toric_data.hpp"

namespace toricmirror {

/// Half-line from `vertex` in the direction of a ray of the fan.
struct TropicalDisc {
  RationalPoint vertex;
  LatticePoint direction;
};

/// Disc at `vertex` in the direction of ray i.
TropicalDisc make_disc(const ToricFanoData& data, const RationalPoint& vertex, std::size_t i);

/// Single-vertex genus-0 curve; the edge directions sum to zero.
struct TropicalCurve {
  RationalPoint vertex;
  std::vector<LatticePoint> edges;
};

/// Glues discs sharing a vertex; throws VertexMismatch or Unbalanced.
TropicalCurve glue_discs(const std::vector<TropicalDisc>& discs);

/// c_i = number of edges in the direction of ray i.
std::vector<Int> curve_degree(const TropicalCurve& curve, const ToricFanoData& data);

/// Every single-vertex curve through xi whose marked edges lie on the rays of
/// factor a; each marked edge may take any ray that is a positive multiple of
/// its marking.
std::vector<TropicalCurve> enumerate_tgw_curves(const ToricFanoData& data,
                                                const std::optional<ProductFactorization>& factorization,
                                                std::size_t a, const RationalPoint& xi);

/// Number of curves found by enumerate_tgw_curves.
Int count_tgw(const ToricFanoData& data, const std::optional<ProductFactorization>& factorization, std::size_t a,
              const RationalPoint& xi);

/// (log|w_1|, ..., log|w_n|).
std::vector<double> log_map(const std::vector<std::complex<double>>& w);

/// SVG 1.1 scene of a curve: its vertex and edges drawn as half-lines.
/// Coordinates beyond the second are projected onto evenly spaced directions.
std::string curve_svg(const TropicalCurve& curve);

}  // namespace toricmirror
