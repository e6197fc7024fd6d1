#pragma once

// Height functions on points and paths, and the path statistics built on
// them: semisymmetric weight, legacy weight and semisymmetric peaks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sswcn/lattice.hpp"
#include "sswcn/polynomial.hpp"

namespace sswcn {

/// g_k(x) = sum_i (k + 1 - 2i) x_i.
inline Coord ss_height_point(const Point& p) {
  detail::require_dimension(p.dimension());
  return detail::ss_height(p.coords());
}

/// h_k(x) = (k - 1) x_1 - x_2 - ... - x_k.
inline Coord legacy_height_point(const Point& p) {
  detail::require_dimension(p.dimension());
  Coord h = static_cast<Coord>(p.dimension() - 1) * p[0];
  for (int i = 1; i < p.dimension(); ++i) h -= p[i];
  return h;
}

/// Maximum of g_k over all points of the path, origin included. The empty
/// balanced path has height 0 by convention, which the origin already gives.
inline Coord ss_height_path(const BallotPath& path) {
  const int k = path.dimension();
  std::vector<Coord> x(path.origin().coords().begin(), path.origin().coords().end());
  Coord g = detail::ss_height(x);
  Coord best = g;
  for (int d : path.steps()) {
    g += detail::height_coefficient(k, d);
    best = std::max(best, g);
  }
  return best;
}

namespace detail {

/// sswt from a raw step sequence starting at height `start_height`.
inline Monomial sswt_steps(int k, std::span<const int> steps, Coord start_height) {
  std::map<Variable, std::uint32_t> exps;
  Coord g = start_height;
  for (int d : steps) {
    const Coord before = g;
    g += height_coefficient(k, d);
    if (is_up_step(k, d)) {
      ++exps[Variable{VarKind::B, before}];
    } else {
      ++exps[Variable{VarKind::C, g}];
    }
  }
  std::vector<Monomial::Factor> factors(exps.begin(), exps.end());
  return Monomial::from_factors(std::move(factors));
}

}  // namespace detail

/// Product of B(height of start) over up-steps and C(height of result) over
/// neutral and down steps.
inline Monomial sswt(const BallotPath& path) {
  return detail::sswt_steps(path.dimension(), path.steps(), ss_height_point(path.origin()));
}

/// Product of B(h_k(start)) over the steps equal to e_1.
inline Monomial legacy_wt(const BallotPath& path) {
  std::map<Variable, std::uint32_t> exps;
  Point x = path.origin();
  for (int d : path.steps()) {
    if (d == 1) ++exps[Variable{VarKind::B, legacy_height_point(x)}];
    x = x.step(d);
  }
  return Monomial::from_factors({exps.begin(), exps.end()});
}

inline std::int64_t count_ss_peaks(int k, std::span<const int> steps) {
  std::int64_t peaks = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (is_up_step(k, steps[i]) && is_down_step(k, steps[i + 1])) ++peaks;
  }
  return peaks;
}

/// Number of up-steps immediately followed by a down-step.
inline std::int64_t count_ss_peaks(const BallotPath& path) { return count_ss_peaks(path.dimension(), path.steps()); }

}  // namespace sswcn
