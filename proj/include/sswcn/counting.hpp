#pragma once

// Closed-form k-dimensional Catalan numbers, brute-force weighted sums over
// enumerated paths, and the transfer-matrix recurrence over normalized
// k-step boundary states.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sswcn/error.hpp"
#include "sswcn/height.hpp"
#include "sswcn/lattice.hpp"
#include "sswcn/polynomial.hpp"

namespace sswcn {

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

/// floor(k/2) * ceil(k/2): the least height of a nonempty balanced path.
constexpr Coord min_path_height(int k) noexcept { return static_cast<Coord>((k / 2) * ((k + 1) / 2)); }

/// floor(k/2) * ceil(k/2) * n: the greatest height of a balanced path of length kn.
constexpr Coord max_path_height(int k, int n) noexcept { return min_path_height(k) * n; }

/// 0!1!...(n-1)! (kn)! / (k!(k+1)!...(k+n-1)!). Accepts k = 1 (always 1).
inline BigInt catalan_number(int k, int n) {
  if (k < 1) throw Error(ErrorKind::InvalidDimension, "k must be positive");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  auto factorial = [](unsigned long m) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return f;
  };
  BigInt num = factorial(static_cast<unsigned long>(k) * static_cast<unsigned long>(n));
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    num *= factorial(static_cast<unsigned long>(i));
    den *= factorial(static_cast<unsigned long>(k + i));
  }
  return num / den;
}

namespace detail {

inline void require_cap(int k, int n, std::uint64_t cap) {
  const BigInt total = catalan_number(k, n);
  if (total > BigInt(std::to_string(cap))) {
    throw Error(ErrorKind::TooLarge, "C_{" + std::to_string(k) + "," + std::to_string(n) + "} = " + total.get_str() +
                                         " paths exceeds the brute-force cap " + std::to_string(cap));
  }
}

inline Polynomial sum_weights(PathEnumerator stream, std::uint64_t cap) {
  std::map<Monomial, std::uint64_t> counts;
  std::uint64_t seen = 0;
  const Coord start = detail::ss_height(stream.path().origin().coords());
  while (stream.next()) {
    if (++seen > cap) {
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(cap) + " paths; raise the brute-force cap");
    }
    ++counts[sswt_steps(stream.dimension(), stream.steps(), start)];
  }
  Polynomial out;
  for (const auto& [m, c] : counts) out.add_term(m, BigInt(std::to_string(c)));
  return out;
}

}  // namespace detail

/// Sum of sswt over all balanced ballot paths of length kn.
inline Polynomial sswcn_brute(int k, int n, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  detail::require_cap(k, n, cap);
  return detail::sum_weights(enumerate_paths(k, n), cap);
}

/// Sum of sswt over balanced paths whose semisymmetric height is at most u.
inline Polynomial bounded_sswcn_brute(int k, Coord u, int n, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  detail::require_cap(k, n, cap);
  return detail::sum_weights(enumerate_paths(k, n, u), cap);
}

/// Sum of sswt over height-bounded sub-ballot paths from `a` to (n, ..., n).
inline Polynomial sub_sswcn_brute(int k, Coord u, const Point& a, int n, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  if (a.dimension() != k || !is_ballot_point(a)) {
    throw Error(ErrorKind::InvalidState, a.to_string() + " is not a " + std::to_string(k) + "-dimensional ballot point");
  }
  if (ss_height_point(a) > u) {
    throw Error(ErrorKind::InvalidState, a.to_string() + " lies above the height bound " + std::to_string(u));
  }
  const Point target = Point::constant(k, n);
  for (int i = 0; i < k; ++i) {
    if (a[i] > n) return Polynomial{};
  }
  return detail::sum_weights(enumerate_sub_paths(k, a, target, u), cap);
}

namespace detail {

/// Visits every k-step sub-ballot path from `from` whose points stay at
/// height <= u, as (steps, endpoint).
inline void for_each_block(int k, Coord u, const Point& from,
                           const std::function<void(std::span<const int>, const Point&)>& visit) {
  std::vector<Coord> x(from.coords().begin(), from.coords().end());
  std::vector<int> steps;
  steps.reserve(static_cast<std::size_t>(k));
  std::function<void(Coord)> rec = [&](Coord g) {
    if (steps.size() == static_cast<std::size_t>(k)) {
      visit(steps, Point(x));
      return;
    }
    for (int d = 1; d <= k; ++d) {
      const auto i = static_cast<std::size_t>(d - 1);
      if (d > 1 && x[i - 1] < x[i] + 1) continue;
      const Coord next = g + height_coefficient(k, d);
      if (next > u) continue;
      ++x[i];
      steps.push_back(d);
      rec(next);
      steps.pop_back();
      --x[i];
    }
  };
  rec(ss_height(x));
}

}  // namespace detail

/// Normalized boundary states (last coordinate 0) reachable from the origin
/// by k-step blocks that never exceed height u, in BFS discovery order.
class StateSpace {
 public:
  int k() const noexcept { return k_; }
  Coord u() const noexcept { return u_; }
  const std::vector<Point>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

  std::optional<std::size_t> index_of(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  nlohmann::json to_json() const {
    nlohmann::json states = nlohmann::json::array();
    for (const auto& s : states_) states.push_back(std::vector<Coord>(s.coords().begin(), s.coords().end()));
    return {{"k", k_}, {"u", u_}, {"states", states}};
  }

 private:
  friend StateSpace build_state_space(int k, Coord u);

  std::size_t add(const Point& p) {
    auto [it, inserted] = index_.try_emplace(p, states_.size());
    if (inserted) states_.push_back(p);
    return it->second;
  }

  int k_ = 2;
  Coord u_ = 0;
  std::vector<Point> states_;
  std::unordered_map<Point, std::size_t, PointHash> index_;
};

inline StateSpace build_state_space(int k, Coord u) {
  detail::require_dimension(k);
  if (u < 0) throw Error(ErrorKind::InvalidArgument, "height bound must be nonnegative");
  StateSpace space;
  space.k_ = k;
  space.u_ = u;
  space.add(Point::zero(k));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Point from = space.states_[queue.front()];
    queue.pop_front();
    detail::for_each_block(k, u, from, [&](std::span<const int>, const Point& end) {
      const Point w = end.normalized();
      if (detail::ss_height(w.coords()) != detail::ss_height(end.coords())) {
        throw Error(ErrorKind::InvalidState, "normalization changed the height of " + end.to_string());
      }
      const std::size_t before = space.size();
      const std::size_t idx = space.add(w);
      if (idx == before) queue.push_back(idx);
    });
  }
  return space;
}

/// Square matrix of weight polynomials over a state space: entry (a, w) sums
/// sswt over the height-bounded k-step blocks from a whose endpoint
/// normalizes to w.
class TransferMatrix {
 public:
  TransferMatrix(StateSpace space, std::vector<Polynomial> entries)
      : space_(std::move(space)), entries_(std::move(entries)) {}

  const StateSpace& space() const noexcept { return space_; }
  std::size_t dimension() const noexcept { return space_.size(); }

  const Polynomial& at(std::size_t row, std::size_t col) const { return entries_[row * dimension() + col]; }

  /// Row-major numeric matrix at the given weights (residues when a modulus is given).
  std::vector<BigInt> evaluate(const WeightAssignment& w, const std::optional<BigInt>& modulus = std::nullopt) const {
    std::vector<BigInt> out;
    out.reserve(entries_.size());
    for (const auto& p : entries_) out.push_back(poly_evaluate(p, w, modulus));
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < dimension(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < dimension(); ++j) row.push_back(at(i, j).to_json());
      rows.push_back(row);
    }
    return {{"space", space_.to_json()}, {"entries", rows}};
  }

 private:
  StateSpace space_;
  std::vector<Polynomial> entries_;
};

inline TransferMatrix build_transfer_matrix(const StateSpace& space) {
  const std::size_t dim = space.size();
  std::vector<std::map<Monomial, std::uint64_t>> counts(dim * dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const Point& from = space.states()[row];
    const Coord start = detail::ss_height(from.coords());
    detail::for_each_block(space.k(), space.u(), from, [&](std::span<const int> steps, const Point& end) {
      const auto col = space.index_of(end.normalized());
      if (!col) throw Error(ErrorKind::InvalidState, "block endpoint " + end.to_string() + " outside the state space");
      ++counts[row * dim + *col][detail::sswt_steps(space.k(), steps, start)];
    });
  }
  std::vector<Polynomial> entries(dim * dim);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& [m, c] : counts[i]) entries[i].add_term(m, BigInt(std::to_string(c)));
  }
  return TransferMatrix(space, std::move(entries));
}

/// gamma_r = T gamma_{r-1} over evaluated entries, starting from the unit
/// vector at the all-zero state.
class EvaluatedRecurrence {
 public:
  EvaluatedRecurrence(const TransferMatrix& t, const WeightAssignment& w, std::optional<BigInt> modulus = std::nullopt)
      : dim_(t.dimension()), matrix_(t.evaluate(w, modulus)), modulus_(std::move(modulus)) {}

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<BigInt>& matrix() const noexcept { return matrix_; }
  const std::optional<BigInt>& modulus() const noexcept { return modulus_; }

  std::vector<BigInt> initial() const {
    std::vector<BigInt> v(dim_, 0);
    v[0] = 1;
    return v;
  }

  std::vector<BigInt> step(const std::vector<BigInt>& gamma) const {
    std::vector<BigInt> out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < dim_; ++j) {
        const BigInt& a = matrix_[i * dim_ + j];
        if (a != 0 && gamma[j] != 0) acc += a * gamma[j];
      }
      out[i] = modulus_ ? detail::reduce(acc, *modulus_) : acc;
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<BigInt> matrix_;
  std::optional<BigInt> modulus_;
};

/// Values of the u-bounded SSWCN for n = 0..n_max.
inline std::vector<BigInt> bounded_sswcn_dp_sequence(int k, Coord u, int n_max, const WeightAssignment& w,
                                                     const std::optional<BigInt>& modulus = std::nullopt) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  detail::require_modulus(modulus);
  const EvaluatedRecurrence rec(build_transfer_matrix(build_state_space(k, u)), w, modulus);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  std::vector<BigInt> gamma = rec.initial();
  out.push_back(gamma[0]);
  for (int r = 1; r <= n_max; ++r) {
    gamma = rec.step(gamma);
    out.push_back(gamma[0]);
  }
  return out;
}

inline BigInt bounded_sswcn_dp(int k, Coord u, int n, const WeightAssignment& w,
                               const std::optional<BigInt>& modulus = std::nullopt) {
  return bounded_sswcn_dp_sequence(k, u, n, w, modulus).back();
}

/// Number of balanced ballot paths of length kn with height at most u.
inline BigInt bounded_catalan(int k, Coord u, int n) {
  return bounded_sswcn_dp(k, u, n, WeightAssignment::all_ones());
}

/// The unbounded SSWCN at numeric weights, via the DP with a non-binding bound.
inline BigInt sswcn_value(int k, int n, const WeightAssignment& w, const std::optional<BigInt>& modulus = std::nullopt) {
  return bounded_sswcn_dp(k, max_path_height(k, n), n, w, modulus);
}

/// Sum of legacy weights over all balanced paths (the earlier generalization).
inline Polynomial legacy_weighted_sum(int k, int n, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  detail::require_cap(k, n, cap);
  Polynomial out;
  PathEnumerator stream = enumerate_paths(k, n);
  while (stream.next()) out.add_term(legacy_wt(stream.path()), 1);
  return out;
}

}  // namespace sswcn
