#pragma once

// Eventual periodicity of bounded SSWCN sequences mod m, the divisibility
// hypotheses that make the unbounded sum agree with a bounded one, and the
// resulting modular evaluator.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sswcn/counting.hpp"
#include "sswcn/error.hpp"
#include "sswcn/polynomial.hpp"

namespace sswcn {

struct PeriodReport {
  std::int64_t preperiod = 0;       // t of the gamma-vector orbit
  std::int64_t vector_period = 1;   // omega of the gamma-vector orbit
  std::int64_t scalar_period = 1;   // least period of the scalar sequence on the horizon
  std::int64_t scalar_preperiod = 0;
  BigInt modulus = 2;
  std::int64_t verified_horizon = 0;
  std::string certificate;
  std::vector<BigInt> values;  // residues for n = 0..verified_horizon

  nlohmann::json to_json() const {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : values) vals.push_back(v.get_str());
    return {{"preperiod", preperiod},
            {"vector_period", vector_period},
            {"scalar_period", scalar_period},
            {"scalar_preperiod", scalar_preperiod},
            {"modulus", modulus.get_str()},
            {"verified_horizon", verified_horizon},
            {"certificate", certificate},
            {"values", vals}};
  }
};

inline constexpr std::uint64_t kDefaultOrbitLimit = std::uint64_t{1} << 24;

namespace detail {

struct U64VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct BigVectorHash {
  std::size_t operator()(const std::vector<BigInt>& v) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (const auto& x : v) h ^= mpz_get_ui(x.get_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Orbit {
  std::int64_t first = 0;
  std::int64_t repeat = 0;
  std::vector<BigInt> scalars;  // gamma_r[0] for r = 0..repeat
};

inline Orbit orbit_u64(const EvaluatedRecurrence& rec, std::uint64_t limit) {
  const std::size_t dim = rec.dimension();
  const auto m = static_cast<std::uint64_t>(rec.modulus()->get_ui());
  std::vector<std::uint64_t> matrix(dim * dim);
  for (std::size_t i = 0; i < matrix.size(); ++i) matrix[i] = rec.matrix()[i].get_ui();
  std::vector<std::uint64_t> gamma(dim, 0);
  gamma[0] = 1 % m;
  std::unordered_map<std::vector<std::uint64_t>, std::int64_t, U64VectorHash> seen;
  Orbit orbit;
  for (std::int64_t r = 0;; ++r) {
    orbit.scalars.emplace_back(static_cast<unsigned long>(gamma[0]));
    auto [it, inserted] = seen.try_emplace(gamma, r);
    if (!inserted) {
      orbit.first = it->second;
      orbit.repeat = r;
      return orbit;
    }
    if (static_cast<std::uint64_t>(r) >= limit) {
      throw Error(ErrorKind::TooLarge, "no repeat within " + std::to_string(limit) + " iterations");
    }
    std::vector<std::uint64_t> next(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        acc = (acc + static_cast<unsigned __int128>(matrix[i * dim + j]) * gamma[j]) % m;
      }
      next[i] = static_cast<std::uint64_t>(acc);
    }
    gamma = std::move(next);
  }
}

inline Orbit orbit_big(const EvaluatedRecurrence& rec, std::uint64_t limit) {
  std::vector<BigInt> gamma = rec.initial();
  gamma[0] = detail::reduce(gamma[0], *rec.modulus());
  std::unordered_map<std::vector<BigInt>, std::int64_t, BigVectorHash> seen;
  Orbit orbit;
  for (std::int64_t r = 0;; ++r) {
    orbit.scalars.push_back(gamma[0]);
    auto [it, inserted] = seen.try_emplace(gamma, r);
    if (!inserted) {
      orbit.first = it->second;
      orbit.repeat = r;
      return orbit;
    }
    if (static_cast<std::uint64_t>(r) >= limit) {
      throw Error(ErrorKind::TooLarge, "no repeat within " + std::to_string(limit) + " iterations");
    }
    gamma = rec.step(gamma);
  }
}

inline bool periodic_on(const std::vector<BigInt>& s, std::int64_t from, std::int64_t period) {
  for (auto n = static_cast<std::size_t>(from); n + static_cast<std::size_t>(period) < s.size(); ++n) {
    if (s[n] != s[n + static_cast<std::size_t>(period)]) return false;
  }
  return true;
}

}  // namespace detail

/// Finds the first repeated gamma vector mod m. The vector orbit gives exact
/// minimal (t, omega); the scalar sequence is then extended to t + 4 omega and
/// its own least period and preperiod are read off that horizon.
inline PeriodReport detect_eventual_period(int k, Coord u, const WeightAssignment& w, const BigInt& m,
                                           std::uint64_t orbit_limit = kDefaultOrbitLimit) {
  detail::require_modulus(m);
  const EvaluatedRecurrence rec(build_transfer_matrix(build_state_space(k, u)), w, m);
  const bool fast = m < BigInt("9223372036854775808");
  detail::Orbit orbit = fast ? detail::orbit_u64(rec, orbit_limit) : detail::orbit_big(rec, orbit_limit);

  PeriodReport report;
  report.modulus = m;
  report.preperiod = orbit.first;
  report.vector_period = orbit.repeat - orbit.first;
  report.verified_horizon = report.preperiod + 4 * report.vector_period;
  report.certificate = "gamma vector at n=" + std::to_string(orbit.repeat) + " repeats n=" + std::to_string(orbit.first);

  // The orbit is periodic from `first`, so later scalars are copies.
  std::vector<BigInt>& s = orbit.scalars;
  s.pop_back();
  while (static_cast<std::int64_t>(s.size()) <= report.verified_horizon) {
    s.push_back(s[s.size() - static_cast<std::size_t>(report.vector_period)]);
  }

  report.scalar_period = report.vector_period;
  for (std::int64_t d = 1; d < report.vector_period; ++d) {
    if (report.vector_period % d == 0 && detail::periodic_on(s, report.preperiod, d)) {
      report.scalar_period = d;
      break;
    }
  }
  report.scalar_preperiod = report.preperiod;
  while (report.scalar_preperiod > 0 &&
         s[static_cast<std::size_t>(report.scalar_preperiod - 1)] ==
             s[static_cast<std::size_t>(report.scalar_preperiod - 1 + report.scalar_period)]) {
    --report.scalar_preperiod;
  }
  report.values = std::move(s);
  return report;
}

enum class DivisibilityCondition { ConsecutiveB, ConsecutiveC, PairwiseB };

inline std::string to_string(DivisibilityCondition c) {
  switch (c) {
    case DivisibilityCondition::ConsecutiveB: return "consecutive-b";
    case DivisibilityCondition::ConsecutiveC: return "consecutive-c";
    case DivisibilityCondition::PairwiseB: return "pairwise-b";
  }
  return "unknown";
}

struct DivisibilityWitness {
  Coord u = 0;
  DivisibilityCondition condition = DivisibilityCondition::ConsecutiveB;

  /// Height at which the unbounded sum may be cut: u+k-2, or u+2k-1 for the pairwise case.
  Coord truncation_height(int k) const {
    return condition == DivisibilityCondition::PairwiseB ? u + 2 * k - 1 : u + k - 2;
  }
};

namespace detail {

inline bool divides(const BigInt& m, const BigInt& x) { return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0; }

inline void require_horizon(Coord horizon) {
  if (horizon < 1) throw Error(ErrorKind::InvalidArgument, "search horizon must be positive");
}

}  // namespace detail

/// Least u <= horizon with b_u..b_{u+k-1} all divisible by m (u >= 0), or
/// c_{u-1}..c_{u+k-2} all divisible by m (u >= 1).
inline std::optional<DivisibilityWitness> check_entrywise_divisibility(const WeightAssignment& w, const BigInt& m,
                                                                       int k, Coord horizon = 64) {
  detail::require_dimension(k);
  detail::require_modulus(m);
  detail::require_horizon(horizon);
  auto all = [&](const IntegerSequence& s, Coord lo, Coord hi) {
    for (Coord i = lo; i <= hi; ++i) {
      if (!detail::divides(m, s[i])) return false;
    }
    return true;
  };
  for (Coord u = 0; u <= horizon; ++u) {
    if (all(w.b, u, u + k - 1)) return DivisibilityWitness{u, DivisibilityCondition::ConsecutiveB};
    if (u >= 1 && all(w.c, u - 1, u + k - 2)) return DivisibilityWitness{u, DivisibilityCondition::ConsecutiveC};
  }
  return std::nullopt;
}

/// Least u <= horizon with b_j b_j' divisible by m for all distinct j, j' in u..u+2k-1.
inline std::optional<DivisibilityWitness> check_pairwise_product_divisibility(const WeightAssignment& w,
                                                                              const BigInt& m, int k,
                                                                              Coord horizon = 64) {
  detail::require_dimension(k);
  detail::require_modulus(m);
  detail::require_horizon(horizon);
  for (Coord u = 0; u <= horizon; ++u) {
    bool ok = true;
    for (Coord i = u; ok && i <= u + 2 * k - 1; ++i) {
      for (Coord j = i + 1; ok && j <= u + 2 * k - 1; ++j) {
        if (!detail::divides(m, w.b[i] * w.b[j])) ok = false;
      }
    }
    if (ok) return DivisibilityWitness{u, DivisibilityCondition::PairwiseB};
  }
  return std::nullopt;
}

struct ModularValue {
  BigInt residue;
  std::optional<DivisibilityWitness> witness;  // absent when brute force was used
  Coord truncation_height = 0;

  std::string certificate(int k) const {
    if (!witness) return "brute-force";
    return to_string(witness->condition) + " at u=" + std::to_string(witness->u) + ", truncated at height " +
           std::to_string(witness->truncation_height(k));
  }
};

/// The unbounded SSWCN mod m, via the bounded DP at a certified truncation
/// height when a divisibility hypothesis holds, else by brute force.
inline ModularValue unbounded_sswcn_mod(int k, int n, const WeightAssignment& w, const BigInt& m,
                                        Coord horizon = 64, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  detail::require_modulus(m);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  auto witness = check_entrywise_divisibility(w, m, k, horizon);
  if (!witness) witness = check_pairwise_product_divisibility(w, m, k, horizon);
  if (witness) {
    const Coord height = std::min(witness->truncation_height(k), max_path_height(k, n));
    return {bounded_sswcn_dp(k, height, n, w, m), witness, height};
  }
  if (catalan_number(k, n) <= BigInt(std::to_string(cap))) {
    return {poly_evaluate(sswcn_brute(k, n, cap), w, m), std::nullopt, max_path_height(k, n)};
  }
  throw Error(ErrorKind::Uncomputable,
              "no u <= " + std::to_string(horizon) + " makes k consecutive b's or c's divisible by " + m.get_str() +
                  ", no pairwise b-products window either, and C_{" + std::to_string(k) + "," + std::to_string(n) +
                  "} exceeds the brute-force cap");
}

}  // namespace sswcn
