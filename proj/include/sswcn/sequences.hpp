#pragma once

// Height and Narayana triangles, and verifiers that compare closed formulas
// against brute-force and transfer-matrix values.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sswcn/counting.hpp"
#include "sswcn/error.hpp"
#include "sswcn/height.hpp"
#include "sswcn/lattice.hpp"
#include "sswcn/polynomial.hpp"

namespace sswcn {

enum class TriangleKind { Height, Narayana };

inline std::string to_string(TriangleKind kind) { return kind == TriangleKind::Height ? "height" : "narayana"; }

/// One row of D' (keys are exact heights u) or N'' (keys are peak counts).
/// Only nonzero entries are stored.
struct TriangleRow {
  TriangleKind kind = TriangleKind::Height;
  int k = 2;
  int n = 0;
  std::map<std::int64_t, BigInt> entries;

  BigInt at(std::int64_t key) const {
    auto it = entries.find(key);
    return it == entries.end() ? BigInt(0) : it->second;
  }

  BigInt sum() const {
    BigInt s = 0;
    for (const auto& [key, v] : entries) s += v;
    return s;
  }

  /// Smallest key shown when the row is printed densely.
  std::int64_t first_key() const {
    if (kind == TriangleKind::Narayana || n == 0) return 0;
    return min_path_height(k);
  }

  std::int64_t last_key() const { return entries.empty() ? first_key() : std::max(first_key(), entries.rbegin()->first); }

  /// (key, count) for every key from first_key() to last_key(), zeros included.
  std::vector<std::pair<std::int64_t, BigInt>> dense() const {
    std::vector<std::pair<std::int64_t, BigInt>> out;
    for (std::int64_t key = first_key(); key <= last_key(); ++key) out.emplace_back(key, at(key));
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [key, v] : entries) e[std::to_string(key)] = v.get_str();
    return {{"kind", to_string(kind)}, {"k", k}, {"n", n}, {"entries", e}};
  }
};

enum class TriangleMethod { Difference, Enumeration };

/// D'_{k,u,n} for every u. Difference takes successive differences of the
/// DP counts over u; Enumeration buckets path heights directly.
inline TriangleRow height_triangle_row(int k, int n, TriangleMethod method = TriangleMethod::Difference,
                                       std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  TriangleRow row{TriangleKind::Height, k, n, {}};
  if (method == TriangleMethod::Enumeration) {
    detail::require_cap(k, n, cap);
    for_each_path(enumerate_paths(k, n), [&](const PathEnumerator& e) { row.entries[e.height()] += 1; });
    return row;
  }
  BigInt previous = 0;
  for (Coord u = 0; u <= max_path_height(k, n); ++u) {
    const BigInt current = bounded_catalan(k, u, n);
    if (current != previous) row.entries[u] = current - previous;
    previous = current;
  }
  return row;
}

/// N''_{k,alpha,n}: balanced paths bucketed by semisymmetric peak count.
inline TriangleRow narayana_row(int k, int n, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  detail::require_cap(k, n, cap);
  TriangleRow row{TriangleKind::Narayana, k, n, {}};
  for_each_path(enumerate_paths(k, n), [&](const PathEnumerator& e) { row.entries[count_ss_peaks(k, e.steps())] += 1; });
  return row;
}

/// Both rows from one enumeration pass.
inline std::pair<TriangleRow, TriangleRow> triangle_rows(int k, int n, std::uint64_t cap = kDefaultBruteForceCap) {
  detail::require_dimension(k);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  detail::require_cap(k, n, cap);
  TriangleRow height{TriangleKind::Height, k, n, {}};
  TriangleRow peaks{TriangleKind::Narayana, k, n, {}};
  for_each_path(enumerate_paths(k, n), [&](const PathEnumerator& e) {
    height.entries[e.height()] += 1;
    peaks.entries[count_ss_peaks(k, e.steps())] += 1;
  });
  return {std::move(height), std::move(peaks)};
}

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  std::string witness;
  bool passed = true;

  nlohmann::json to_json() const {
    nlohmann::json j = {{"label", label}, {"expected", expected}, {"actual", actual}, {"passed", passed}};
    if (!witness.empty()) j["witness"] = witness;
    return j;
  }
};

struct VerificationRecord {
  std::string name;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.passed ? 0 : 1;
    return f;
  }

  void expect(std::string label, const std::string& expected, const std::string& actual, std::string witness = {}) {
    checks.push_back({std::move(label), expected, actual, std::move(witness), expected == actual});
  }

  void expect_true(std::string label, bool ok, std::string expected, std::string actual, std::string witness = {}) {
    checks.push_back({std::move(label), std::move(expected), std::move(actual), std::move(witness), ok});
  }

  /// Throws formula-violation naming the first failing check.
  void throw_if_failed() const {
    for (const auto& c : checks) {
      if (!c.passed) {
        throw Error(ErrorKind::FormulaViolation,
                    name + ": " + c.label + ": expected " + c.expected + ", got " + c.actual);
      }
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    return {{"name", name}, {"passed", passed()}, {"checks", arr}};
  }
};

namespace detail {

inline Polynomial monomial_power(std::initializer_list<std::int64_t> b_indices, int n) {
  std::vector<Monomial::Factor> factors;
  for (auto i : b_indices) factors.push_back({Variable{VarKind::B, i}, static_cast<std::uint32_t>(n)});
  return Polynomial(Monomial::from_factors(std::move(factors)));
}

inline WeightAssignment with_unit_c(const WeightAssignment& w) { return {w.b, IntegerSequence::constant(1)}; }

inline std::string describe(const WeightAssignment& w) { return "b=" + w.b.to_string() + " c=" + w.c.to_string(); }

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt binomial(unsigned long n, long r) {
  if (r < 0 || static_cast<unsigned long>(r) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(r));
  return out;
}

}  // namespace detail

/// Deterministic assignments with b_i uniform in [-bound, bound] and c all ones.
inline std::vector<WeightAssignment> random_assignments(std::size_t count, std::uint32_t seed, int bound = 5,
                                                        std::size_t prefix = 16) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<WeightAssignment> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<BigInt> b;
    for (std::size_t j = 0; j < prefix; ++j) b.emplace_back(dist(rng));
    out.push_back({IntegerSequence(std::move(b), dist(rng)), IntegerSequence::constant(1)});
  }
  return out;
}

/// Bounded sums at the least heights collapse to one path: b0^n for k = 3
/// (u = 2, 3), (b0 b3)^n for k = 4 (u = 4, 5), (b0 b4)^n for k = 5 (u = 6, 7).
inline VerificationRecord verify_min_u_formulas(int k, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  Polynomial expected;
  Coord u0 = 0;
  switch (k) {
    case 3:
      expected = detail::monomial_power({0}, n);
      u0 = 2;
      break;
    case 4:
      expected = detail::monomial_power({0, 3}, n);
      u0 = 4;
      break;
    case 5:
      expected = detail::monomial_power({0, 4}, n);
      u0 = 6;
      break;
    default: throw Error(ErrorKind::InvalidArgument, "least-height formulas exist for k = 3, 4, 5 only");
  }
  VerificationRecord rec{"min-u k=" + std::to_string(k) + " n=" + std::to_string(n), {}};
  for (Coord u : {u0, u0 + 1}) {
    const Polynomial full = bounded_sswcn_brute(k, u, n);
    rec.expect("u=" + std::to_string(u), expected.to_string(), full.specialize_to_one(VarKind::C).to_string(),
               full.to_string());
  }
  return rec;
}

/// Closed form for the (3,4) sequence via characteristic roots; complex when
/// the discriminant is negative. Requires a nonzero discriminant.
inline long double closed_form_3_4(long double b0, long double b2, int n) {
  using cld = std::complex<long double>;
  const long double disc = b0 * b0 + 10 * b0 * b2 + 9 * b2 * b2;
  const cld s = std::sqrt(cld(disc, 0));
  const cld c1 = (b0 - 3 * b2 + s) / (2.0L * s);
  const cld c2 = (-b0 + 3 * b2 + s) / (2.0L * s);
  const cld r1 = (b0 + 3 * b2 + s) / 2.0L;
  const cld r2 = (b0 + 3 * b2 - s) / 2.0L;
  return (c1 * std::pow(r1, n) + c2 * std::pow(r2, n)).real();
}

/// a(n) = (b0 + 3 b2) a(n-1) + b0 b2 a(n-2) exactly, and the closed form
/// within 1e-9 relative error when the discriminant is nonzero.
inline VerificationRecord verify_recurrence_3_4(int n_max, const std::vector<WeightAssignment>& assignments) {
  if (n_max < 2) throw Error(ErrorKind::InvalidArgument, "n_max must be at least 2");
  VerificationRecord rec{"recurrence-3-4", {}};
  for (const auto& given : assignments) {
    const WeightAssignment w = detail::with_unit_c(given);
    const std::vector<BigInt> a = bounded_sswcn_dp_sequence(3, 4, n_max, w);
    const BigInt& b0 = w.b[0];
    const BigInt& b2 = w.b[2];
    const std::string who = detail::describe(w);
    for (int n = 2; n <= n_max; ++n) {
      const BigInt rhs = (b0 + 3 * b2) * a[n - 1] + b0 * b2 * a[n - 2];
      rec.expect("recurrence n=" + std::to_string(n), rhs.get_str(), a[n].get_str(), who);
    }
    const BigInt disc = b0 * b0 + 10 * b0 * b2 + 9 * b2 * b2;
    if (disc == 0) continue;
    for (int n = 0; n <= n_max; ++n) {
      const long double approx = closed_form_3_4(b0.get_d(), b2.get_d(), n);
      const long double exact = a[n].get_d();
      const long double err = std::fabs(approx - exact) / std::max(1.0L, std::fabs(exact));
      rec.expect_true("closed form n=" + std::to_string(n), err <= 1e-9L, a[n].get_str(),
                      std::to_string(static_cast<double>(approx)), who);
    }
  }
  return rec;
}

/// Compares DP values at (4,6) and (5,8), c all ones, with the closed forms
/// b0 bj (2 b0 bj)^{n-1} as stated and b0 bj (bj (b0 + bj))^{n-1}, j = 3 or 4.
inline VerificationRecord verify_closed_4_6_and_5_8(int n_max, const std::vector<WeightAssignment>& assignments) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be at least 1");
  VerificationRecord rec{"closed-4-6-5-8", {}};
  for (const auto& given : assignments) {
    const WeightAssignment w = detail::with_unit_c(given);
    const std::string who = detail::describe(w);
    for (auto [k, u, j] : {std::tuple{4, Coord{6}, 3}, std::tuple{5, Coord{8}, 4}}) {
      const std::vector<BigInt> a = bounded_sswcn_dp_sequence(k, u, n_max, w);
      const BigInt& b0 = w.b[0];
      const BigInt& bj = w.b[j];
      const std::string tag = "(" + std::to_string(k) + "," + std::to_string(u) + ") n=";
      for (int n = 1; n <= n_max; ++n) {
        const auto e = static_cast<unsigned long>(n - 1);
        rec.expect("stated " + tag + std::to_string(n), BigInt(b0 * bj * detail::pow(2 * b0 * bj, e)).get_str(),
                   a[n].get_str(), who);
        rec.expect("corrected " + tag + std::to_string(n), BigInt(b0 * bj * detail::pow(bj * (b0 + bj), e)).get_str(),
                   a[n].get_str(), who);
      }
    }
  }
  return rec;
}

/// Rightmost height-triangle entry: equals C_{k/2,n}^2 for even k and is at
/// least C_{ceil(k/2),n} C_{floor(k/2),n} for every k.
inline VerificationRecord verify_rightmost_entries(int k, int n) {
  detail::require_dimension(k);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  VerificationRecord rec{"rightmost k=" + std::to_string(k) + " n=" + std::to_string(n), {}};
  const TriangleRow row = height_triangle_row(k, n);
  const Coord top = max_path_height(k, n);
  const BigInt last = row.at(top);
  rec.expect("rightmost key", std::to_string(top), std::to_string(row.last_key()));
  const BigInt lower = catalan_number((k + 1) / 2, n) * catalan_number(k / 2, n);
  rec.expect_true("lower bound", last >= lower, ">= " + lower.get_str(), last.get_str());
  if (k % 2 == 0) {
    const BigInt c = catalan_number(k / 2, n);
    rec.expect("square", BigInt(c * c).get_str(), last.get_str());
  }
  return rec;
}

/// C(3n,n) - 2 C(3n,n-1) + C(3n,n-2).
inline BigInt dprime_3_2n_binomial(int n) {
  const auto m = static_cast<unsigned long>(3 * n);
  return detail::binomial(m, n) - 2 * detail::binomial(m, n - 1) + detail::binomial(m, n - 2);
}

/// Closed walks of length 3n in the nonnegative quadrant with steps
/// A=(1,0), B=(-1,1), C=(0,-1), every A preceding the first C.
inline BigInt quadrant_walks_3n(int n) {
  const int len = 3 * n;
  const int side = len + 1;
  // phase 0: no C yet; phase 1: a C has occurred, so no further A.
  std::vector<BigInt> cur(2 * static_cast<std::size_t>(side * side), 0);
  auto at = [side](int phase, int x, int y) {
    return static_cast<std::size_t>((phase * side + x) * side + y);
  };
  cur[at(0, 0, 0)] = 1;
  for (int step = 0; step < len; ++step) {
    std::vector<BigInt> next(cur.size(), 0);
    for (int phase = 0; phase < 2; ++phase) {
      for (int x = 0; x < side; ++x) {
        for (int y = 0; y < side; ++y) {
          const BigInt& v = cur[at(phase, x, y)];
          if (v == 0) continue;
          if (phase == 0 && x + 1 < side) next[at(0, x + 1, y)] += v;
          if (x > 0 && y + 1 < side) next[at(phase, x - 1, y + 1)] += v;
          if (y > 0) next[at(1, x, y - 1)] += v;
        }
      }
    }
    cur = std::move(next);
  }
  return cur[at(0, 0, 0)] + cur[at(1, 0, 0)];
}

inline BigInt dprime_3_2n_dp(int n) {
  return bounded_catalan(3, 2 * n, n) - bounded_catalan(3, 2 * n - 1, n);
}

/// D'_{3,2n,n} three ways: DP difference, binomial expression, walk count.
inline VerificationRecord verify_dprime_3_2n(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be at least 1");
  VerificationRecord rec{"dprime-3-2n", {}};
  for (int n = 1; n <= n_max; ++n) {
    const std::string dp = dprime_3_2n_dp(n).get_str();
    rec.expect("binomial n=" + std::to_string(n), dprime_3_2n_binomial(n).get_str(), dp);
    rec.expect("quadrant walks n=" + std::to_string(n), quadrant_walks_3n(n).get_str(), dp);
  }
  return rec;
}

/// For even k, N''_{k,1,n} = C_{k/2,n}^2 = D'_{k, k^2 n/4, n}.
inline VerificationRecord verify_narayana_one_peak(int k, int n) {
  detail::require_dimension(k);
  if (k % 2 != 0) throw Error(ErrorKind::InvalidArgument, "one-peak identity needs even k");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  VerificationRecord rec{"narayana-one-peak k=" + std::to_string(k) + " n=" + std::to_string(n), {}};
  const auto [height, peaks] = triangle_rows(k, n);
  const BigInt c = catalan_number(k / 2, n);
  rec.expect("square", BigInt(c * c).get_str(), peaks.at(1).get_str());
  rec.expect("rightmost height entry", height.at(max_path_height(k, n)).get_str(), peaks.at(1).get_str());
  return rec;
}

/// Pairs (k, u) in the given ranges with bounded_catalan(k,u,n) = 2^{n-1} for n = 1..n_max.
inline std::vector<std::pair<int, Coord>> scan_power_of_two(int k_min, int k_max, Coord u_max, int n_max) {
  std::vector<std::pair<int, Coord>> hits;
  for (int k = std::max(2, k_min); k <= k_max; ++k) {
    for (Coord u = 0; u <= u_max; ++u) {
      const std::vector<BigInt> a = bounded_sswcn_dp_sequence(k, u, n_max, WeightAssignment::all_ones());
      bool ok = true;
      for (int n = 1; ok && n <= n_max; ++n) ok = a[n] == detail::pow(2, static_cast<unsigned long>(n - 1));
      if (ok) hits.emplace_back(k, u);
    }
  }
  return hits;
}

/// Default assignments for the verifiers: all ones, then five seeded random ones.
inline std::vector<WeightAssignment> default_assignments() {
  std::vector<WeightAssignment> out{WeightAssignment::all_ones()};
  for (auto& w : random_assignments(5, 20240611)) out.push_back(std::move(w));
  return out;
}

inline const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names{"min-u", "recurrence-3-4", "closed-4-6-5-8",
                                              "rightmost", "dprime-3-2n", "narayana-one-peak"};
  return names;
}

/// Runs one named verifier over its default parameter range.
inline std::vector<VerificationRecord> run_verifier(const std::string& name) {
  std::vector<VerificationRecord> out;
  if (name == "min-u") {
    for (int k : {3, 4, 5}) {
      for (int n = 1; n <= 3; ++n) out.push_back(verify_min_u_formulas(k, n));
    }
  } else if (name == "recurrence-3-4") {
    out.push_back(verify_recurrence_3_4(10, default_assignments()));
  } else if (name == "closed-4-6-5-8") {
    out.push_back(verify_closed_4_6_and_5_8(10, default_assignments()));
  } else if (name == "rightmost") {
    for (int k : {2, 3, 4}) {
      for (int n = 1; n <= 4; ++n) out.push_back(verify_rightmost_entries(k, n));
    }
  } else if (name == "dprime-3-2n") {
    out.push_back(verify_dprime_3_2n(7));
  } else if (name == "narayana-one-peak") {
    for (int k : {2, 4}) {
      for (int n = 1; n <= 4; ++n) out.push_back(verify_narayana_one_peak(k, n));
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown verifier '" + name + "'");
  }
  return out;
}

}  // namespace sswcn
