#pragma once

// Sparse polynomials in the weight variables B(i), C(j) with GMP integer
// coefficients, and integer weight sequences to evaluate them at.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sswcn/error.hpp"

namespace sswcn {

using BigInt = mpz_class;

enum class VarKind : std::uint8_t { B, C };

/// B(index) or C(index). Orders all B before all C, then by index.
struct Variable {
  VarKind kind;
  std::int64_t index;

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

/// Product of variables with positive exponents, kept sorted by Variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;

  static Monomial variable(VarKind kind, std::int64_t index, std::uint32_t exponent = 1) {
    Monomial m;
    if (exponent > 0) m.factors_.push_back({Variable{kind, index}, exponent});
    return m;
  }

  /// Builds from unsorted (variable, exponent) pairs, merging repeats.
  static Monomial from_factors(std::vector<Factor> factors) {
    std::map<Variable, std::uint32_t> merged;
    for (const auto& [v, e] : factors) merged[v] += e;
    Monomial m;
    for (const auto& [v, e] : merged) {
      if (e > 0) m.factors_.push_back({v, e});
    }
    return m;
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::uint32_t exponent(Variable v) const {
    for (const auto& [w, e] : factors_) {
      if (w == v) return e;
    }
    return 0;
  }

  std::uint64_t degree(VarKind kind) const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : factors_) {
      if (v.kind == kind) d += e;
    }
    return d;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
      if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        out.factors_.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        out.factors_.push_back(*b++);
      } else {
        out.factors_.push_back({a->first, a->second + b->second});
        ++a;
        ++b;
      }
    }
    return out;
  }

  /// Drops every factor of the given kind (substitutes 1 for it).
  Monomial without(VarKind kind) const {
    Monomial out;
    for (const auto& f : factors_) {
      if (f.first.kind != kind) out.factors_.push_back(f);
    }
    return out;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  /// Canonical text: B block with ascending index, then C block with
  /// descending index, e.g. `B0^2*B2*C4^2*C2*C0`; the empty product is `1`.
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    auto emit = [&s](const Factor& f) {
      if (!s.empty()) s += "*";
      s += (f.first.kind == VarKind::B ? "B" : "C") + std::to_string(f.first.index);
      if (f.second > 1) s += "^" + std::to_string(f.second);
    };
    for (const auto& f : factors_) {
      if (f.first.kind == VarKind::B) emit(f);
    }
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      if (it->first.kind == VarKind::C) emit(*it);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;
};

/// Sparse polynomial: monomial -> nonzero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Monomial{}, BigInt(constant));
  }
  Polynomial(const Monomial& m, BigInt coeff = 1) {  // NOLINT(google-explicit-constructor)
    if (coeff != 0) terms_.emplace(m, std::move(coeff));
  }

  static Polynomial variable(VarKind kind, std::int64_t index) { return Polynomial(Monomial::variable(kind, index)); }

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  /// Sets every variable of `kind` to 1.
  Polynomial specialize_to_one(VarKind kind) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m.without(kind), c);
    return out;
  }

  bool operator==(const Polynomial&) const = default;

  /// Terms in ascending monomial order joined by " + " / " - ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      BigInt mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str() + "*";
        s += m.to_string();
      }
    }
    return s;
  }

  /// [{"coeff": "2", "b": {"0": 1}, "c": {"4": 1, "2": 2}}, ...]
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
      nlohmann::json b = nlohmann::json::object();
      nlohmann::json cc = nlohmann::json::object();
      for (const auto& [v, e] : m.factors()) {
        (v.kind == VarKind::B ? b : cc)[std::to_string(v.index)] = e;
      }
      arr.push_back({{"coeff", c.get_str()}, {"b", b}, {"c", cc}});
    }
    return arr;
  }

  static Polynomial from_json(const nlohmann::json& j) {
    Polynomial p;
    for (const auto& term : j) {
      std::vector<Monomial::Factor> factors;
      for (const auto& [key, kind] : {std::pair{"b", VarKind::B}, std::pair{"c", VarKind::C}}) {
        for (const auto& [idx, e] : term.at(key).items()) {
          factors.push_back({Variable{kind, std::stoll(idx)}, e.get<std::uint32_t>()});
        }
      }
      p.add_term(Monomial::from_factors(std::move(factors)), BigInt(term.at("coeff").get<std::string>()));
    }
    return p;
  }

 private:
  std::map<Monomial, BigInt> terms_;
};

/// An infinite integer sequence: explicit prefix, then a constant fill.
class IntegerSequence {
 public:
  IntegerSequence() = default;
  IntegerSequence(std::vector<BigInt> prefix, BigInt fill) : prefix_(std::move(prefix)), fill_(std::move(fill)) {}

  static IntegerSequence constant(BigInt value) { return IntegerSequence({}, std::move(value)); }

  const BigInt& operator[](std::int64_t i) const {
    if (i < 0) throw Error(ErrorKind::OutOfRange, "negative weight index " + std::to_string(i));
    const auto idx = static_cast<std::size_t>(i);
    return idx < prefix_.size() ? prefix_[idx] : fill_;
  }

  const std::vector<BigInt>& prefix() const noexcept { return prefix_; }
  const BigInt& fill() const noexcept { return fill_; }

  /// Parses `1,0,2,fill=0`. A missing `fill=` entry means fill 1.
  static IntegerSequence parse(std::string_view text) {
    std::vector<BigInt> prefix;
    BigInt fill = 1;
    bool saw_fill = false;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string item(text.substr(pos, comma - pos));
      while (!item.empty() && item.front() == ' ') item.erase(item.begin());
      while (!item.empty() && item.back() == ' ') item.pop_back();
      if (item.rfind("fill=", 0) == 0) {
        if (saw_fill) throw Error(ErrorKind::Parse, "duplicate fill= in weight sequence");
        fill = parse_integer(item.substr(5));
        saw_fill = true;
      } else {
        if (saw_fill) throw Error(ErrorKind::Parse, "fill= must be the last entry");
        prefix.push_back(parse_integer(item));
      }
      pos = comma + 1;
    }
    return IntegerSequence(std::move(prefix), std::move(fill));
  }

  std::string to_string() const {
    std::string s;
    for (const auto& v : prefix_) s += v.get_str() + ",";
    return s + "fill=" + fill_.get_str();
  }

  bool operator==(const IntegerSequence&) const = default;

 private:
  static BigInt parse_integer(const std::string& s) {
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "not an integer: '" + s + "'");
    return v;
  }

  std::vector<BigInt> prefix_;
  BigInt fill_ = 1;
};

/// Values substituted for B(i) (from `b`) and C(j) (from `c`).
struct WeightAssignment {
  IntegerSequence b = IntegerSequence::constant(1);
  IntegerSequence c = IntegerSequence::constant(1);

  static WeightAssignment all_ones() { return {}; }

  const BigInt& value(Variable v) const { return v.kind == VarKind::B ? b[v.index] : c[v.index]; }
};

namespace detail {

inline BigInt reduce(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

inline void require_modulus(const std::optional<BigInt>& m) {
  if (m && *m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
}

}  // namespace detail

inline BigInt evaluate(const Monomial& mono, const WeightAssignment& w, const std::optional<BigInt>& modulus = {}) {
  detail::require_modulus(modulus);
  BigInt acc = 1;
  for (const auto& [v, e] : mono.factors()) {
    BigInt term;
    if (modulus) {
      const BigInt base = detail::reduce(w.value(v), *modulus);
      mpz_powm_ui(term.get_mpz_t(), base.get_mpz_t(), e, modulus->get_mpz_t());
      acc = acc * term % *modulus;
    } else {
      mpz_pow_ui(term.get_mpz_t(), w.value(v).get_mpz_t(), e);
      acc *= term;
    }
  }
  return modulus ? detail::reduce(acc, *modulus) : acc;
}

/// Substitutes b_i for B(i) and c_j for C(j); with a modulus the result is in [0, m).
inline BigInt poly_evaluate(const Polynomial& p, const WeightAssignment& w,
                            const std::optional<BigInt>& modulus = std::nullopt) {
  detail::require_modulus(modulus);
  BigInt sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c * evaluate(m, w, modulus);
  return modulus ? detail::reduce(sum, *modulus) : sum;
}

inline Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

}  // namespace sswcn
