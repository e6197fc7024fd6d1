#pragma once

// Lattice points in Z_{>=0}^k, the up/neutral/down step taxonomy, ballot and
// sub-ballot paths, and a pruned depth-first path enumerator.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sswcn/error.hpp"

namespace sswcn {

using Coord = std::int64_t;

/// A point of the k-dimensional lattice with nonnegative coordinates.
class Point {
 public:
  Point() = default;

  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {
    for (Coord c : coords_) {
      if (c < 0) throw Error(ErrorKind::InvalidArgument, "point coordinates must be nonnegative");
    }
  }

  Point(std::initializer_list<Coord> coords) : Point(std::vector<Coord>(coords)) {}

  static Point zero(int k) { return Point(std::vector<Coord>(static_cast<std::size_t>(k), 0)); }
  static Point constant(int k, Coord value) {
    return Point(std::vector<Coord>(static_cast<std::size_t>(k), value));
  }

  int dimension() const noexcept { return static_cast<int>(coords_.size()); }

  /// Zero-based access: operator[](0) is x_1.
  Coord operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  std::span<const Coord> coords() const noexcept { return coords_; }

  Coord sum() const { return std::accumulate(coords_.begin(), coords_.end(), Coord{0}); }

  /// The point reached by a unit step in `direction` (1-based).
  Point step(int direction) const {
    Point out = *this;
    ++out.coords_[static_cast<std::size_t>(direction - 1)];
    return out;
  }

  /// Subtracts x_k from every coordinate, so the last coordinate becomes 0.
  Point normalized() const {
    Point out = *this;
    if (!coords_.empty()) {
      const Coord last = coords_.back();
      for (Coord& c : out.coords_) c -= last;
    }
    return out;
  }

  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Coord> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Coord c : p.coords()) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

namespace detail {

inline void require_dimension(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be at least 2, got " + std::to_string(k));
}

/// Coefficient of x_i (1-based) in the semisymmetric height g_k.
constexpr Coord height_coefficient(int k, int i) noexcept { return static_cast<Coord>(k + 1 - 2 * i); }

inline Coord ss_height(std::span<const Coord> x) {
  const int k = static_cast<int>(x.size());
  Coord g = 0;
  for (int i = 1; i <= k; ++i) g += height_coefficient(k, i) * x[static_cast<std::size_t>(i - 1)];
  return g;
}

inline bool weakly_decreasing(std::span<const Coord> x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i - 1] < x[i]) return false;
  }
  return true;
}

}  // namespace detail

/// True iff x_1 >= x_2 >= ... >= x_k >= 0.
inline bool is_ballot_point(const Point& p) {
  detail::require_dimension(p.dimension());
  return detail::weakly_decreasing(p.coords());
}

enum class StepTag { Up, Neutral, Down };

struct StepClass {
  StepTag tag;
  int direction;

  bool operator==(const StepClass&) const = default;
};

inline StepClass step_class(int k, int direction) {
  detail::require_dimension(k);
  if (direction < 1 || direction > k) {
    throw Error(ErrorKind::InvalidDirection,
                "direction " + std::to_string(direction) + " outside 1.." + std::to_string(k));
  }
  const int half = k / 2;
  if (direction <= half) return {StepTag::Up, direction};
  if (k % 2 == 1 && direction == half + 1) return {StepTag::Neutral, direction};
  return {StepTag::Down, direction};
}

constexpr bool is_up_step(int k, int direction) noexcept { return direction <= k / 2; }
constexpr bool is_down_step(int k, int direction) noexcept { return direction > (k + 1) / 2; }

/// A path of unit steps e_{d} stored as direction indices in 1..k.
///
/// Construction checks that every point (origin included) is a ballot point;
/// the balanced property is a separate query since sub-ballot paths are valid
/// values of this type too.
class BallotPath {
 public:
  BallotPath() = default;

  BallotPath(int k, std::vector<int> steps) : BallotPath(k, std::move(steps), Point::zero(k)) {}

  BallotPath(int k, std::vector<int> steps, Point origin)
      : k_(k), steps_(std::move(steps)), origin_(std::move(origin)) {
    detail::require_dimension(k_);
    if (origin_.dimension() != k_) throw Error(ErrorKind::InvalidPath, "origin dimension mismatch");
    std::vector<Coord> x(origin_.coords().begin(), origin_.coords().end());
    if (!detail::weakly_decreasing(x)) throw Error(ErrorKind::InvalidPath, "origin is not a ballot point");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const int d = steps_[i];
      if (d < 1 || d > k_) {
        throw Error(ErrorKind::InvalidPath, "step " + std::to_string(i + 1) + " has direction " + std::to_string(d));
      }
      ++x[static_cast<std::size_t>(d - 1)];
      if (d > 1 && x[static_cast<std::size_t>(d - 2)] < x[static_cast<std::size_t>(d - 1)]) {
        throw Error(ErrorKind::InvalidPath, "ballot property fails after step " + std::to_string(i + 1));
      }
    }
  }

  int dimension() const noexcept { return k_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::span<const int> steps() const noexcept { return steps_; }
  const Point& origin() const noexcept { return origin_; }

  /// Intermediate points v_0 (the origin) through v_length.
  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    out.push_back(origin_);
    for (int d : steps_) out.push_back(out.back().step(d));
    return out;
  }

  Point endpoint() const {
    Point p = origin_;
    for (int d : steps_) p = p.step(d);
    return p;
  }

  /// Starts at the origin and uses every direction equally often.
  bool is_balanced() const {
    if (origin_ != Point::zero(k_)) return false;
    if (steps_.size() % static_cast<std::size_t>(k_) != 0) return false;
    return endpoint() == Point::constant(k_, static_cast<Coord>(steps_.size() / static_cast<std::size_t>(k_)));
  }

  bool operator==(const BallotPath&) const = default;

  /// "e1,e1,e2,..." (empty string for the empty path).
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) s += ",";
      s += "e" + std::to_string(steps_[i]);
    }
    return s;
  }

 private:
  int k_ = 2;
  std::vector<int> steps_;
  Point origin_ = Point::zero(2);
};

/// Pull-style depth-first enumerator of sub-ballot paths from `origin` to
/// `target`, trying directions 1..k in order at each depth.
///
/// A direction is rejected when it would break the ballot property, overshoot
/// the target coordinate, or lift the semisymmetric height past the bound.
/// Any ballot point below a ballot target can still be completed, so without
/// a height bound the search never dead-ends.
class PathEnumerator {
 public:
  PathEnumerator(int k, Point origin, Point target, std::optional<Coord> height_bound = std::nullopt)
      : k_(k), origin_(std::move(origin)), target_(std::move(target)), bound_(height_bound) {
    detail::require_dimension(k_);
    if (origin_.dimension() != k_ || target_.dimension() != k_) {
      throw Error(ErrorKind::InvalidEndpoint, "endpoint dimension mismatch");
    }
    if (!is_ballot_point(origin_) || !is_ballot_point(target_)) {
      throw Error(ErrorKind::InvalidEndpoint,
                  "endpoints " + origin_.to_string() + " and " + target_.to_string() + " must be ballot points");
    }
    for (int i = 0; i < k_; ++i) {
      if (origin_[i] > target_[i]) {
        throw Error(ErrorKind::InvalidEndpoint, origin_.to_string() + " is not below " + target_.to_string());
      }
    }
    length_ = static_cast<std::size_t>(target_.sum() - origin_.sum());
    x_.assign(origin_.coords().begin(), origin_.coords().end());
    heights_.reserve(length_ + 1);
    max_heights_.reserve(length_ + 1);
    heights_.push_back(detail::ss_height(x_));
    max_heights_.push_back(heights_.back());
    steps_.reserve(length_);
    next_dir_.assign(length_ + 1, 1);
    if (bound_ && heights_.back() > *bound_) done_ = true;
  }

  /// Advances to the next path; false once the stream is exhausted.
  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
    } else {
      if (steps_.empty()) {
        done_ = true;
        return false;
      }
      pop();
    }
    while (true) {
      const std::size_t depth = steps_.size();
      if (depth == length_) return true;
      int d = next_dir_[depth];
      for (; d <= k_; ++d) {
        if (admissible(d)) break;
      }
      if (d <= k_) {
        next_dir_[depth] = d + 1;
        push(d);
        next_dir_[depth + 1] = 1;
        continue;
      }
      if (depth == 0) {
        done_ = true;
        return false;
      }
      pop();
    }
  }

  std::span<const int> steps() const noexcept { return steps_; }
  /// Semisymmetric height of the current path (maximum over its points).
  Coord height() const noexcept { return max_heights_.back(); }
  /// g_k of every intermediate point of the current path.
  std::span<const Coord> point_heights() const noexcept { return heights_; }
  BallotPath path() const { return BallotPath(k_, steps_, origin_); }
  int dimension() const noexcept { return k_; }

 private:
  bool admissible(int d) const {
    const auto i = static_cast<std::size_t>(d - 1);
    if (x_[i] + 1 > target_[d - 1]) return false;
    if (d > 1 && x_[i - 1] < x_[i] + 1) return false;
    if (bound_ && heights_.back() + detail::height_coefficient(k_, d) > *bound_) return false;
    return true;
  }

  void push(int d) {
    ++x_[static_cast<std::size_t>(d - 1)];
    steps_.push_back(d);
    heights_.push_back(heights_.back() + detail::height_coefficient(k_, d));
    max_heights_.push_back(std::max(max_heights_.back(), heights_.back()));
  }

  void pop() {
    const int d = steps_.back();
    steps_.pop_back();
    --x_[static_cast<std::size_t>(d - 1)];
    heights_.pop_back();
    max_heights_.pop_back();
  }

  int k_;
  Point origin_;
  Point target_;
  std::optional<Coord> bound_;
  std::size_t length_ = 0;
  std::vector<Coord> x_;
  std::vector<int> steps_;
  std::vector<Coord> heights_;
  std::vector<Coord> max_heights_;
  std::vector<int> next_dir_;
  bool started_ = false;
  bool done_ = false;
};

/// Stream of balanced ballot paths of length kn, optionally height-bounded.
inline PathEnumerator enumerate_paths(int k, int n, std::optional<Coord> height_bound = std::nullopt) {
  detail::require_dimension(k);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  return PathEnumerator(k, Point::zero(k), Point::constant(k, n), height_bound);
}

inline PathEnumerator enumerate_sub_paths(int k, const Point& from, const Point& to,
                                          std::optional<Coord> height_bound = std::nullopt) {
  return PathEnumerator(k, from, to, height_bound);
}

/// Calls `visit(enumerator)` for every path in the stream; returns the count.
template <typename Visitor>
std::uint64_t for_each_path(PathEnumerator stream, Visitor&& visit) {
  std::uint64_t count = 0;
  while (stream.next()) {
    ++count;
    std::invoke(visit, std::as_const(stream));
  }
  return count;
}

inline std::vector<BallotPath> collect(PathEnumerator stream) {
  std::vector<BallotPath> out;
  while (stream.next()) out.push_back(stream.path());
  return out;
}

/// phi_{k,n}(x_1..x_k) = (n - x_k, ..., n - x_1).
inline Point reflect_point(int k, Coord n, const Point& p) {
  detail::require_dimension(k);
  if (p.dimension() != k) throw Error(ErrorKind::InvalidDimension, "point dimension differs from k");
  std::vector<Coord> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const Coord x = p[k - 1 - i];
    if (x > n) throw Error(ErrorKind::OutOfBox, p.to_string() + " has a coordinate above " + std::to_string(n));
    out[static_cast<std::size_t>(i)] = n - x;
  }
  return Point(std::move(out));
}

/// The balanced path whose point sequence is phi(v_kn), ..., phi(v_0).
inline BallotPath reverse_complement(const BallotPath& path) {
  if (!path.is_balanced()) throw Error(ErrorKind::InvalidPath, "reverse_complement needs a balanced path");
  const int k = path.dimension();
  const Coord n = static_cast<Coord>(path.length() / static_cast<std::size_t>(k));
  const std::vector<Point> pts = path.points();
  std::vector<int> steps;
  steps.reserve(path.length());
  for (std::size_t m = pts.size() - 1; m > 0; --m) {
    const Point from = reflect_point(k, n, pts[m]);
    const Point to = reflect_point(k, n, pts[m - 1]);
    for (int i = 0; i < k; ++i) {
      if (to[i] != from[i]) {
        steps.push_back(i + 1);
        break;
      }
    }
  }
  return BallotPath(k, std::move(steps));
}

}  // namespace sswcn
