#pragma once

// Standard Young tableaux and the row-recording bijection with balanced
// ballot paths.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sswcn/error.hpp"
#include "sswcn/lattice.hpp"

namespace sswcn {

/// A standard Young tableau of any partition shape. Empty rows are dropped.
class Tableau {
 public:
  Tableau() = default;

  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) throw Error(ErrorKind::InvalidTableau, "empty row " + std::to_string(r + 1));
      if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
        throw Error(ErrorKind::InvalidTableau, "row lengths must be nonincreasing");
      }
      total += rows_[r].size();
    }
    row_of_.assign(total + 1, -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        const int v = rows_[r][c];
        if (v < 1 || static_cast<std::size_t>(v) > total || row_of_[static_cast<std::size_t>(v)] != -1) {
          throw Error(ErrorKind::InvalidTableau, "entries must be 1.." + std::to_string(total) + " each once");
        }
        row_of_[static_cast<std::size_t>(v)] = static_cast<int>(r);
        if (c > 0 && rows_[r][c - 1] >= v) throw Error(ErrorKind::InvalidTableau, "row " + std::to_string(r + 1) + " not increasing");
        if (r > 0 && rows_[r - 1][c] >= v) throw Error(ErrorKind::InvalidTableau, "column " + std::to_string(c + 1) + " not increasing");
      }
    }
  }

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return row_of_.empty() ? 0 : row_of_.size() - 1; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (const auto& r : rows_) s.push_back(r.size());
    return s;
  }

  bool is_rectangular() const {
    for (const auto& r : rows_) {
      if (r.size() != rows_.front().size()) return false;
    }
    return true;
  }

  /// Zero-based row holding entry v (1 <= v <= size()).
  int row_of(int v) const {
    if (v < 1 || static_cast<std::size_t>(v) > size()) throw Error(ErrorKind::OutOfRange, "no entry " + std::to_string(v));
    return row_of_[static_cast<std::size_t>(v)];
  }

  /// Row lengths as a k-dimensional point, padded with zeros.
  Point shape_point(int k) const {
    if (static_cast<std::size_t>(k) < rows_.size()) throw Error(ErrorKind::InvalidDimension, "more rows than k");
    std::vector<Coord> x(static_cast<std::size_t>(k), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) x[r] = static_cast<Coord>(rows_[r].size());
    return Point(std::move(x));
  }

  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

  /// One line per row, entries separated by single spaces.
  std::string to_string() const {
    std::ostringstream out;
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? " " : "") << r[c];
      out << '\n';
    }
    return out.str();
  }

  nlohmann::json to_json() const { return {{"shape", shape()}, {"rows", rows_}}; }

  static Tableau from_json(const nlohmann::json& j) { return Tableau(j.at("rows").get<std::vector<std::vector<int>>>()); }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

/// Entry i goes to row j when step i is e_j.
inline Tableau path_to_tableau(const BallotPath& path) {
  if (!path.is_balanced()) throw Error(ErrorKind::InvalidPath, "path_to_tableau needs a balanced path");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(path.dimension()));
  int i = 0;
  for (int d : path.steps()) rows[static_cast<std::size_t>(d - 1)].push_back(++i);
  return Tableau(std::move(rows));
}

/// Inverse of path_to_tableau. `k` defaults to the row count and is needed
/// only for the empty tableau.
inline BallotPath tableau_to_path(const Tableau& t, std::optional<int> k = std::nullopt) {
  if (!t.is_rectangular()) throw Error(ErrorKind::InvalidTableau, "tableau is not rectangular");
  const int dim = k.value_or(static_cast<int>(t.row_count()));
  if (t.size() > 0 && dim != static_cast<int>(t.row_count())) {
    throw Error(ErrorKind::InvalidTableau, "tableau has " + std::to_string(t.row_count()) + " rows, not " + std::to_string(dim));
  }
  std::vector<int> steps;
  steps.reserve(t.size());
  for (int i = 1; i <= static_cast<int>(t.size()); ++i) steps.push_back(t.row_of(i) + 1);
  return BallotPath(dim, std::move(steps));
}

/// The cells holding 1..m.
inline Tableau subtableau(const Tableau& t, std::size_t m) {
  if (m > t.size()) throw Error(ErrorKind::OutOfRange, "subtableau size " + std::to_string(m) + " exceeds " + std::to_string(t.size()));
  std::vector<std::vector<int>> rows;
  for (const auto& r : t.rows()) {
    std::vector<int> kept;
    for (int v : r) {
      if (static_cast<std::size_t>(v) <= m) kept.push_back(v);
    }
    rows.push_back(std::move(kept));
  }
  return Tableau(std::move(rows));
}

/// i in 1..N-1 is a descent when i+1 sits in a strictly lower row.
inline std::int64_t descents(const Tableau& t) {
  std::int64_t d = 0;
  for (int i = 1; i + 1 <= static_cast<int>(t.size()); ++i) d += t.row_of(i + 1) > t.row_of(i) ? 1 : 0;
  return d;
}

/// i in 1..N-1 is an ascent when it is not a descent.
inline std::int64_t ascents(const Tableau& t) {
  return t.size() == 0 ? 0 : static_cast<std::int64_t>(t.size()) - 1 - descents(t);
}

inline std::int64_t tally(const Tableau& t) { return ascents(t) - descents(t); }

}  // namespace sswcn
