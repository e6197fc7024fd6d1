#pragma once

// OEIS b-file parsing and emission, a write-through cache for fetched
// b-files, and prefix comparison of computed sequences against references.
//
// Network access needs cpp-httplib built with OpenSSL; define
// CPPHTTPLIB_OPENSSL_SUPPORT (the sswcn_net CMake target does) to enable it.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

#include "sswcn/error.hpp"
#include "sswcn/polynomial.hpp"

namespace sswcn {

struct SequenceRecord {
  std::string id;
  std::int64_t offset = 0;
  std::vector<BigInt> values;

  std::int64_t last_index() const { return offset + static_cast<std::int64_t>(values.size()) - 1; }

  const BigInt& at(std::int64_t index) const {
    if (index < offset || index > last_index()) {
      throw Error(ErrorKind::OutOfRange, id + " has no term " + std::to_string(index));
    }
    return values[static_cast<std::size_t>(index - offset)];
  }

  bool operator==(const SequenceRecord&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses `index value` lines; blank lines and `#` comments are skipped and
/// indices must run consecutively.
inline SequenceRecord parse_bfile(std::string_view text, std::string id = {}) {
  SequenceRecord rec{std::move(id), 0, {}};
  std::optional<std::int64_t> expected;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'index value'");
    }
    const std::string_view idx = line.substr(0, sp);
    const std::string_view val = detail::trim(line.substr(sp));
    if (!detail::is_integer_token(idx) || !detail::is_integer_token(val)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": malformed '" + std::string(line) + "'");
    }
    const std::int64_t index = std::stoll(std::string(idx));
    if (!expected) {
      rec.offset = index;
    } else if (index != *expected) {
      throw Error(ErrorKind::Gap, "line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                                      " follows " + std::to_string(*expected - 1));
    }
    expected = index + 1;
    rec.values.emplace_back(std::string(val));
  }
  return rec;
}

inline std::string emit_bfile(const SequenceRecord& rec) {
  std::string out;
  if (!rec.id.empty()) out += "# " + rec.id + "\n";
  for (std::size_t i = 0; i < rec.values.size(); ++i) {
    out += std::to_string(rec.offset + static_cast<std::int64_t>(i)) + " " + rec.values[i].get_str() + "\n";
  }
  return out;
}

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// GET `url`; nullopt means the request never produced a response.
using Transport = std::function<std::optional<HttpResponse>(const std::string& url)>;

inline std::optional<HttpResponse> default_transport(const std::string& url) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  const std::string scheme_host = "https://oeis.org";
  if (url.rfind(scheme_host, 0) != 0) return std::nullopt;
  httplib::SSLClient client("oeis.org", 443);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(url.substr(scheme_host.size()));
  if (!res) return std::nullopt;
  return HttpResponse{res->status, res->body};
#else
  (void)url;
  return std::nullopt;
#endif
}

enum class FetchSource { Cache, Network, Fixture };

inline std::string to_string(FetchSource s) {
  switch (s) {
    case FetchSource::Cache: return "cache";
    case FetchSource::Network: return "network";
    case FetchSource::Fixture: return "fixture";
  }
  return "unknown";
}

/// $OEIS_CACHE_DIR, else `.oeis-cache` under the working directory.
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("OEIS_CACHE_DIR"); env && *env) return env;
  return std::filesystem::current_path() / ".oeis-cache";
}

struct FetchOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  bool offline = false;
  std::optional<std::filesystem::path> fixtures_dir;
  Transport transport = default_transport;
};

struct FetchResult {
  SequenceRecord record;
  FetchSource source = FetchSource::Cache;
};

namespace detail {

inline std::string bfile_name(const std::string& id) {
  const bool ok = id.size() == 7 && id[0] == 'A' &&
                  std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!ok) throw Error(ErrorKind::InvalidArgument, "not an OEIS A-number: '" + id + "'");
  return "b" + id.substr(1) + ".txt";
}

inline std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to a sibling temp file, then renames over the target.
inline void write_atomically(const std::filesystem::path& target, const std::string& body) {
  std::filesystem::create_directories(target.parent_path());
  std::random_device rd;
  const auto tmp = target.parent_path() / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Fetch, "cannot write cache file " + tmp.string());
    out << body;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace detail

inline std::string bfile_url(const std::string& id) { return "https://oeis.org/" + id + "/" + detail::bfile_name(id); }

/// Cache, then network (unless offline), then fixtures. Network bodies are
/// written through to the cache verbatim.
inline FetchResult fetch_bfile(const std::string& id, const FetchOptions& options = {}) {
  const std::string name = detail::bfile_name(id);
  const auto cached = options.cache_dir / name;
  if (auto body = detail::read_file(cached)) return {parse_bfile(*body, id), FetchSource::Cache};
  if (!options.offline && options.transport) {
    if (auto res = options.transport(bfile_url(id))) {
      if (res->status != 200) {
        throw Error(ErrorKind::Fetch, bfile_url(id) + " returned HTTP " + std::to_string(res->status));
      }
      SequenceRecord rec = parse_bfile(res->body, id);
      detail::write_atomically(cached, res->body);
      return {std::move(rec), FetchSource::Network};
    }
  }
  if (options.fixtures_dir) {
    if (auto body = detail::read_file(*options.fixtures_dir / name)) return {parse_bfile(*body, id), FetchSource::Fixture};
  }
  throw Error(ErrorKind::Unavailable, id + (options.offline ? " is not cached and offline mode is on"
                                                           : " is not cached and could not be fetched"));
}

struct ComparisonReport {
  std::int64_t first_index = 0;
  std::int64_t overlap = 0;
  std::optional<std::int64_t> first_mismatch;

  bool matched() const noexcept { return !first_mismatch.has_value(); }
};

inline ComparisonReport compare_sequences(const SequenceRecord& computed, const SequenceRecord& reference) {
  const std::int64_t lo = std::max(computed.offset, reference.offset);
  const std::int64_t hi = std::min(computed.last_index(), reference.last_index());
  if (hi < lo) throw Error(ErrorKind::NoOverlap, computed.id + " and " + reference.id + " share no indices");
  ComparisonReport report{lo, hi - lo + 1, std::nullopt};
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (computed.at(i) != reference.at(i)) {
      report.first_mismatch = i;
      break;
    }
  }
  return report;
}

}  // namespace sswcn
