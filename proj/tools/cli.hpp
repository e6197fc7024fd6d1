#pragma once

// Command dispatch for the `sswcn` executable. Kept in a header so the test
// suite can drive it in-process.

#include <algorithm>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sswcn/sswcn.hpp"

#ifndef SSWCN_FIXTURE_DIR
#define SSWCN_FIXTURE_DIR "data/oeis"
#endif

namespace sswcn::cli {

enum class Format { Plain, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct WeightFlags {
  std::string b;
  std::string c;

  WeightAssignment assignment() const {
    WeightAssignment w;
    if (!b.empty()) w.b = IntegerSequence::parse(b);
    if (!c.empty()) w.c = IntegerSequence::parse(c);
    return w;
  }
};

inline BigInt parse_big(const std::string& s, const char* what) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, std::string(what) + " is not an integer: '" + s + "'");
  return v;
}

inline std::optional<BigInt> parse_modulus(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_big(s, "--mod");
}

/// "1,1,2" or "e1,e1,e2".
inline std::vector<int> parse_steps(const std::string& text) {
  std::vector<int> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && (item[0] == 'e' || item[0] == 'E')) item.erase(0, 1);
    try {
      std::size_t used = 0;
      steps.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad step '" + item + "'");
    }
  }
  return steps;
}

/// Rows separated by '/', entries by ','.
inline Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, '/')) rows.push_back(parse_steps(row));
  return Tableau(std::move(rows));
}

inline nlohmann::json steps_json(std::span<const int> steps) { return std::vector<int>(steps.begin(), steps.end()); }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Semisymmetric weighted Catalan numbers: enumeration, counting and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_name_, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    add_enumerate(app);
    add_count(app);
    add_bounded(app);
    add_sswcn(app);
    add_triangle(app);
    add_period(app);
    add_verify(app);
    add_oeis_check(app);
    add_syt(app);
    add_scan(app);
    add_transfer(app);

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "usage error: " << e.what() << "\n" << app.help();
      return kExitUsage;
    }
    format_ = format_name_ == "json" ? Format::Json : format_name_ == "csv" ? Format::Csv : Format::Plain;
    try {
      return action_();
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

 private:
  void emit_json(const nlohmann::json& j) { out_ << j.dump(2) << "\n"; }

  void add_enumerate(CLI::App& app) {
    auto* sub = app.add_subcommand("enumerate", "List balanced ballot paths of length kn");
    sub->add_option("k", k_)->required();
    sub->add_option("n", n_)->required();
    sub->add_option("--bound", bound_, "Semisymmetric height bound");
    sub->callback([this] {
      action_ = [this] {
        std::optional<Coord> bound;
        if (bound_ >= 0) bound = bound_;
        PathEnumerator e = enumerate_paths(k_, n_, bound);
        nlohmann::json arr = nlohmann::json::array();
        if (format_ == Format::Csv) out_ << "index,steps,height\n";
        std::size_t i = 0;
        while (e.next()) {
          const BallotPath p = e.path();
          if (format_ == Format::Json) {
            arr.push_back({{"steps", steps_json(p.steps())}, {"height", e.height()}});
          } else if (format_ == Format::Csv) {
            out_ << i << ",\"" << p.to_string() << "\"," << e.height() << "\n";
          } else {
            out_ << p.to_string() << "\n";
          }
          ++i;
        }
        if (format_ == Format::Json) emit_json(arr);
        return kExitOk;
      };
    });
  }

  void add_count(CLI::App& app) {
    auto* sub = app.add_subcommand("count", "k-dimensional Catalan number");
    sub->add_option("k", k_)->required();
    sub->add_option("n", n_)->required();
    sub->callback([this] {
      action_ = [this] {
        const BigInt c = catalan_number(k_, n_);
        emit_value(c, {{"k", std::to_string(k_)}, {"n", std::to_string(n_)}}, "count");
        return kExitOk;
      };
    });
  }

  void add_weights(CLI::App* sub) {
    sub->add_option("--b", weights_.b, "b sequence, e.g. 1,0,2,fill=0");
    sub->add_option("--c", weights_.c, "c sequence, e.g. 1,1,fill=1");
  }

  void add_bounded(CLI::App& app) {
    auto* sub = app.add_subcommand("bounded", "Height-bounded weighted count via the transfer matrix");
    sub->add_option("k", k_)->required();
    sub->add_option("u", u_)->required();
    sub->add_option("n", n_)->required();
    add_weights(sub);
    sub->add_option("--mod", mod_, "Reduce modulo m");
    sub->callback([this] {
      action_ = [this] {
        const BigInt v = bounded_sswcn_dp(k_, u_, n_, weights_.assignment(), parse_modulus(mod_));
        emit_value(v, {{"k", std::to_string(k_)}, {"u", std::to_string(u_)}, {"n", std::to_string(n_)}}, "value");
        return kExitOk;
      };
    });
  }

  void add_sswcn(CLI::App& app) {
    auto* sub = app.add_subcommand("sswcn", "Unbounded weighted count, numeric or symbolic");
    sub->add_option("k", k_)->required();
    sub->add_option("n", n_)->required();
    sub->add_flag("--symbolic", symbolic_, "Print the polynomial in B(i), C(j)");
    add_weights(sub);
    sub->add_option("--mod", mod_, "Reduce modulo m");
    sub->callback([this] {
      action_ = [this] {
        if (symbolic_) {
          const Polynomial p = sswcn_brute(k_, n_);
          if (format_ == Format::Json) {
            emit_json({{"k", k_}, {"n", n_}, {"polynomial", p.to_json()}});
          } else if (format_ == Format::Csv) {
            out_ << "coeff,monomial\n";
            for (const auto& [m, c] : p.terms()) out_ << c.get_str() << "," << m.to_string() << "\n";
          } else {
            out_ << p.to_string() << "\n";
          }
          return kExitOk;
        }
        const BigInt v = sswcn_value(k_, n_, weights_.assignment(), parse_modulus(mod_));
        emit_value(v, {{"k", std::to_string(k_)}, {"n", std::to_string(n_)}}, "value");
        return kExitOk;
      };
    });
  }

  void add_triangle(CLI::App& app) {
    auto* sub = app.add_subcommand("triangle", "Rows of the height (D') or Narayana (N'') triangle");
    sub->add_option("kind", triangle_kind_)->required()->check(CLI::IsMember({"height", "narayana"}));
    sub->add_option("k", k_)->required();
    sub->add_option("--rows", rows_, "Last row n")->required();
    sub->add_option("--first", first_row_, "First row n (default 1 for height, 0 for narayana)");
    sub->add_option("--method", method_, "Height rows: difference or enumeration")
        ->check(CLI::IsMember({"difference", "enumeration"}));
    sub->callback([this] {
      action_ = [this] {
        const bool height = triangle_kind_ == "height";
        const int first = first_row_ >= 0 ? first_row_ : (height ? 1 : 0);
        const TriangleMethod method = method_ == "enumeration" ? TriangleMethod::Enumeration : TriangleMethod::Difference;
        std::vector<TriangleRow> rows;
        for (int n = first; n <= rows_; ++n) rows.push_back(height ? height_triangle_row(k_, n, method) : narayana_row(k_, n));
        if (format_ == Format::Json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& r : rows) arr.push_back(r.to_json());
          emit_json(arr);
        } else if (format_ == Format::Csv) {
          out_ << "k,n,stat,count\n";
          for (const auto& r : rows) {
            for (const auto& [key, v] : r.dense()) out_ << r.k << "," << r.n << "," << key << "," << v.get_str() << "\n";
          }
        } else {
          for (const auto& r : rows) {
            out_ << r.n << ":";
            for (const auto& [key, v] : r.dense()) out_ << " " << v.get_str();
            out_ << "\n";
          }
        }
        return kExitOk;
      };
    });
  }

  void add_period(CLI::App& app) {
    auto* sub = app.add_subcommand("period", "Eventual period of the bounded sequence mod m");
    sub->add_option("k", k_)->required();
    sub->add_option("u", u_)->required();
    sub->add_option("--mod", mod_, "Modulus m >= 2")->required();
    add_weights(sub);
    sub->callback([this] {
      action_ = [this] {
        const PeriodReport r = detect_eventual_period(k_, u_, weights_.assignment(), parse_big(mod_, "--mod"));
        if (format_ == Format::Json) {
          emit_json(r.to_json());
        } else if (format_ == Format::Csv) {
          out_ << "preperiod,vector_period,scalar_preperiod,scalar_period,modulus,verified_horizon\n"
               << r.preperiod << "," << r.vector_period << "," << r.scalar_preperiod << "," << r.scalar_period << ","
               << r.modulus.get_str() << "," << r.verified_horizon << "\n";
        } else {
          out_ << "preperiod " << r.preperiod << "\nvector period " << r.vector_period << "\nscalar preperiod "
               << r.scalar_preperiod << "\nscalar period " << r.scalar_period << "\nverified through n = "
               << r.verified_horizon << "\n";
        }
        return kExitOk;
      };
    });
  }

  void add_verify(CLI::App& app) {
    auto* sub = app.add_subcommand("verify", "Check closed formulas against computed values");
    sub->add_option("name", verify_name_, "all, or one of: min-u recurrence-3-4 closed-4-6-5-8 rightmost dprime-3-2n narayana-one-peak")
        ->required();
    sub->add_flag("--verbose", verbose_, "List every check");
    sub->callback([this] {
      action_ = [this] {
        std::vector<std::string> names;
        if (verify_name_ == "all") {
          names = verifier_names();
        } else {
          names.push_back(verify_name_);
        }
        std::vector<VerificationRecord> records;
        for (const auto& name : names) {
          for (auto& r : run_verifier(name)) records.push_back(std::move(r));
        }
        bool ok = true;
        nlohmann::json arr = nlohmann::json::array();
        if (format_ == Format::Csv) out_ << "record,label,expected,actual,passed\n";
        for (const auto& r : records) {
          ok = ok && r.passed();
          if (format_ == Format::Json) {
            arr.push_back(r.to_json());
          } else if (format_ == Format::Csv) {
            for (const auto& c : r.checks) {
              out_ << '"' << r.name << "\",\"" << c.label << "\"," << c.expected << "," << c.actual << ","
                   << (c.passed ? "true" : "false") << "\n";
            }
          } else {
            out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks.size() - r.failures() << "/"
                 << r.checks.size() << ")\n";
            for (const auto& c : r.checks) {
              if (verbose_ || !c.passed) {
                out_ << "  " << (c.passed ? "ok   " : "FAIL ") << c.label << ": expected " << c.expected << ", got "
                     << c.actual;
                if (!c.witness.empty()) out_ << " [" << c.witness << "]";
                out_ << "\n";
              }
            }
          }
        }
        if (format_ == Format::Json) emit_json(arr);
        return ok ? kExitOk : kExitMismatch;
      };
    });
  }

  /// Computes the generator at the given indices; indices it cannot handle are skipped.
  SequenceRecord generate(const std::string& spec, const SequenceRecord& ref) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    auto arg = [&](std::size_t i) {
      if (parts.size() <= i) throw Error(ErrorKind::InvalidArgument, "generator '" + spec + "' is missing arguments");
      return std::stoi(parts[i]);
    };
    const std::int64_t lo = ref.offset;
    const std::int64_t hi = std::min<std::int64_t>(ref.last_index(), ref.offset + terms_ - 1);
    SequenceRecord out{spec, lo, {}};
    const std::string& kind = parts.at(0);
    std::function<BigInt(std::int64_t)> f;
    if (kind == "catalan") {
      const int k = arg(1);
      f = [k](std::int64_t n) { return catalan_number(k, static_cast<int>(n)); };
    } else if (kind == "bounded") {
      const int k = arg(1);
      const int u = arg(2);
      const auto seq = bounded_sswcn_dp_sequence(k, u, static_cast<int>(std::max<std::int64_t>(hi, 0)), WeightAssignment::all_ones());
      f = [seq](std::int64_t n) { return seq[static_cast<std::size_t>(n)]; };
    } else if (kind == "dprime32n") {
      out.offset = std::max<std::int64_t>(lo, 1);
      f = [](std::int64_t n) { return dprime_3_2n_dp(static_cast<int>(n)); };
    } else if (kind == "rightmost") {
      const int k = arg(1);
      out.offset = std::max<std::int64_t>(lo, 1);
      f = [k](std::int64_t idx) {
        const int n = static_cast<int>(idx);
        return BigInt(bounded_catalan(k, max_path_height(k, n), n) - bounded_catalan(k, max_path_height(k, n) - 1, n));
      };
    } else if (kind == "catalan-array") {
      // Antidiagonals of T(m, n) = C_{m,n}, m, n >= 1, from index 1.
      out.offset = std::max<std::int64_t>(lo, 1);
      f = [](std::int64_t idx) {
        std::int64_t s = 2;
        while (idx > s - 1) {
          idx -= s - 1;
          ++s;
        }
        return catalan_number(static_cast<int>(idx), static_cast<int>(s - idx));
      };
    } else if (kind == "narayana2") {
      // N''_{2,alpha,n} by rows n >= 1, alpha = 1..n, from index 1.
      out.offset = std::max<std::int64_t>(lo, 1);
      f = [](std::int64_t idx) {
        int n = 1;
        while (idx > n) {
          idx -= n;
          ++n;
        }
        return narayana_row(2, n).at(idx);
      };
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown generator '" + spec + "'");
    }
    for (std::int64_t i = out.offset; i <= hi; ++i) out.values.push_back(f(i));
    return out;
  }

  void add_oeis_check(CLI::App& app) {
    auto* sub = app.add_subcommand("oeis-check", "Compare a computed sequence with an OEIS b-file");
    sub->add_option("anum", anum_, "A-number, e.g. A015448")->required();
    sub->add_option("generator", generator_,
                    "catalan:K | bounded:K:U | dprime32n | rightmost:K | catalan-array | narayana2")
        ->required();
    sub->add_option("--terms", terms_, "Number of reference terms to compare")->capture_default_str();
    sub->add_flag("--offline", offline_, "Never touch the network");
    sub->add_option("--fixtures", fixtures_, "Directory of fallback b-files")->capture_default_str();
    sub->add_option("--cache", cache_, "Cache directory (default $OEIS_CACHE_DIR or ./.oeis-cache)");
    sub->callback([this] {
      action_ = [this] {
        FetchOptions opts;
        opts.offline = offline_;
        opts.fixtures_dir = fixtures_;
        if (!cache_.empty()) opts.cache_dir = cache_;
        const FetchResult ref = fetch_bfile(anum_, opts);
        const SequenceRecord computed = generate(generator_, ref.record);
        const ComparisonReport rep = compare_sequences(computed, ref.record);
        if (format_ == Format::Json) {
          nlohmann::json j = {{"id", anum_}, {"generator", generator_}, {"source", to_string(ref.source)},
                              {"first_index", rep.first_index}, {"overlap", rep.overlap}, {"matched", rep.matched()}};
          if (rep.first_mismatch) j["first_mismatch"] = *rep.first_mismatch;
          emit_json(j);
        } else if (format_ == Format::Csv) {
          out_ << "id,generator,source,first_index,overlap,matched,first_mismatch\n"
               << anum_ << "," << generator_ << "," << to_string(ref.source) << "," << rep.first_index << ","
               << rep.overlap << "," << (rep.matched() ? "true" : "false") << ","
               << (rep.first_mismatch ? std::to_string(*rep.first_mismatch) : "") << "\n";
        } else if (rep.matched()) {
          out_ << anum_ << " (" << to_string(ref.source) << "): match over " << rep.overlap << " terms, indices "
               << rep.first_index << ".." << rep.first_index + rep.overlap - 1 << "\n";
        } else {
          const auto i = *rep.first_mismatch;
          out_ << anum_ << " (" << to_string(ref.source) << "): mismatch at index " << i << ": computed "
               << computed.at(i).get_str() << ", reference " << ref.record.at(i).get_str() << "\n";
        }
        return rep.matched() ? kExitOk : kExitMismatch;
      };
    });
  }

  void add_syt(CLI::App& app) {
    auto* sub = app.add_subcommand("syt", "Standard Young tableaux of rectangular shape");
    sub->require_subcommand(1);
    auto* p2t = sub->add_subcommand("path-to-tableau", "Tableau of a balanced path");
    p2t->add_option("k", k_)->required();
    p2t->add_option("steps", steps_, "Steps as 1,1,2,... or e1,e1,e2,...")->required();
    p2t->callback([this] {
      action_ = [this] {
        emit_tableau(path_to_tableau(BallotPath(k_, parse_steps(steps_))));
        return kExitOk;
      };
    });
    auto* t2p = sub->add_subcommand("tableau-to-path", "Balanced path of a rectangular tableau");
    t2p->add_option("rows", tableau_, "Rows as 1,2,4/3,5,6")->required();
    t2p->callback([this] {
      action_ = [this] {
        const BallotPath p = tableau_to_path(parse_tableau(tableau_));
        if (format_ == Format::Json) {
          emit_json({{"k", p.dimension()}, {"steps", steps_json(p.steps())}});
        } else {
          out_ << p.to_string() << "\n";
        }
        return kExitOk;
      };
    });
    auto* tal = sub->add_subcommand("tally", "Ascents minus descents");
    tal->add_option("rows", tableau_, "Rows as 1,2,4/3,5,6")->required();
    tal->callback([this] {
      action_ = [this] {
        const Tableau t = parse_tableau(tableau_);
        if (format_ == Format::Json) {
          emit_json({{"ascents", ascents(t)}, {"descents", descents(t)}, {"tally", tally(t)}});
        } else if (format_ == Format::Csv) {
          out_ << "ascents,descents,tally\n" << ascents(t) << "," << descents(t) << "," << tally(t) << "\n";
        } else {
          out_ << tally(t) << "\n";
        }
        return kExitOk;
      };
    });
  }

  void add_scan(CLI::App& app) {
    auto* sub = app.add_subcommand("scan-pow2", "List (k,u) whose bounded counts equal 2^(n-1) for n = 1..N");
    sub->add_option("--k-max", scan_k_max_)->capture_default_str();
    sub->add_option("--u-max", scan_u_max_)->capture_default_str();
    sub->add_option("--n-max", scan_n_max_)->capture_default_str();
    sub->callback([this] {
      action_ = [this] {
        const auto hits = scan_power_of_two(2, scan_k_max_, scan_u_max_, scan_n_max_);
        if (format_ == Format::Json) {
          nlohmann::json arr = nlohmann::json::array();
          for (auto [k, u] : hits) arr.push_back({{"k", k}, {"u", u}});
          emit_json(arr);
        } else {
          if (format_ == Format::Csv) out_ << "k,u\n";
          for (auto [k, u] : hits) out_ << k << (format_ == Format::Csv ? "," : " ") << u << "\n";
        }
        return kExitOk;
      };
    });
  }

  void add_transfer(CLI::App& app) {
    auto* sub = app.add_subcommand("transfer", "State space and transfer matrix for (k, u)");
    sub->add_option("k", k_)->required();
    sub->add_option("u", u_)->required();
    sub->callback([this] {
      action_ = [this] {
        const TransferMatrix t = build_transfer_matrix(build_state_space(k_, u_));
        if (format_ == Format::Json) {
          emit_json(t.to_json());
        } else if (format_ == Format::Csv) {
          out_ << "row,col,entry\n";
          for (std::size_t i = 0; i < t.dimension(); ++i) {
            for (std::size_t j = 0; j < t.dimension(); ++j) out_ << i << "," << j << ",\"" << t.at(i, j).to_string() << "\"\n";
          }
        } else {
          for (std::size_t i = 0; i < t.dimension(); ++i) out_ << "state " << i << ": " << t.space().states()[i].to_string() << "\n";
          for (std::size_t i = 0; i < t.dimension(); ++i) {
            for (std::size_t j = 0; j < t.dimension(); ++j) out_ << "T[" << i << "][" << j << "] = " << t.at(i, j).to_string() << "\n";
          }
        }
        return kExitOk;
      };
    });
  }

  void emit_value(const BigInt& v, const std::vector<std::pair<std::string, std::string>>& keys, const std::string& field) {
    if (format_ == Format::Json) {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [k, val] : keys) j[k] = std::stoll(val);
      j[field] = v.get_str();
      emit_json(j);
    } else if (format_ == Format::Csv) {
      for (const auto& [k, val] : keys) out_ << k << ",";
      out_ << field << "\n";
      for (const auto& [k, val] : keys) out_ << val << ",";
      out_ << v.get_str() << "\n";
    } else {
      out_ << v.get_str() << "\n";
    }
  }

  void emit_tableau(const Tableau& t) {
    if (format_ == Format::Json) {
      emit_json(t.to_json());
    } else {
      out_ << t.to_string();
    }
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<int()> action_;
  std::string format_name_ = "plain";
  Format format_ = Format::Plain;
  int k_ = 0;
  int n_ = 0;
  Coord u_ = 0;
  Coord bound_ = -1;
  bool symbolic_ = false;
  WeightFlags weights_;
  std::string mod_;
  std::string triangle_kind_;
  int rows_ = 0;
  int first_row_ = -1;
  std::string method_ = "difference";
  std::string verify_name_;
  bool verbose_ = false;
  std::string anum_;
  std::string generator_;
  std::int64_t terms_ = 12;
  bool offline_ = false;
  std::string fixtures_ = SSWCN_FIXTURE_DIR;
  std::string cache_;
  std::string steps_;
  std::string tableau_;
  int scan_k_max_ = 6;
  Coord scan_u_max_ = 12;
  int scan_n_max_ = 8;
};

/// Runs one command line (without the program name); returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace sswcn::cli
