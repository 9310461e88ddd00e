// dimerb: exact domino-tiling counts of 2n x 2n grids, the odd square-root
// component B_n (A_n = 2^n B_n^2), and residue-class verification of B_n
// modulo powers of two.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimer/engine.hpp"

namespace {

using dimer::BigInt;
using dimer::DimerRecord;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string cache_path;  // empty -> resolve via env / XDG
  std::string format = "plain";
  std::string output;
  unsigned width_cap = dimer::kDefaultWidthCap;
  unsigned threads = 0;
};

std::string resolve_cache(const CommonOpts& c) {
  return c.cache_path.empty() ? dimer::default_cache_path() : c.cache_path;
}

std::ostream& open_sink(const CommonOpts& c, std::ofstream& file) {
  if (c.output.empty()) return std::cout;
  file.open(c.output);
  if (!file.is_open()) throw dimer::io_error("cannot open output file: " + c.output);
  return file;
}

unsigned modulus_exponent(const BigInt& m) {
  if (sgn(m) <= 0 || mpz_popcount(m.get_mpz_t()) != 1) {
    throw dimer::error("modulus must be a power of two, got " + dimer::to_decimal(m));
  }
  const unsigned long r = mpz_scan1(m.get_mpz_t(), 0);
  if (r < 1 || r > 64) throw dimer::error("modulus exponent out of range 1..64");
  return static_cast<unsigned>(r);
}

std::vector<unsigned> moduli_to_exponents(const std::vector<std::string>& moduli) {
  std::vector<unsigned> exps;
  exps.reserve(moduli.size());
  for (const auto& m : moduli) exps.push_back(modulus_exponent(dimer::from_decimal(m)));
  return exps;
}

// ---- compute ----

void emit_records_plain(std::ostream& os, const std::vector<DimerRecord>& recs) {
  for (const auto& r : recs) {
    os << "B_" << r.n << " = " << dimer::to_decimal(r.b);
    if (r.a) os << "  (A_" << r.n << " = " << dimer::to_decimal(*r.a) << ")";
    os << "\n  methods:";
    for (const auto& m : r.methods) os << " " << m;
    os << "\n  residues:";
    for (const auto& [m, v] : r.residues) {
      os << " mod " << dimer::to_decimal(m) << " = " << dimer::to_decimal(v) << ";";
    }
    os << "\n";
  }
}

void emit_records_csv(std::ostream& os, const std::vector<DimerRecord>& recs) {
  os << "n,A,B,methods,residues\n";
  for (const auto& r : recs) {
    os << r.n << "," << (r.a ? dimer::to_decimal(*r.a) : "") << "," << dimer::to_decimal(r.b)
       << ",";
    bool first = true;
    for (const auto& m : r.methods) {
      if (!first) os << ";";
      os << m;
      first = false;
    }
    os << ",";
    first = true;
    for (const auto& [m, v] : r.residues) {
      if (!first) os << ";";
      os << dimer::to_decimal(m) << "=" << dimer::to_decimal(v);
      first = false;
    }
    os << "\n";
  }
}

void emit_records(std::ostream& os, const std::string& format,
                  const std::vector<DimerRecord>& recs) {
  if (format == "json") {
    for (const auto& r : recs) os << dimer::record_to_json_line(r) << "\n";
  } else if (format == "csv") {
    emit_records_csv(os, recs);
  } else {
    emit_records_plain(os, recs);
  }
}

// ---- table ----

void emit_table(std::ostream& os, const std::string& format,
                const std::vector<DimerRecord>& recs, const std::vector<BigInt>& moduli) {
  if (format == "csv") {
    os << "n";
    for (const auto& m : moduli) os << ",mod" << dimer::to_decimal(m);
    os << "\n";
    for (const auto& r : recs) {
      os << r.n;
      for (const auto& m : moduli) os << "," << dimer::to_decimal(r.residues.at(m));
      os << "\n";
    }
  } else if (format == "json") {
    for (const auto& r : recs) {
      json j;
      j["n"] = r.n;
      json res = json::object();
      for (const auto& m : moduli) res[dimer::to_decimal(m)] = dimer::to_decimal(r.residues.at(m));
      j["residues"] = res;
      os << j.dump() << "\n";
    }
  } else {
    for (const auto& r : recs) {
      os << "n=" << r.n;
      for (const auto& m : moduli) {
        os << "  mod " << dimer::to_decimal(m) << ": " << dimer::to_decimal(r.residues.at(m));
      }
      os << "\n";
    }
  }
}

// ---- verify ----

const char* verdict_name(dimer::Verdict v) {
  switch (v) {
    case dimer::Verdict::match: return "match";
    case dimer::Verdict::mismatch: return "mismatch";
    case dimer::Verdict::unevaluated: return "unevaluated";
  }
  return "?";
}

void emit_report(std::ostream& os, const std::string& format,
                 const std::vector<dimer::VerifyReport>& reports) {
  if (format == "json") {
    for (const auto& rep : reports) {
      json j;
      j["check"] = rep.check;
      j["expectation_met"] = rep.expectation_met;
      j["summary"] = rep.summary;
      json claims = json::array();
      for (const auto& c : rep.claims) {
        json cj;
        cj["n"] = c.n;
        cj["modulus"] = dimer::to_decimal(c.modulus);
        cj["predicted"] = dimer::to_decimal(c.predicted);
        if (c.observed) cj["observed"] = dimer::to_decimal(*c.observed);
        cj["verdict"] = verdict_name(c.verdict);
        claims.push_back(cj);
      }
      j["claims"] = claims;
      os << j.dump() << "\n";
    }
  } else if (format == "csv") {
    os << "check,n,modulus,predicted,observed,verdict\n";
    for (const auto& rep : reports) {
      for (const auto& c : rep.claims) {
        os << rep.check << "," << c.n << "," << dimer::to_decimal(c.modulus) << ","
           << dimer::to_decimal(c.predicted) << ","
           << (c.observed ? dimer::to_decimal(*c.observed) : "") << ","
           << verdict_name(c.verdict) << "\n";
      }
    }
  } else {
    for (const auto& rep : reports) {
      os << rep.check << ": " << (rep.expectation_met ? "OK" : "UNEXPECTED") << ": "
         << rep.summary << "\n";
      for (const auto& c : rep.claims) {
        if (c.verdict == dimer::Verdict::mismatch) {
          os << "  n=" << c.n << " predicted " << dimer::to_decimal(c.predicted) << " observed "
             << (c.observed ? dimer::to_decimal(*c.observed) : "-") << " (mod "
             << dimer::to_decimal(c.modulus) << ")\n";
        }
      }
    }
  }
}

long peak_rss_kb() {
  struct rusage u {};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 2n x 2n domino-tiling counts and residue verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CommonOpts common;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cache", common.cache_path,
                    "cache file (default: $DIMERB_CACHE or XDG data dir)");
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_option("--output", common.output, "write output to this file instead of stdout");
    cmd->add_option("--width-cap", common.width_cap, "DP board-width cap (default 20)");
    cmd->add_option("--threads", common.threads, "worker threads (0 = hardware)");
  };

  // compute
  auto* c_compute = app.add_subcommand("compute", "compute B_n records");
  unsigned opt_n = 0, opt_from = 0, opt_to = 0;
  std::string opt_methods = "all";
  std::vector<std::string> opt_moduli;
  c_compute->add_option("--n", opt_n, "single n");
  c_compute->add_option("--from", opt_from, "range start");
  c_compute->add_option("--to", opt_to, "range end");
  c_compute->add_option("--method", opt_methods, "dp, symmetric, discriminant, all (comma list)");
  c_compute->add_option("--modulus", opt_moduli, "extra residue modulus 2^r (repeatable)");
  add_common(c_compute);

  // table
  auto* c_table = app.add_subcommand("table", "emit residue table for a range of n");
  unsigned t_from = 1, t_to = 0;
  std::vector<std::string> t_moduli;
  std::string t_methods = "discriminant";
  c_table->add_option("--from", t_from, "range start (default 1)");
  c_table->add_option("--to", t_to, "range end")->required();
  c_table->add_option("--modulus", t_moduli, "modulus 2^r (repeatable, default 64)");
  c_table->add_option("--method", t_methods, "route(s) for missing values (default discriminant)");
  add_common(c_table);

  // verify
  auto* c_verify = app.add_subcommand("verify", "run residue-theory verification checks");
  std::string v_check;
  unsigned v_r = 5;
  unsigned v_max_n = 0;
  std::string v_methods = "discriminant";
  c_verify->add_option("--check", v_check, "theoremA, theoremB, corA, cor1, cor2, all")
      ->required()
      ->check(CLI::IsMember({"theoremA", "theoremB", "corA", "cor1", "cor2", "all"}));
  c_verify->add_option("--r", v_r, "modulus exponent for theoremA (default 5)");
  c_verify->add_option("--max-n", v_max_n, "scan limit (defaults: 128; cor1 96; cor2 192)");
  c_verify->add_option("--method", v_methods, "route(s) used to obtain B_n");
  add_common(c_verify);

  // bench
  auto* c_bench = app.add_subcommand("bench", "time one route across a range of n");
  std::string b_suite;
  unsigned b_max_n = 8;
  c_bench->add_option("--suite", b_suite, "counting, symmetric or discriminant")
      ->required()
      ->check(CLI::IsMember({"counting", "symmetric", "discriminant"}));
  c_bench->add_option("--max-n", b_max_n, "largest n to time (default 8)");
  add_common(c_bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::ofstream file;

    if (c_compute->parsed()) {
      const bool have_n = c_compute->count("--n") > 0;
      const bool have_range = c_compute->count("--from") > 0 || c_compute->count("--to") > 0;
      if (have_n == have_range) {
        std::cerr << "compute: give either --n or --from/--to\n";
        return kExitUsage;
      }
      unsigned from = have_n ? opt_n : opt_from;
      unsigned to = have_n ? opt_n : opt_to;
      if (from == 0 || to < from) {
        std::cerr << "compute: bad range\n";
        return kExitUsage;
      }
      dimer::EngineOptions opts;
      opts.width_cap = common.width_cap;
      opts.extra_moduli_exponents = moduli_to_exponents(opt_moduli);
      auto recs = dimer::compute_records_cached(resolve_cache(common), from, to,
                                                dimer::parse_methods(opt_methods), opts,
                                                common.threads);
      emit_records(open_sink(common, file), common.format, recs);
      return kExitOk;
    }

    if (c_table->parsed()) {
      if (t_from == 0 || t_to < t_from) {
        std::cerr << "table: bad range\n";
        return kExitUsage;
      }
      if (t_moduli.empty()) t_moduli.push_back("64");
      std::vector<BigInt> moduli;
      dimer::EngineOptions opts;
      opts.width_cap = common.width_cap;
      opts.extra_moduli_exponents = moduli_to_exponents(t_moduli);
      for (const auto& m : t_moduli) moduli.push_back(dimer::from_decimal(m));
      auto recs = dimer::compute_records_cached(resolve_cache(common), t_from, t_to,
                                                dimer::parse_methods(t_methods), opts,
                                                common.threads);
      emit_table(open_sink(common, file), common.format, recs, moduli);
      return kExitOk;
    }

    if (c_verify->parsed()) {
      auto methods = dimer::parse_methods(v_methods);
      dimer::EngineOptions opts;
      opts.width_cap = common.width_cap;
      const std::string cache = resolve_cache(common);

      auto table_to = [&](unsigned hi) {
        auto recs = dimer::compute_records_cached(cache, 1, hi, methods, opts, common.threads);
        dimer::BnTable t;
        for (const auto& r : recs) t[r.n] = r.b;
        return t;
      };

      std::vector<dimer::VerifyReport> reports;
      const bool all = v_check == "all";
      if (v_check == "theoremA" || all) {
        const unsigned hi = v_max_n ? v_max_n : 128;
        reports.push_back(dimer::verify_theorem_a(table_to(hi), v_r, hi));
      }
      if (v_check == "theoremB" || all) {
        const unsigned hi = v_max_n ? v_max_n : 128;
        reports.push_back(dimer::verify_theorem_b(table_to(hi), hi));
      }
      if (v_check == "corA" || all) {
        const unsigned hi = v_max_n ? v_max_n : 128;
        reports.push_back(dimer::verify_corollary_a(table_to(hi), hi));
      }
      if (v_check == "cor1" || all) {
        const unsigned hi = v_max_n ? v_max_n : 96;
        reports.push_back(dimer::verify_corollary_1(table_to(hi + 32), hi));
      }
      if (v_check == "cor2" || all) {
        const unsigned hi = v_max_n ? v_max_n : 192;
        reports.push_back(dimer::verify_corollary_2(table_to(hi), hi));
      }
      emit_report(open_sink(common, file), common.format, reports);
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const auto& r) { return r.expectation_met; });
      return ok ? kExitOk : kExitMathMismatch;
    }

    if (c_bench->parsed()) {
      std::ostream& os = open_sink(common, file);
      os << "suite,n,wall_seconds,peak_rss_kb\n";
      unsigned hi = b_max_n;
      if (b_suite == "counting" && hi > common.width_cap / 2) {
        hi = common.width_cap / 2;
        std::cerr << "bench: counting clamped to n <= " << hi << " by width cap\n";
      }
      for (unsigned n = 1; n <= hi; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        BigInt b;
        if (b_suite == "counting") {
          b = dimer::b_from_count(n, common.width_cap);
        } else if (b_suite == "symmetric") {
          b = dimer::b_symmetric(n);
        } else {
          b = dimer::b_discriminant(n);
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        os << b_suite << "," << n << "," << dt.count() << "," << peak_rss_kb() << "\n";
      }
      return kExitOk;
    }

    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const dimer::route_mismatch& e) {
    std::cerr << "route mismatch: " << e.what() << "\n";
    return kExitMathMismatch;
  } catch (const dimer::cache_conflict& e) {
    std::cerr << "cache conflict: " << e.what() << "\n";
    return kExitMathMismatch;
  } catch (const dimer::internal_mismatch& e) {
    std::cerr << "internal mismatch: " << e.what() << "\n";
    return kExitMathMismatch;
  } catch (const dimer::not_a_perfect_square& e) {
    std::cerr << "arithmetic invariant violated: " << e.what() << "\n";
    return kExitMathMismatch;
  } catch (const dimer::divisibility_failure& e) {
    std::cerr << "arithmetic invariant violated: " << e.what() << "\n";
    return kExitMathMismatch;
  } catch (const dimer::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
