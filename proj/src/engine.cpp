#include "dimer/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dimer/cheb.hpp"
#include "dimer/pair_symmetric.hpp"

namespace dimer {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// Ordered map results for an index range computed by a small worker pool.
template <typename R, typename F>
std::vector<R> parallel_index_map(std::size_t count, unsigned threads, F&& fn) {
  std::vector<R> results(count);
  if (count == 0) return results;
  unsigned want = threads ? threads : std::thread::hardware_concurrency();
  if (want == 0) want = 1;
  want = static_cast<unsigned>(std::min<std::size_t>(want, count));
  if (want <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(want);
  for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace

const std::set<Method>& all_methods() {
  static const std::set<Method> all{Method::dp, Method::symmetric, Method::discriminant};
  return all;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::dp: return "dp";
    case Method::symmetric: return "symmetric";
    case Method::discriminant: return "discriminant";
  }
  return "?";
}

std::set<Method> parse_methods(const std::string& spec) {
  std::set<Method> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::string t;
    for (char c : tok) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
    }
    if (t.empty()) continue;
    if (t == "dp") {
      out.insert(Method::dp);
    } else if (t == "sym" || t == "symmetric") {
      out.insert(Method::symmetric);
    } else if (t == "disc" || t == "discriminant") {
      out.insert(Method::discriminant);
    } else if (t == "all") {
      out = all_methods();
    } else {
      throw error("unknown method '" + t + "' (expected dp, symmetric, discriminant or all)");
    }
  }
  if (out.empty()) throw error("no methods given");
  return out;
}

BigInt b_discriminant(unsigned n) {
  if (n == 0) throw error("b_discriminant: n must be positive");
  const BigInt dp = discriminant(p_poly(n));
  const BigInt dq = discriminant(q_poly(n));
  const BigInt ratio = div_exact_checked(dq, dp);
  return integer_sqrt_exact(ratio);
}

BigInt b_symmetric(unsigned n) {
  if (n == 0) throw error("b_symmetric: n must be positive");
  return b_from_h(h_poly(n));
}

route_mismatch::route_mismatch(unsigned n, std::map<std::string, BigInt> values)
    : error([&] {
        std::string msg = "routes disagree at n = " + std::to_string(n) + ":";
        for (const auto& [name, value] : values) msg += " " + name + "=" + to_decimal(value);
        return msg;
      }()),
      n_(n),
      values_(std::move(values)) {}

namespace {

std::vector<unsigned> residue_exponents(const EngineOptions& opts) {
  std::vector<unsigned> exps = {1, 2, 3, 4, 5, 6};
  for (unsigned r : opts.extra_moduli_exponents) {
    if (r == 0 || r > 64) throw error("modulus exponent out of range: " + std::to_string(r));
    exps.push_back(r);
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  return exps;
}

void fill_residues(DimerRecord& rec, const std::vector<unsigned>& exps) {
  for (unsigned r : exps) {
    const BigInt m = pow2(r);
    rec.residues[m] = mod_reduced(rec.b, m);
  }
}

}  // namespace

DimerRecord compute_record(unsigned n, const std::set<Method>& methods,
                           const EngineOptions& opts) {
  if (n == 0) throw error("compute_record: n must be positive");
  if (methods.empty()) throw error("compute_record: no methods requested");

  std::map<std::string, BigInt> values;
  std::optional<BigInt> a;
  for (Method m : methods) {
    switch (m) {
      case Method::dp: {
        a = a_n(n, opts.width_cap);
        const BigInt p2 = pow2(n);
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a->get_mpz_t(), p2.get_mpz_t());
        if (sgn(rem) != 0) {
          throw divisibility_failure("2^" + std::to_string(n) + " does not divide A_" +
                                     std::to_string(n));
        }
        values["dp"] = integer_sqrt_exact(q);
        break;
      }
      case Method::symmetric:
        values["symmetric"] = b_symmetric(n);
        break;
      case Method::discriminant:
        values["discriminant"] = b_discriminant(n);
        break;
    }
  }

  const BigInt& b = values.begin()->second;
  for (const auto& [name, value] : values) {
    if (value != b) throw route_mismatch(n, values);
  }
  if (sgn(b) <= 0 || mpz_even_p(b.get_mpz_t())) {
    throw error("B_" + std::to_string(n) + " = " + to_decimal(b) + " is not a positive odd integer");
  }

  DimerRecord rec;
  rec.n = n;
  rec.a = std::move(a);
  rec.b = b;
  for (Method m : methods) rec.methods.insert(method_name(m));
  fill_residues(rec, residue_exponents(opts));
  return rec;
}

std::vector<DimerRecord> compute_records(unsigned from, unsigned to,
                                         const std::set<Method>& methods,
                                         const EngineOptions& opts, unsigned threads) {
  if (from == 0 || to < from) throw error("compute_records: bad range");
  const std::size_t count = to - from + 1;
  return parallel_index_map<DimerRecord>(count, threads, [&](std::size_t i) {
    return compute_record(from + static_cast<unsigned>(i), methods, opts);
  });
}

// ---- cache ----

std::string record_to_json_line(const DimerRecord& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = r.n;
  j["B"] = to_decimal(r.b);
  if (r.a) j["A"] = to_decimal(*r.a);
  j["methods"] = r.methods;
  json res = json::object();
  for (const auto& [m, v] : r.residues) res[to_decimal(m)] = to_decimal(v);
  j["residues"] = res;
  return j.dump();
}

DimerRecord record_from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw schema_error(std::string("bad JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw schema_error("record is not an object");
    if (j.at("schema").get<int>() != kSchemaVersion) {
      throw schema_error("unsupported schema version");
    }
    DimerRecord r;
    r.n = j.at("n").get<unsigned>();
    if (r.n == 0) throw schema_error("n must be positive");
    r.b = from_decimal(j.at("B").get<std::string>());
    if (j.contains("A")) r.a = from_decimal(j.at("A").get<std::string>());
    for (const auto& m : j.at("methods")) r.methods.insert(m.get<std::string>());
    for (const auto& [k, v] : j.at("residues").items()) {
      r.residues[from_decimal(k)] = from_decimal(v.get<std::string>());
    }
    return r;
  } catch (const json::exception& e) {
    throw schema_error(std::string("bad record: ") + e.what());
  }
}

std::vector<DimerRecord> read_cache(const std::string& path) {
  std::vector<DimerRecord> out;
  std::ifstream in(path);
  if (!in.is_open()) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json_line(line));
    } catch (const schema_error& e) {
      throw schema_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void append_cache(const std::string& path, const std::vector<DimerRecord>& records) {
  if (records.empty()) return;
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::app);
  if (!out.is_open()) throw io_error("cannot open cache file for append: " + path);
  for (const auto& r : records) out << record_to_json_line(r) << '\n';
  if (!out) throw io_error("write to cache file failed: " + path);
}

std::map<unsigned, DimerRecord> merge_records(const std::vector<DimerRecord>& records) {
  std::map<unsigned, DimerRecord> out;
  for (const auto& r : records) {
    auto [it, inserted] = out.emplace(r.n, r);
    if (inserted) continue;
    DimerRecord& have = it->second;
    if (have.b != r.b) {
      throw cache_conflict("conflicting B_" + std::to_string(r.n) + ": " + to_decimal(have.b) +
                           " vs " + to_decimal(r.b));
    }
    if (have.a && r.a && *have.a != *r.a) {
      throw cache_conflict("conflicting A_" + std::to_string(r.n));
    }
    if (!have.a) have.a = r.a;
    have.methods.insert(r.methods.begin(), r.methods.end());
    for (const auto& [m, v] : r.residues) have.residues[m] = v;
  }
  return out;
}

BnTable bn_table(const std::map<unsigned, DimerRecord>& records) {
  BnTable t;
  for (const auto& [n, r] : records) t[n] = r.b;
  return t;
}

std::string default_cache_path() {
  if (const char* env = std::getenv("DIMERB_CACHE"); env && *env) return env;
  std::filesystem::path base;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) {
    base = xdg;
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    base = std::filesystem::path(home) / ".local" / "share";
  } else {
    base = ".";
  }
  return (base / "dimerb" / "cache.jsonl").string();
}

std::vector<DimerRecord> compute_records_cached(const std::string& cache_path, unsigned from,
                                                unsigned to, const std::set<Method>& methods,
                                                const EngineOptions& opts, unsigned threads) {
  if (from == 0 || to < from) throw error("compute_records_cached: bad range");
  std::map<unsigned, DimerRecord> cached;
  if (!cache_path.empty()) cached = merge_records(read_cache(cache_path));

  std::set<std::string> wanted;
  for (Method m : methods) wanted.insert(method_name(m));
  const auto exps = residue_exponents(opts);

  std::vector<unsigned> missing;
  for (unsigned n = from; n <= to; ++n) {
    auto it = cached.find(n);
    const bool covered =
        it != cached.end() &&
        std::includes(it->second.methods.begin(), it->second.methods.end(), wanted.begin(),
                      wanted.end());
    if (!covered) missing.push_back(n);
  }

  std::vector<DimerRecord> fresh = parallel_index_map<DimerRecord>(
      missing.size(), threads,
      [&](std::size_t i) { return compute_record(missing[i], methods, opts); });

  // Fresh results must agree with whatever the cache already had.
  for (const auto& r : fresh) {
    auto it = cached.find(r.n);
    if (it != cached.end() && it->second.b != r.b) {
      throw cache_conflict("cache B_" + std::to_string(r.n) + " = " + to_decimal(it->second.b) +
                           " disagrees with recomputed " + to_decimal(r.b));
    }
  }
  if (!cache_path.empty()) append_cache(cache_path, fresh);

  std::map<unsigned, DimerRecord> merged = cached;
  for (const auto& r : fresh) {
    auto [it, inserted] = merged.emplace(r.n, r);
    if (!inserted) {
      it->second.methods.insert(r.methods.begin(), r.methods.end());
      for (const auto& [m, v] : r.residues) it->second.residues[m] = v;
      if (!it->second.a) it->second.a = r.a;
    }
  }

  std::vector<DimerRecord> out;
  out.reserve(to - from + 1);
  for (unsigned n = from; n <= to; ++n) {
    DimerRecord rec = merged.at(n);
    // Cached records may predate a newly requested modulus; residues are
    // derivable from B, so top them up here.
    fill_residues(rec, exps);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace dimer
