#ifndef DIMER_ENGINE_HPP
#define DIMER_ENGINE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dimer/bigint.hpp"
#include "dimer/dimer_dp.hpp"
#include "dimer/residue_theory.hpp"

namespace dimer {

// Three independent routes to B_n, their cross-validation, and the on-disk
// record cache. The counting route is ground truth at small n, the
// symmetric-function route covers the midrange, and the discriminant route
// scales to the large n the residue checks need.

enum class Method { dp, symmetric, discriminant };

const std::set<Method>& all_methods();
std::string method_name(Method m);
// Accepts "dp", "sym"/"symmetric", "disc"/"discriminant", "all", comma
// separated, case insensitive. Throws error on unknown tokens.
std::set<Method> parse_methods(const std::string& spec);

// B_n as the square root of discriminant(Q_n) / discriminant(P_n).
BigInt b_discriminant(unsigned n);

// B_n as h_n(4) through the pair-symmetric pipeline.
BigInt b_symmetric(unsigned n);

struct DimerRecord {
  unsigned n = 0;
  std::optional<BigInt> a;          // present only when the counting route ran
  BigInt b;
  std::set<std::string> methods;    // canonical method names
  std::map<BigInt, BigInt> residues;  // modulus -> B_n mod modulus

  friend bool operator==(const DimerRecord&, const DimerRecord&) = default;
};

// Thrown when two routes disagree; carries every computed value.
class route_mismatch : public error {
 public:
  route_mismatch(unsigned n, std::map<std::string, BigInt> values);
  unsigned n() const { return n_; }
  const std::map<std::string, BigInt>& values() const { return values_; }

 private:
  unsigned n_;
  std::map<std::string, BigInt> values_;
};

struct EngineOptions {
  unsigned width_cap = kDefaultWidthCap;
  // Residues are stored for 2^r with r in this list; 1..6 are always kept.
  std::vector<unsigned> extra_moduli_exponents;
};

DimerRecord compute_record(unsigned n, const std::set<Method>& methods,
                           const EngineOptions& opts = {});

// Fan-out over [from, to], results ordered by n. threads == 0 picks the
// hardware concurrency.
std::vector<DimerRecord> compute_records(unsigned from, unsigned to,
                                         const std::set<Method>& methods,
                                         const EngineOptions& opts = {}, unsigned threads = 0);

// ---- cache ----
//
// One record per line, JSON, append-only. Fields: "schema" (currently 1),
// "n", "B" (decimal string), optional "A" (decimal string), "methods"
// (array of canonical names), "residues" (object, modulus -> value, both
// decimal strings).

std::string record_to_json_line(const DimerRecord& r);
DimerRecord record_from_json_line(const std::string& line);  // throws schema_error

// Missing file loads as empty. Corrupted lines raise schema_error tagged
// with the 1-based line number.
std::vector<DimerRecord> read_cache(const std::string& path);
void append_cache(const std::string& path, const std::vector<DimerRecord>& records);

// Dedupe by n. Records with equal n and equal B merge (methods and residues
// union); conflicting B (or conflicting A) raises cache_conflict.
std::map<unsigned, DimerRecord> merge_records(const std::vector<DimerRecord>& records);

BnTable bn_table(const std::map<unsigned, DimerRecord>& records);

// Resolution order for the cache location: explicit path (CLI flag) >
// DIMERB_CACHE environment variable > XDG data directory.
std::string default_cache_path();

// Computes records for [from, to] with the given methods, reusing cached B
// values where the cached record already covers the requested methods, and
// appends newly computed records to the cache file. Pass an empty path to
// skip persistence.
std::vector<DimerRecord> compute_records_cached(const std::string& cache_path, unsigned from,
                                                unsigned to, const std::set<Method>& methods,
                                                const EngineOptions& opts = {},
                                                unsigned threads = 0);

}  // namespace dimer

#endif  // DIMER_ENGINE_HPP
