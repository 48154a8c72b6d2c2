#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nest/graph.hpp"
#include "nest/nest_family.hpp"

namespace nest {

/// Per-parameter symmetry profile. Tuples rejected by the prefilter never get
/// an automorphism computation; their Aut-derived fields stay empty and
/// serialize as JSON null (edge/arc transitivity are still exact: a failed
/// prefilter certifies non-edge-transitivity).
struct CensusRecord {
  NestParams params;
  int vertex_count = 0;
  std::optional<std::uint64_t> aut_order;
  std::optional<bool> vertex_transitive;
  bool edge_transitive = false;
  bool arc_transitive = false;
  std::optional<bool> core_free;
  std::optional<long long> core_order;
  int girth = 0;
  std::optional<std::string> certificate; // lowercase hex
  std::optional<int> iso_class;

  std::string to_json_line() const;
  static CensusRecord from_json_line(const std::string &line);
};

/// Streams the deduplicated parameter tuples for 4 <= n <= max_n in
/// (n,a,b,c,k) order: each emitted tuple is the lexicographically least
/// member of its symmetry closure normalized to a < b < c,
/// 1 <= k <= (n-1)/2, and every valid tuple belongs to exactly one emitted
/// closure.
void enumerate_params(int max_n,
                      const std::function<void(const NestParams &)> &emit);
std::vector<NestParams> enumerate_params(int max_n);

/// Necessary condition for edge-transitivity of a regular graph: constant
/// common-neighbor count over edges, and one per-vertex count multiset.
/// False guarantees not edge-transitive; true guarantees nothing.
bool prefilter(const Graph &g);

/// Full symmetry profile of one tuple (always computes the automorphism
/// group; the census pipeline short-circuits instead). iso_class stays empty.
CensusRecord profile(const NestParams &p);

struct CensusOptions {
  int jobs = 1;
  bool resume = false;
};

struct CensusStats {
  std::uint64_t tuples = 0;
  std::uint64_t survivors = 0; // tuples that passed the prefilter
  std::uint64_t reused = 0;    // records taken from a resumed file
  std::uint64_t iso_classes = 0;
};

/// Runs the census and writes one JSONL record per emitted tuple, sorted by
/// (n,a,b,c,k), byte-deterministic and independent of the worker count.
CensusStats census_run(int max_n, const std::string &out_path,
                       const CensusOptions &options = {});

/// Census file parsing shared by the verification commands; throws
/// std::runtime_error with file context on malformed input.
std::vector<CensusRecord> read_census(const std::string &path);

struct ClassSummary {
  int iso_class = 0;
  NestParams representative;
  std::uint64_t member_count = 0;
  std::string certificate;
  std::string matched_name; // empty when unmatched
};

struct TheoremReport {
  int max_n = 0;
  std::uint64_t record_count = 0;
  std::uint64_t candidate_count = 0; // edge-transitive core-free records
  std::vector<ClassSummary> classes;
  std::string verdict; // "pass", "fail" or "partial"
  std::vector<std::string> problems;

  std::string to_json() const;
  int exit_code() const; // 0 pass, 1 fail, 2 partial
};

/// Groups the edge-transitive core-free records by certificate and matches
/// the classes against the four reference graphs; pass iff they are exactly
/// the expected four (partial verdict when max_n < 12).
TheoremReport verify_theorem(const std::string &census_path);

struct InvariantCheck {
  std::string name;
  bool pass = false;
  std::uint64_t checked = 0;
  bool vacuous = false;
  std::string detail; // counterexample params / failure description
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  bool all_pass = false;

  std::string to_json() const;
};

/// Machine-checked census-wide implications (see README): parameter-sum
/// arc-transitivity equivalence, the cyclic-core order bound, cyclic and
/// non-cyclic block-system structure, quotient consistency, the fixed-rim
/// characterization and the odd-m family profile.
InvariantReport invariant_suite(const std::string &census_path);

} // namespace nest
