#include "nest/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "nest/canonical.hpp"
#include "nest/perm_group.hpp"
#include "nest/symmetry.hpp"

namespace nest {

namespace {

nlohmann::ordered_json record_to_json(const CensusRecord &r) {
  nlohmann::ordered_json j;
  j["params"] = {r.params.n, r.params.a, r.params.b, r.params.c, r.params.k};
  j["vertex_count"] = r.vertex_count;
  j["aut_order"] = r.aut_order ? nlohmann::ordered_json(*r.aut_order)
                               : nlohmann::ordered_json(nullptr);
  j["vertex_transitive"] = r.vertex_transitive
                               ? nlohmann::ordered_json(*r.vertex_transitive)
                               : nlohmann::ordered_json(nullptr);
  j["edge_transitive"] = r.edge_transitive;
  j["arc_transitive"] = r.arc_transitive;
  j["core_free"] = r.core_free ? nlohmann::ordered_json(*r.core_free)
                               : nlohmann::ordered_json(nullptr);
  j["core_order"] = r.core_order ? nlohmann::ordered_json(*r.core_order)
                                 : nlohmann::ordered_json(nullptr);
  j["girth"] = r.girth;
  j["certificate"] = r.certificate ? nlohmann::ordered_json(*r.certificate)
                                   : nlohmann::ordered_json(nullptr);
  j["iso_class"] = r.iso_class ? nlohmann::ordered_json(*r.iso_class)
                               : nlohmann::ordered_json(nullptr);
  return j;
}

} // namespace

std::string CensusRecord::to_json_line() const {
  return record_to_json(*this).dump();
}

CensusRecord CensusRecord::from_json_line(const std::string &line) {
  const auto j = nlohmann::json::parse(line);
  CensusRecord r;
  const auto &p = j.at("params");
  r.params = validate_params(p.at(0).get<int>(), p.at(1).get<int>(),
                             p.at(2).get<int>(), p.at(3).get<int>(),
                             p.at(4).get<int>());
  r.vertex_count = j.at("vertex_count").get<int>();
  if (!j.at("aut_order").is_null())
    r.aut_order = j.at("aut_order").get<std::uint64_t>();
  if (!j.at("vertex_transitive").is_null())
    r.vertex_transitive = j.at("vertex_transitive").get<bool>();
  r.edge_transitive = j.at("edge_transitive").get<bool>();
  r.arc_transitive = j.at("arc_transitive").get<bool>();
  if (!j.at("core_free").is_null())
    r.core_free = j.at("core_free").get<bool>();
  if (!j.at("core_order").is_null())
    r.core_order = j.at("core_order").get<long long>();
  r.girth = j.at("girth").get<int>();
  if (!j.at("certificate").is_null())
    r.certificate = j.at("certificate").get<std::string>();
  if (!j.at("iso_class").is_null())
    r.iso_class = j.at("iso_class").get<int>();
  return r;
}

namespace {

constexpr int kMaxCensusN = 127; // packing bound for the dedup bitmap

std::uint32_t pack_tuple(int a, int b, int c, int k) {
  return (((static_cast<std::uint32_t>(a) << 7 |
            static_cast<std::uint32_t>(b))
               << 7 |
           static_cast<std::uint32_t>(c))
          << 7) |
         static_cast<std::uint32_t>(k);
}

// Orbit of a normalized tuple (a < b < c, k <= n/2) under the parameter
// symmetries, kept in normalized form throughout.
void mark_normalized_orbit(int n, int a, int b, int c, int k,
                           std::vector<bool> &visited) {
  auto red = [n](int x) { return ((x % n) + n) % n; };
  auto normalize = [&](int x, int y, int z, int kk) {
    int t[3] = {x, y, z};
    std::sort(t, t + 3);
    kk = std::min(kk, n - kk);
    return pack_tuple(t[0], t[1], t[2], kk);
  };
  std::vector<std::uint32_t> queue{normalize(a, b, c, k)};
  visited[queue.front()] = true;
  std::set<std::uint32_t> seen{queue.front()};
  auto push = [&](int x, int y, int z, int kk) {
    const std::uint32_t key = normalize(x, y, z, kk);
    if (seen.insert(key).second) {
      visited[key] = true;
      queue.push_back(key);
    }
  };
  while (!queue.empty()) {
    const std::uint32_t key = queue.back();
    queue.pop_back();
    const int kk = static_cast<int>(key & 127);
    const int cc = static_cast<int>((key >> 7) & 127);
    const int bb = static_cast<int>((key >> 14) & 127);
    const int aa = static_cast<int>((key >> 21) & 127);
    push(red(-aa), red(-bb), red(-cc), kk);
    push(red(-aa), red(bb - aa), red(cc - aa), kk);
    push(red(-bb), red(aa - bb), red(cc - bb), kk);
    push(red(-cc), red(aa - cc), red(bb - cc), kk);
  }
}

} // namespace

void enumerate_params(int max_n,
                      const std::function<void(const NestParams &)> &emit) {
  if (max_n < 4)
    throw std::invalid_argument("max_n must be at least 4");
  if (max_n > kMaxCensusN)
    throw std::invalid_argument("census enumeration supports n <= 127");
  std::vector<bool> visited;
  for (int n = 4; n <= max_n; ++n) {
    visited.assign(1u << 28, false);
    const int k_max = (n - 1) / 2;
    for (int a = 1; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int k = 1; k <= k_max; ++k) {
            if (visited[pack_tuple(a, b, c, k)])
              continue;
            emit(NestParams{n, a, b, c, k});
            mark_normalized_orbit(n, a, b, c, k, visited);
          }
  }
}

std::vector<NestParams> enumerate_params(int max_n) {
  std::vector<NestParams> out;
  enumerate_params(max_n,
                   [&](const NestParams &p) { out.push_back(p); });
  return out;
}

bool prefilter(const Graph &g) {
  if (!g.regular_valency())
    throw std::invalid_argument("prefilter expects a regular graph");
  const int n = g.vertex_count();
  const auto edge_list = g.edges();
  if (edge_list.empty())
    return true;

  // stage 1: common-neighbor count per edge, plus per-vertex multisets
  std::vector<std::vector<int>> per_vertex(static_cast<std::size_t>(n));
  int constant = -1;
  for (auto [u, v] : edge_list) {
    const int count = g.common_neighbor_count(u, v);
    if (constant < 0)
      constant = count;
    else if (count != constant)
      return false;
    per_vertex[static_cast<std::size_t>(u)].push_back(count);
    per_vertex[static_cast<std::size_t>(v)].push_back(count);
  }
  for (auto &counts : per_vertex)
    std::sort(counts.begin(), counts.end());
  for (int v = 1; v < n; ++v)
    if (per_vertex[static_cast<std::size_t>(v)] != per_vertex[0])
      return false;

  // stage 2: short walk counts. A^k entries on edges and the unordered pair
  // of endpoint diagonal entries are edge-orbit invariants; triangle counts
  // alone cannot separate the many triangle-free tuples.
  auto at = [n](std::vector<int> &m, int i, int j) -> int & {
    return m[static_cast<std::size_t>(i) * n + j];
  };
  std::vector<int> walk2(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    at(walk2, u, u) = g.degree(u);
    for (int v = u + 1; v < n; ++v)
      at(walk2, u, v) = at(walk2, v, u) = g.common_neighbor_count(u, v);
  }
  std::vector<int> walk3(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int total = 0;
      for (int y : g.neighbors(v))
        total += at(walk2, u, y);
      at(walk3, u, v) = total;
    }
  std::vector<int> walk4(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int total = 0;
      for (int y : g.neighbors(v))
        total += at(walk3, u, y);
      at(walk4, u, v) = total;
    }

  std::array<int, 5> edge_signature{-1, -1, -1, -1, -1};
  for (auto [u, v] : edge_list) {
    int walk5 = 0;
    for (int y : g.neighbors(v))
      walk5 += at(walk4, u, y);
    const auto diag = std::minmax(at(walk4, u, u), at(walk4, v, v));
    const std::array<int, 5> signature{at(walk3, u, v), at(walk4, u, v),
                                       walk5, diag.first, diag.second};
    if (edge_signature[0] < 0)
      edge_signature = signature;
    else if (signature != edge_signature)
      return false;
  }
  return true;
}

namespace {

CensusRecord compute_record(const NestParams &p, bool always_full) {
  CensusRecord rec;
  rec.params = p;
  rec.vertex_count = 2 * p.n;
  const Graph g = build_nest(p);
  rec.girth = *g.girth(); // Nest graphs contain the rim cycle
  const bool passes = prefilter(g);
  if (!passes && !always_full)
    return rec;

  const GraphSymmetry sym = analyze_symmetry(g);
  const Perm rho = rho_perm(p);
  if (!sym.group.contains(rho))
    throw std::logic_error("rho must be an automorphism of its Nest graph");
  rec.aut_order = sym.group.order_u64();
  rec.vertex_transitive = is_vertex_transitive(g, sym.group);
  rec.edge_transitive = is_edge_transitive(g, sym.group);
  if (!passes && rec.edge_transitive)
    throw std::logic_error("prefilter rejected an edge-transitive graph");
  rec.arc_transitive =
      rec.edge_transitive && is_arc_transitive(g, sym.group);
  const CyclicCore core = cyclic_core(sym.group, rho);
  rec.core_free = core.order == 1;
  rec.core_order = core.order;
  rec.certificate = sym.certificate.hex();
  return rec;
}

void assign_iso_classes(std::vector<CensusRecord> &records) {
  std::set<std::string> certs;
  for (const CensusRecord &r : records)
    if (r.certificate)
      certs.insert(*r.certificate);
  std::map<std::string, int> id;
  int next = 0;
  for (const std::string &c : certs)
    id[c] = next++;
  for (CensusRecord &r : records)
    r.iso_class =
        r.certificate ? std::optional<int>(id.at(*r.certificate)) : std::nullopt;
}

// Complete (newline-terminated) lines of a possibly truncated file.
std::vector<std::string> complete_lines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return {};
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    const std::size_t nl = contents.find('\n', start);
    if (nl == std::string::npos)
      break; // trailing partial line (if any) is discarded
    lines.push_back(contents.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

} // namespace

CensusRecord profile(const NestParams &p) { return compute_record(p, true); }

CensusStats census_run(int max_n, const std::string &out_path,
                       const CensusOptions &options) {
  if (options.jobs < 1)
    throw std::invalid_argument("--jobs must be at least 1");
  const std::vector<NestParams> tuples = enumerate_params(max_n);

  std::vector<CensusRecord> records;
  records.reserve(tuples.size());
  CensusStats stats;
  stats.tuples = tuples.size();

  std::size_t done = 0;
  if (options.resume) {
    const std::vector<std::string> lines = complete_lines(out_path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i >= tuples.size())
        throw std::runtime_error(out_path +
                                 ": has more records than the enumeration");
      CensusRecord rec;
      try {
        rec = CensusRecord::from_json_line(lines[i]);
      } catch (const std::exception &e) {
        throw std::runtime_error(out_path + ":" + std::to_string(i + 1) +
                                 ": bad record: " + e.what());
      }
      if (rec.params != tuples[i])
        throw std::runtime_error(out_path + ":" + std::to_string(i + 1) +
                                 ": parameters do not match the enumeration");
      records.push_back(std::move(rec));
    }
    done = records.size();
    stats.reused = done;
  }

  {
    std::ofstream out(out_path,
                      options.resume && done > 0
                          ? std::ios::binary | std::ios::app
                          : std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error(out_path + ": cannot open for writing");
    // Rewrite the reused prefix only when starting fresh; in resume mode the
    // existing complete lines stay in place and we append after them.
    if (!(options.resume && done > 0)) {
      records.clear();
      done = 0;
      stats.reused = 0;
    }

    const std::size_t chunk_size = 1024;
    std::vector<CensusRecord> chunk;
    for (std::size_t lo = done; lo < tuples.size(); lo += chunk_size) {
      const std::size_t hi = std::min(lo + chunk_size, tuples.size());
      chunk.assign(hi - lo, CensusRecord{});
      if (options.jobs == 1) {
        for (std::size_t i = lo; i < hi; ++i)
          chunk[i - lo] = compute_record(tuples[i], false);
      } else {
        std::atomic<std::size_t> next{lo};
        std::vector<std::thread> workers;
        const int thread_count =
            static_cast<int>(std::min<std::size_t>(
                static_cast<std::size_t>(options.jobs), hi - lo));
        workers.reserve(static_cast<std::size_t>(thread_count));
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        for (int t = 0; t < thread_count; ++t)
          workers.emplace_back([&]() {
            while (true) {
              const std::size_t i = next.fetch_add(1);
              if (i >= hi || failed.load())
                return;
              try {
                chunk[i - lo] = compute_record(tuples[i], false);
              } catch (...) {
                failed.store(true);
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                  error = std::current_exception();
                return;
              }
            }
          });
        for (std::thread &w : workers)
          w.join();
        if (error)
          std::rethrow_exception(error);
      }
      for (std::size_t i = lo; i < hi; ++i) {
        out << chunk[i - lo].to_json_line() << '\n';
        records.push_back(std::move(chunk[i - lo]));
      }
      out.flush();
      if (!out)
        throw std::runtime_error(out_path + ": write failed");
    }
  }

  for (const CensusRecord &r : records)
    if (r.certificate)
      ++stats.survivors;

  assign_iso_classes(records);
  std::set<int> distinct;
  for (const CensusRecord &r : records)
    if (r.iso_class)
      distinct.insert(*r.iso_class);
  stats.iso_classes = distinct.size();

  const std::string tmp_path = out_path + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error(tmp_path + ": cannot open for writing");
    for (const CensusRecord &r : records)
      out << r.to_json_line() << '\n';
    out.flush();
    if (!out)
      throw std::runtime_error(tmp_path + ": write failed");
  }
  if (std::rename(tmp_path.c_str(), out_path.c_str()) != 0)
    throw std::runtime_error(out_path + ": atomic replace failed");
  return stats;
}

std::vector<CensusRecord> read_census(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error(path + ": cannot open");
  std::vector<CensusRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    try {
      records.push_back(CensusRecord::from_json_line(line));
    } catch (const std::exception &e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed census record: " + e.what());
    }
  }
  if (records.empty())
    throw std::runtime_error(path + ": no census records");
  return records;
}

namespace {

int census_max_n(const std::vector<CensusRecord> &records) {
  int max_n = 0;
  for (const CensusRecord &r : records)
    max_n = std::max(max_n, r.params.n);
  return max_n;
}

void check_census_complete(const std::string &path,
                           const std::vector<CensusRecord> &records) {
  const std::vector<NestParams> expected = enumerate_params(census_max_n(records));
  if (records.size() != expected.size())
    throw std::runtime_error(path + ": census is incomplete for its max n");
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].params != expected[i])
      throw std::runtime_error(path + ": record order does not match the enumeration");
}

// Structural witness for the fourth classified graph: a minimal non-cyclic
// block system with blocks of size 4 whose quotient is K_{3,3}, covered
// twice, with an elementary-abelian kernel of order 16 acting with orbits of
// length 4.
bool matches_k33_double_cover(const NestParams &p) {
  const Graph g = build_nest(p);
  const PermGroup aut = automorphism_group(g);
  if (!aut.is_transitive())
    return false;
  for (const BlockSystemInfo &info : minimal_block_systems(aut, 0, p.n)) {
    if (info.block_size != 4 || !info.cyclic || *info.cyclic)
      continue;
    if (info.kernel_order != 16 || !info.normal)
      continue;
    if (cover_index(g, info.partition) != std::optional<int>(2))
      continue;
    const Graph q = quotient(g, info.partition);
    if (!are_isomorphic(q, complete_bipartite(3, 3)))
      continue;
    const InducedAction action = induced_action(aut, info.partition);
    bool elementary = true;
    for (const Perm &gen : action.kernel.generators())
      if (gen.order() != 2) {
        elementary = false;
        break;
      }
    for (const Perm &x : action.kernel.generators()) {
      for (const Perm &y : action.kernel.generators())
        if (x * y != y * x) {
          elementary = false;
          break;
        }
      if (!elementary)
        break;
    }
    if (!elementary)
      continue;
    if (!action.kernel.orbits().same_classes(info.partition))
      continue;
    return true;
  }
  return false;
}

} // namespace

std::string TheoremReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_n"] = max_n;
  j["record_count"] = record_count;
  j["candidate_count"] = candidate_count;
  nlohmann::ordered_json classes_json = nlohmann::ordered_json::array();
  for (const ClassSummary &c : classes) {
    nlohmann::ordered_json cls;
    cls["iso_class"] = c.iso_class;
    cls["representative"] = {c.representative.n, c.representative.a,
                             c.representative.b, c.representative.c,
                             c.representative.k};
    cls["member_count"] = c.member_count;
    cls["matched_name"] = c.matched_name;
    cls["certificate"] = c.certificate;
    classes_json.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes_json);
  j["verdict"] = verdict;
  j["problems"] = problems;
  return j.dump(2);
}

int TheoremReport::exit_code() const {
  if (verdict == "pass")
    return 0;
  if (verdict == "partial")
    return 2;
  return 1;
}

TheoremReport verify_theorem(const std::string &census_path) {
  const std::vector<CensusRecord> records = read_census(census_path);
  check_census_complete(census_path, records);

  TheoremReport report;
  report.max_n = census_max_n(records);
  report.record_count = records.size();

  std::map<std::string, std::vector<const CensusRecord *>> classes;
  for (const CensusRecord &r : records) {
    // internal consistency: an edge-transitive record carries a full profile
    if (r.edge_transitive &&
        (!r.aut_order || !r.core_free || !r.core_order || !r.certificate)) {
      report.problems.push_back("edge-transitive record " +
                                r.params.to_string() +
                                " lacks its symmetry profile");
      continue;
    }
    if (r.arc_transitive && !r.edge_transitive) {
      report.problems.push_back("record " + r.params.to_string() +
                                " is arc-transitive but not edge-transitive");
      continue;
    }
    if (r.core_free && r.core_order &&
        (*r.core_free != (*r.core_order == 1))) {
      report.problems.push_back("record " + r.params.to_string() +
                                " has inconsistent core fields");
      continue;
    }
    if (!(r.edge_transitive && r.core_free && *r.core_free))
      continue;
    ++report.candidate_count;
    classes[*r.certificate].push_back(&r);
  }

  struct Reference {
    const char *name;
    NestParams expected;
    std::string certificate;
  };
  std::vector<Reference> references = {
      {"petersen_complement", validate_params(5, 1, 2, 3, 2),
       canonical_form(petersen_complement()).hex()},
      {"hamming_2_4", validate_params(8, 1, 3, 4, 3),
       canonical_form(hamming_2_4()).hex()},
      {"shrikhande", validate_params(8, 1, 2, 5, 3),
       canonical_form(shrikhande()).hex()},
      {"k33_normal_2_cover", validate_params(12, 2, 4, 8, 5), ""}};

  int iso_class = 0;
  std::set<std::string> matched_names;
  for (const auto &[cert, members] : classes) {
    ClassSummary summary;
    summary.iso_class = iso_class++;
    summary.representative = members.front()->params;
    summary.member_count = members.size();
    summary.certificate = cert;
    for (const Reference &ref : references) {
      if (ref.name == std::string("k33_normal_2_cover")) {
        if (ref.expected.n <= report.max_n &&
            cert == canonical_form(build_nest(ref.expected)).hex() &&
            matches_k33_double_cover(summary.representative)) {
          summary.matched_name = ref.name;
          break;
        }
      } else if (cert == ref.certificate) {
        summary.matched_name = ref.name;
        break;
      }
    }
    if (summary.matched_name.empty())
      report.problems.push_back("unexpected edge-transitive core-free class "
                                "with representative " +
                                summary.representative.to_string());
    else if (!matched_names.insert(summary.matched_name).second)
      report.problems.push_back("reference graph matched twice: " +
                                summary.matched_name);
    report.classes.push_back(std::move(summary));
  }

  for (const Reference &ref : references) {
    if (ref.expected.n > report.max_n)
      continue;
    if (!matched_names.count(ref.name))
      report.problems.push_back(std::string("expected class missing: ") +
                                ref.name + " (" + ref.expected.to_string() +
                                ")");
  }

  if (!report.problems.empty())
    report.verdict = "fail";
  else if (report.max_n < 12)
    report.verdict = "partial";
  else
    report.verdict = report.classes.size() == 4 ? "pass" : "fail";
  return report;
}

std::string InvariantReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
  for (const InvariantCheck &c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["checked"] = c.checked;
    cj["vacuous"] = c.vacuous;
    cj["detail"] = c.detail;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  j["all_pass"] = all_pass;
  return j.dump(2);
}

InvariantReport invariant_suite(const std::string &census_path) {
  const std::vector<CensusRecord> records = read_census(census_path);
  check_census_complete(census_path, records);
  const int max_n = census_max_n(records);

  InvariantReport report;
  auto add_check = [&](InvariantCheck check) {
    report.checks.push_back(std::move(check));
  };

  // (i) when c = a + b, edge-transitivity and arc-transitivity coincide
  {
    InvariantCheck check{"sum_offset_arc_equivalence", true, 0, false, ""};
    for (const CensusRecord &r : records) {
      const auto &p = r.params;
      if ((p.a + p.b) % p.n != p.c)
        continue;
      ++check.checked;
      if (r.edge_transitive != r.arc_transitive) {
        check.pass = false;
        check.detail = "counterexample " + p.to_string();
        break;
      }
    }
    check.vacuous = check.checked == 0;
    add_check(std::move(check));
  }

  // (ii) core-free with <rho> proper implies n^2 < |Aut|
  {
    InvariantCheck check{"cyclic_core_order_bound", true, 0, false, ""};
    for (const CensusRecord &r : records) {
      if (!r.core_free || !*r.core_free || !r.aut_order)
        continue;
      const auto n = static_cast<std::uint64_t>(r.params.n);
      if (*r.aut_order == n)
        continue; // <rho> is the whole group
      ++check.checked;
      if (!(n * n < *r.aut_order)) {
        check.pass = false;
        check.detail = "counterexample " + r.params.to_string();
        break;
      }
    }
    check.vacuous = check.checked == 0;
    add_check(std::move(check));
  }

  struct EtContext {
    const CensusRecord *record;
    Graph graph;
    PermGroup aut;
    std::vector<BlockSystemInfo> systems;
  };
  std::vector<EtContext> et;
  for (const CensusRecord &r : records) {
    if (!r.edge_transitive)
      continue;
    Graph g = build_nest(r.params);
    PermGroup aut = automorphism_group(g);
    std::vector<BlockSystemInfo> systems;
    if (aut.is_transitive())
      systems = minimal_block_systems(aut, 0, r.params.n);
    et.push_back(EtContext{&r, std::move(g), std::move(aut),
                           std::move(systems)});
  }

  // (iii) cyclic minimal systems of size d < n/2: kernel C_d, a plain cover,
  // quotient isomorphic to the reduced-parameter graph
  {
    InvariantCheck check{"cyclic_block_quotients", true, 0, false, ""};
    for (const EtContext &ctx : et) {
      const NestParams &p = ctx.record->params;
      for (const BlockSystemInfo &info : ctx.systems) {
        if (!info.cyclic || !*info.cyclic)
          continue;
        const int d = info.block_size;
        if (2 * d >= p.n)
          continue;
        ++check.checked;
        std::string problem;
        const InducedAction action = induced_action(ctx.aut, info.partition);
        if (action.kernel.order() != static_cast<GroupOrder>(d))
          problem = "kernel order is not d";
        else if (!action.kernel.contains(rho_perm(p).pow(p.n / d)))
          problem = "kernel is not the cyclic subgroup C_d";
        else if (cover_index(ctx.graph, info.partition) !=
                 std::optional<int>(1))
          problem = "not a plain cover";
        else {
          const auto qp = quotient_params(p, d);
          if (!qp)
            problem = "quotient parameters are invalid";
          else if (!are_isomorphic(quotient(ctx.graph, info.partition),
                                   build_nest(*qp)))
            problem = "quotient graph mismatch";
        }
        if (!problem.empty()) {
          check.pass = false;
          check.detail = problem + " at " + p.to_string();
          break;
        }
      }
      if (!check.pass)
        break;
    }
    check.vacuous = check.checked == 0;
    add_check(std::move(check));
  }

  // (iv) non-cyclic minimal systems have even block size, blocks being
  // unions of two C_{d/2}-orbits
  {
    InvariantCheck check{"non_cyclic_block_structure", true, 0, false, ""};
    for (const EtContext &ctx : et) {
      const NestParams &p = ctx.record->params;
      for (const BlockSystemInfo &info : ctx.systems) {
        if (!info.cyclic || *info.cyclic)
          continue;
        ++check.checked;
        const int d = info.block_size;
        std::string problem;
        if (d % 2 != 0)
          problem = "odd block size";
        else if (p.n % (d / 2) != 0)
          problem = "d/2 does not divide n";
        else {
          const int stride = d / 2 == 0 ? 0 : p.n / (d / 2);
          for (const auto &block : info.partition.classes()) {
            std::map<std::pair<int, int>, int> orbit_counts;
            for (int x : block) {
              const int side = x < p.n ? 0 : 1;
              const int offset = (x % p.n) % stride;
              ++orbit_counts[{side, offset}];
            }
            if (orbit_counts.size() != 2) {
              problem = "block is not a union of two cyclic orbits";
              break;
            }
            for (const auto &entry : orbit_counts)
              if (entry.second != d / 2)
                problem = "block does not contain full cyclic orbits";
            if (!problem.empty())
              break;
          }
        }
        if (!problem.empty()) {
          check.pass = false;
          check.detail = problem + " at " + p.to_string();
          break;
        }
      }
      if (!check.pass)
        break;
    }
    check.vacuous = check.checked == 0;
    add_check(std::move(check));
  }

  // (v) a non-trivial automorphism fixing the whole rim forces the odd-m
  // family (checked through certificates)
  {
    InvariantCheck check{"fixed_rim_characterization", true, 0, false, ""};
    for (const EtContext &ctx : et) {
      const NestParams &p = ctx.record->params;
      if (p.n <= 8)
        continue;
      std::vector<int> rim(static_cast<std::size_t>(p.n));
      for (int i = 0; i < p.n; ++i)
        rim[static_cast<std::size_t>(i)] = i;
      if (ctx.aut.pointwise_stabilizer(rim).is_trivial())
        continue;
      ++check.checked;
      std::string problem;
      if (p.n % 2 != 0 || (p.n / 2) % 2 == 0)
        problem = "modulus is not twice an odd number";
      else {
        const int m = p.n / 2;
        const NestParams family = validate_params(2 * m, 2, m, 2 + m, 1);
        if (!ctx.record->certificate ||
            *ctx.record->certificate !=
                canonical_form(build_nest(family)).hex())
          problem = "not isomorphic to the odd-m family graph";
      }
      if (!problem.empty()) {
        check.pass = false;
        check.detail = problem + " at " + p.to_string();
        break;
      }
    }
    check.vacuous = check.checked == 0;
    add_check(std::move(check));
  }

  // (vi) the odd-m family: arc-transitive, vertex stabilizer of order 12,
  // never core-free; the census record must agree
  {
    InvariantCheck check{"odd_m_family_profile", true, 0, false, ""};
    for (int m = 3; 2 * m <= max_n; m += 2) {
      ++check.checked;
      const NestParams family = validate_params(2 * m, 2, m, 2 + m, 1);
      const Graph g = build_nest(family);
      const PermGroup aut = automorphism_group(g);
      std::string problem;
      if (!is_arc_transitive(g, aut))
        problem = "not arc-transitive";
      else if (aut.point_stabilizer(0).order() != 12)
        problem = "vertex stabilizer order is not 12";
      else if (cyclic_core(aut, rho_perm(family)).order <= 1)
        problem = "unexpectedly core-free";
      else {
        const NestParams rep = canonical_variant(family);
        const auto it = std::lower_bound(
            records.begin(), records.end(), rep,
            [](const CensusRecord &r, const NestParams &q) {
              return r.params < q;
            });
        if (it == records.end() || it->params != rep)
          problem = "census record for the family representative is missing";
        else if (!it->arc_transitive || !it->core_free ||
                 *it->core_free)
          problem = "census record disagrees with the direct computation";
      }
      if (!problem.empty()) {
        check.pass = false;
        check.detail = problem + " at m=" + std::to_string(m);
        break;
      }
    }
    check.vacuous = check.checked == 0;
    add_check(std::move(check));
  }

  report.all_pass = true;
  for (const InvariantCheck &c : report.checks)
    report.all_pass = report.all_pass && c.pass;
  return report;
}

} // namespace nest
