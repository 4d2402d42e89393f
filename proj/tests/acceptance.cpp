// Acceptance run: one PASS/FAIL line per criterion. Criterion 2 is long and
// only runs with AMM_EXTENDED=1; it never affects the exit status.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "amm/amm_exact.hpp"
#include "amm/census.hpp"
#include "amm/charpoly.hpp"
#include "amm/compare.hpp"
#include "amm/graph6.hpp"
#include "amm/rooted_family.hpp"
#include "amm/verify.hpp"

using namespace amm;

namespace {

int threads() {
  if (const char* env = std::getenv("AMM_THREADS")) return std::max(1, std::atoi(env));
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome join(const std::vector<CheckResult>& checks) {
  Outcome o{true, ""};
  for (const auto& c : checks) {
    o.passed = o.passed && c.passed;
    o.detail += (o.detail.empty() ? "" : " | ") + c.name + ": " + c.detail;
  }
  return o;
}

std::string census_text(int lo, int hi, int workers, std::size_t chunk, const std::string& checkpoint = {},
                        std::optional<std::size_t> stop = {}) {
  CensusOptions o;
  o.n_min = lo;
  o.n_max = hi;
  o.threads = workers;
  o.chunk_size = chunk;
  o.checkpoint_path = checkpoint;
  o.stop_after_chunks = stop;
  for (int guard = 0; guard < 10000; ++guard) {
    const CensusOutcome r = run_census(o);
    if (r.complete) return census_csv(r.records);
  }
  return "did not finish";
}

Outcome census_reproduction() {
  CensusOptions o;
  o.n_min = 2;
  o.n_max = 12;
  o.threads = threads();
  const CensusOutcome c = run_census(o);
  const ComparisonReport rep = compare_tables(c.records);
  bool cited = false;
  for (const auto& note : rep.notes) cited = cited || note.rfind("n = 6:", 0) == 0;
  std::ostringstream d;
  d << rep.mismatches.size() << " mismatched cells";
  if (!rep.sanctioned.empty()) d << ", sanctioned at n = 6 (methods agree)";
  d << "; n = 6 conflict " << (cited ? "cited" : "NOT cited");
  return {c.complete && rep.ok && cited, d.str()};
}

Outcome extended_census() {
  CensusOptions o;
  o.n_min = 13;
  o.n_max = 14;
  o.threads = threads();
  const ComparisonReport rep = compare_tables(run_census(o).records);
  o.n_min = o.n_max = 18;
  const auto r18 = run_census(o).records;
  std::uint64_t total = 0;
  bool row = false;
  for (const auto& r : r18) {
    total += r.trees;
    row = row || r == CensusRecord{18, 8, 25, 1};
  }
  std::ostringstream d;
  d << "n = 13..14 " << (rep.ok ? "match" : "differ") << "; n = 18 total " << total << ", row (18,8,25,1) "
    << (row ? "present" : "absent");
  return {rep.ok && total == 123867 && row, d.str()};
}

Outcome t_star(const std::string& cache, std::optional<Tree>& found) {
  const TStarSearch s = search_t_star(threads());
  std::ostringstream d;
  d << s.trees_scanned << " trees, " << s.simple_trees << " simple, " << s.rank8.size() << " of rank 8, "
    << s.below_half.size() << " simple below rank 9";
  if (s.rank8.size() != 1) return {false, d.str()};
  const Tree t(parse_graph6(s.rank8.front()));
  const bool poly = char_poly(t) == t_star_char_poly() && matching_char_poly(t) == t_star_char_poly();
  const int exact = average_mixing_exact(t).rank;
  d << "; " << s.rank8.front() << ", characteristic polynomial " << (poly ? "equal" : "DIFFERENT") << ", exact rank "
    << exact;
  if (poly) {
    found = t;
    save_t_star(t, cache);
  }
  return {poly && exact == 8 && s.trees_scanned == 123867, d.str()};
}

Outcome family(const std::optional<Tree>& base) {
  if (!base) return {false, "T* unavailable"};
  const auto fam = build_family(*base, 2);
  std::ostringstream d;
  bool ok = fam.size() == 3;
  for (const auto& m : fam) {
    d << "X" << m.index << ": n " << m.order() << " rank " << m.rank << " gap " << m.gap << "; ";
    ok = ok && m.simple && m.rank <= m.rank_bound() && m.gap >= m.gap_lower_bound();
  }
  // the direct exact matrix of X1 as an independent route
  const int direct = average_mixing_exact(fam.at(1).graph).rank;
  d << "X1 exact M rank " << direct;
  return {ok && direct == fam[1].rank, d.str()};
}

Outcome determinism() {
  const std::string one = census_text(2, 11, 1, 64);
  const std::string many = census_text(2, 11, 8, 64);
  const auto ck = std::filesystem::temp_directory_path() / "amm_acceptance_checkpoint.json";
  std::filesystem::remove(ck);
  const std::string resumed = census_text(2, 11, 3, 64, ck.string(), 3);
  std::filesystem::remove(ck);
  std::ostringstream d;
  d << "1 vs 8 threads " << (one == many ? "identical" : "DIFFER") << ", interrupted every 3 chunks and resumed "
    << (one == resumed ? "identical" : "DIFFER");
  return {one == many && one == resumed, d.str()};
}

Outcome stars() {
  const auto rows = star_report(2, 11);
  int trace_agree = 0, rank_agree = 0;
  for (const auto& r : rows) {
    trace_agree += r.exact_trace == r.printed_trace;
    rank_agree += r.exact_rank == r.printed_rank;
  }
  std::cout << star_report_text(rows);
  std::ostringstream d;
  d << "report emitted for K_{1,2}..K_{1,11}; printed trace agrees " << trace_agree << "/10, full-rank claim holds "
    << rank_agree << "/10 (informational)";
  return {rows.size() == 10, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cache = "t_star.g6";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--tstar-cache") cache = argv[i + 1];

  bool all = true;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& run, bool gating = true) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << id << "] " << name << (gating ? "" : " (non-gating)") << ": "
              << o.detail << " (" << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s)" << std::endl;
    std::cout.unsetf(std::ios::floatfield);
    if (gating) all = all && o.passed;
  };

  std::optional<Tree> tstar;
  report(1, "census n = 2..12 against the reference table", census_reproduction);
  if (const char* ext = std::getenv("AMM_EXTENDED"); ext && std::string(ext) == "1")
    report(2, "extended census n = 13..14 and n = 18", extended_census, false);
  else
    std::cout << "SKIP [2] extended census (non-gating; set AMM_EXTENDED=1 to run)" << std::endl;
  report(3, "T* search on 18 vertices", [&] { return t_star(cache, tstar); });
  report(4, "family X1, X2 rank and gap", [&] { return family(tstar); });
  report(5, "rooted product block formula, simple trees n <= 10",
         [] { return join({check_rooted_equivalence(10)}); });
  report(6, "coefficient rank equals exact rank, simple trees n <= 10",
         [] { return join({check_coefficient_rank(10)}); });
  report(7, "rank >= 3 certificates, simple trees 4 <= n <= 12 except P4",
         [] { return join({check_lower_bound(4, 12)}); });
  report(8, "matching polynomial equals characteristic polynomial, 1000 random trees n <= 16",
         [] { return join({check_matching_identity(1000, 16, 20240601)}); });
  report(9, "float cross-validation", [] {
    return join({check_float_agreement(10, 1e-9), check_cvdv(10, 1e-7), check_cesaro(6, 1e4, 5e-3)});
  });
  report(10, "structural invariants and kernel lifting",
         [] { return join({check_structural(10), check_kernel_lifting(8)}); });
  report(11, "determinism across threads and checkpoint resume", determinism);
  report(12, "star formulas comparison report", stars);
  std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
  return all ? 0 : 1;
}
