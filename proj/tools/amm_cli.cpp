// amm: average mixing matrices of trees from the command line.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "amm/amm_exact.hpp"
#include "amm/amm_float.hpp"
#include "amm/census.hpp"
#include "amm/charpoly.hpp"
#include "amm/compare.hpp"
#include "amm/errors.hpp"
#include "amm/graph6.hpp"
#include "amm/matchings.hpp"
#include "amm/rat_matrix.hpp"
#include "amm/rooted_family.hpp"
#include "amm/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInterrupted = 3;

std::atomic<bool> g_cancel{false};

extern "C" void on_sigint(int) { g_cancel.store(true); }

int default_threads() {
  if (const char* env = std::getenv("AMM_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw amm::InputError(std::string("AMM_THREADS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Opens the output before any long computation so a bad path fails fast.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw amm::InputError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw amm::InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GraphInput {
  std::string file;
  std::string g6;

  void add_to(CLI::App* cmd) {
    cmd->add_option("file", file, "graph6 or edge-list file");
    cmd->add_option("--g6", g6, "graph6 string");
  }
  amm::Graph load() const {
    if (!g6.empty()) return amm::parse_graph6(g6);
    if (file.empty()) throw amm::InputError("no input graph (give a file or --g6)");
    return amm::read_graph_file(file);
  }
};

int graph_rank(const amm::Graph& g, amm::RankMethod method, bool& simple) {
  const amm::IntPoly phi = amm::char_poly_fast(g);
  simple = amm::is_squarefree(phi);
  switch (method) {
    case amm::RankMethod::Float:
      return amm::numeric_rank(amm::average_mixing_float(g));
    case amm::RankMethod::CoeffFast:
      if (simple) return amm::rank_via_coefficient(g, phi);
      [[fallthrough]];
    case amm::RankMethod::Exact:
      break;
  }
  return amm::average_mixing_exact(g, phi).rank;
}

void print_rows(std::ostream& out, const amm::RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average mixing matrices of continuous quantum walks on trees"};
  app.require_subcommand(1);

  // census
  amm::CensusOptions census;
  std::string census_method = "coeff-fast", census_out;
  std::size_t stop_after = 0;
  int threads = 0;
  auto* c_census = app.add_subcommand("census", "rank census over all trees of each order");
  c_census->add_option("--n-min", census.n_min, "smallest order")->default_val(2)->check(CLI::Range(1, 64));
  c_census->add_option("--n-max", census.n_max, "largest order")->required()->check(CLI::Range(1, 64));
  c_census->add_option("--method", census_method, "exact | coeff-fast | float")->default_val("coeff-fast");
  c_census->add_option("--threads", threads, "worker threads (AMM_THREADS overrides)");
  c_census->add_option("--chunk-size", census.chunk_size, "trees per work unit")->default_val(1024)->check(CLI::PositiveNumber);
  c_census->add_option("--out", census_out, "CSV output path (default stdout)");
  c_census->add_option("--checkpoint", census.checkpoint_path, "checkpoint file, resumed if present");
  c_census->add_option("--stop-after-chunks", stop_after, "stop after this many chunks (testing)");

  // rank
  GraphInput rank_in;
  std::string rank_method = "coeff-fast";
  bool rank_matrix = false, rank_cert = false;
  auto* c_rank = app.add_subcommand("rank", "rank and simple flag of one graph");
  rank_in.add_to(c_rank);
  c_rank->add_option("--method", rank_method, "exact | coeff-fast | float")->default_val("coeff-fast");
  c_rank->add_flag("--matrix", rank_matrix, "also print the exact average mixing matrix");
  c_rank->add_flag("--certificate", rank_cert, "print the rank >= 3 certificate (simple trees)");

  // matrix
  GraphInput mat_in;
  std::string mat_format = "csv", mat_out;
  bool mat_rooted = false;
  auto* c_matrix = app.add_subcommand("matrix", "average mixing matrix of one graph");
  mat_in.add_to(c_matrix);
  c_matrix->add_option("--format", mat_format, "csv | json | float")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json", "float"}));
  c_matrix->add_flag("--rooted", mat_rooted, "matrix of X(K2) from the block formula");
  c_matrix->add_option("--out", mat_out, "output path (default stdout)");

  // family
  int fam_iter = 2, fam_cap = 144;
  std::string tstar_cache = "t_star.g6", fam_out;
  bool no_search = false;
  auto* c_family = app.add_subcommand("family", "iterated rooted products of T*");
  c_family->add_option("--iterations", fam_iter, "build X_0 .. X_k")->default_val(2)->check(CLI::NonNegativeNumber);
  c_family->add_option("--vertex-cap", fam_cap, "refuse members above this order")->default_val(144);
  c_family->add_option("--tstar", tstar_cache, "T* cache file")->default_val("t_star.g6");
  c_family->add_flag("--no-search", no_search, "fail instead of searching when the cache is missing");
  c_family->add_option("--threads", threads, "worker threads for the search");
  c_family->add_option("--out", fam_out, "CSV output path (default stdout)");

  // find-tstar
  auto* c_tstar = app.add_subcommand("find-tstar", "search the 18-vertex trees for T*");
  c_tstar->add_option("--threads", threads, "worker threads");
  c_tstar->add_option("--cache", tstar_cache, "write the result here")->default_val("t_star.g6");

  // verify
  std::string suite = "all";
  int verify_n = 8;
  auto* c_verify = app.add_subcommand("verify", "run an invariant suite");
  c_verify->add_option("--suite", suite, "identities | rooted | kernel | float | lowerbound | stars | all")
      ->default_val("all");
  c_verify->add_option("--n-max", verify_n, "largest tree order")->default_val(8)->check(CLI::Range(1, 20));

  // compare
  std::string compare_file;
  bool no_certs = false;
  auto* c_compare = app.add_subcommand("compare", "compare a census CSV with the reference tables");
  c_compare->add_option("census", compare_file, "census CSV")->required();
  c_compare->add_flag("--no-certificates", no_certs, "skip graph6 listings for mismatched cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_census) {
      census.method = amm::parse_method(census_method);
      census.threads = std::getenv("AMM_THREADS") || threads <= 0 ? default_threads() : threads;
      if (census.n_min < 2 || census.n_min > census.n_max) throw amm::InputError("need 2 <= n-min <= n-max");
      if (stop_after > 0) census.stop_after_chunks = stop_after;
      census.cancel = &g_cancel;
      Output out(census_out);
      std::signal(SIGINT, on_sigint);
      const amm::CensusOutcome res = amm::run_census(census);
      if (!res.complete) {
        std::cerr << "census interrupted";
        if (!census.checkpoint_path.empty()) std::cerr << "; rerun with --checkpoint " << census.checkpoint_path << " to resume";
        std::cerr << '\n';
        return kInterrupted;
      }
      out.stream() << amm::census_csv(res.records);
      return kOk;
    }

    if (*c_rank) {
      const amm::Graph g = rank_in.load();
      bool simple = false;
      const int rank = graph_rank(g, amm::parse_method(rank_method), simple);
      std::cout << "rank " << rank << "\nsimple " << (simple ? "true" : "false") << '\n';
      if (rank_matrix) print_rows(std::cout, amm::average_mixing_exact(g).matrix);
      if (rank_cert) std::cout << amm::to_json(amm::lower_bound_certificate(amm::Tree(g))) << '\n';
      return kOk;
    }

    if (*c_matrix) {
      const amm::Graph g = mat_in.load();
      Output out(mat_out);
      if (mat_format == "float") {
        out.stream() << amm::to_csv(amm::average_mixing_float(mat_rooted ? amm::rooted_product_k2(g) : g));
        return kOk;
      }
      const amm::RatMatrix m = mat_rooted ? amm::amm_rooted_product_exact(g) : amm::average_mixing_exact(g).matrix;
      out.stream() << (mat_format == "json" ? amm::to_json(m) + "\n" : amm::to_csv(m));
      return kOk;
    }

    if (*c_family || *c_tstar) {
      const int t = std::getenv("AMM_THREADS") || threads <= 0 ? default_threads() : threads;
      if (*c_tstar) {
        const amm::TStarSearch s = amm::search_t_star(t);
        std::cerr << s.trees_scanned << " trees, " << s.simple_trees << " simple\n";
        for (const auto& [g6, r] : s.below_half) std::cout << "simple rank " << r << ": " << g6 << '\n';
        const amm::Tree found = amm::find_t_star(t);
        amm::save_t_star(found, tstar_cache);
        std::cout << "T* " << amm::write_graph6(found) << "\ncharacteristic polynomial verified\n";
        return kOk;
      }
      std::optional<amm::Tree> base = amm::load_t_star(tstar_cache);
      if (!base) {
        if (no_search) throw amm::InputError("no T* cache at '" + tstar_cache + "'");
        base = amm::t_star_cached(tstar_cache, t);
      }
      Output out(fam_out);
      out.stream() << amm::family_csv(amm::build_family(*base, fam_iter, fam_cap));
      return kOk;
    }

    if (*c_verify) {
      bool ok = true;
      for (const auto& r : amm::run_suite(suite, verify_n)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        ok = ok && r.passed;
      }
      return ok ? kOk : kFailed;
    }

    if (*c_compare) {
      amm::ComparisonOptions opt;
      opt.certificates = !no_certs;
      const amm::ComparisonReport rep = amm::compare_tables(amm::parse_census_csv(slurp(compare_file)), opt);
      std::cout << rep.text();
      return rep.ok ? kOk : kFailed;
    }
  } catch (const amm::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kFailed;
  } catch (const amm::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const amm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
