#include "amm/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "amm/amm_exact.hpp"
#include "amm/amm_float.hpp"
#include "amm/charpoly.hpp"
#include "amm/compare.hpp"
#include "amm/errors.hpp"
#include "amm/graph6.hpp"
#include "amm/matchings.hpp"
#include "amm/root_sum.hpp"
#include "amm/rooted_family.hpp"
#include "amm/tree_enum.hpp"

namespace amm {
namespace {

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void count() { ++checked_; }
  void fail(const Graph& g, const std::string& why) {
    if (failed_++ < 3) failures_ += (failures_.empty() ? "" : "; ") + write_graph6(g) + ": " + why;
  }
  bool ok() const { return failed_ == 0; }

  CheckResult result(const std::string& extra = {}) const {
    std::ostringstream d;
    d << checked_ << " checked, " << failed_ << " failed";
    if (!failures_.empty()) d << " (" << failures_ << ")";
    if (!extra.empty()) d << "; " << extra;
    return {name_, failed_ == 0, d.str()};
  }

 private:
  std::string name_;
  std::uint64_t checked_ = 0, failed_ = 0;
  std::string failures_;
};

void each_tree(int n_min, int n_max, const std::function<void(const Tree&)>& visit) {
  for (int n = n_min; n <= n_max; ++n) for_each_tree(n, visit);
}

void each_simple_tree(int n_min, int n_max, const std::function<void(const Tree&, const IntPoly&)>& visit) {
  each_tree(n_min, n_max, [&](const Tree& t) {
    const IntPoly phi = matching_char_poly(t);
    if (is_squarefree(phi)) visit(t, phi);
  });
}

RealMatrix to_real(const RatMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

bool annihilates(const RatMatrix& g, const std::vector<Rational>& v) {
  for (const auto& x : multiply(g, v))
    if (x != 0) return false;
  return true;
}

std::vector<Rational> lifted(const std::vector<Rational>& v, bool upper) {
  std::vector<Rational> out(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[(upper ? 0 : v.size()) + i] = v[i];
  return out;
}

}  // namespace

CheckResult check_charpoly_routes(int n_max) {
  Tally tally("characteristic polynomial routes");
  each_tree(1, n_max, [&](const Tree& t) {
    tally.count();
    const IntPoly a = char_poly(t);
    if (a != forest_char_poly(t) || a != matching_char_poly(t)) return tally.fail(t, "routes disagree");
    const IntPoly psi = squarefree_part(a);
    RatPoly quot, rem;
    divmod(to_rational(a), to_rational(psi), quot, rem);
    if (!rem.is_zero()) return tally.fail(t, "psi does not divide phi");
    if (!is_squarefree(psi) || squarefree_part(psi) != psi) return tally.fail(t, "psi not squarefree");
  });
  return tally.result();
}

CheckResult check_matching_identity(int count, int n_max, std::uint64_t seed) {
  Tally tally("matching polynomial identity");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, n_max);
  for (int i = 0; i < count; ++i) {
    const Tree t = random_tree(order(rng), rng);
    tally.count();
    if (matching_char_poly(t) != char_poly(t)) tally.fail(t, "matching polynomial differs");
    const auto m = matching_counts(t);
    const IntPoly phi = char_poly(t);
    for (std::size_t k = 0; k < m.size(); ++k) {
      const Integer sign = k % 2 ? -1 : 1;
      if (phi[t.order() - 2 * static_cast<int>(k)] != sign * m[k]) {
        tally.fail(t, "coefficient of t^(n-2k) differs from (-1)^k m_k");
        break;
      }
    }
  }
  return tally.result();
}

CheckResult check_structural(int n_max) {
  Tally tally("exact structural invariants");
  each_tree(1, n_max, [&](const Tree& t) {
    tally.count();
    const ExactSpectrum spectrum(t);
    const AmmResult r = average_mixing_exact(t, spectrum.char_poly());
    if (!is_doubly_stochastic_symmetric(r.matrix)) return tally.fail(t, "not symmetric doubly stochastic");
    if (!is_positive_semidefinite(r.matrix)) return tally.fail(t, "not positive semidefinite");
    RatPoly diag;
    for (int u = 0; u < t.order(); ++u) {
      const RatPoly p = to_rational(spectrum.entry_poly(u, u));
      diag += p * p;
    }
    const RatPoly dpsi = to_rational(spectrum.squarefree().derivative());
    Rational trace;
    for (int u = 0; u < t.order(); ++u) trace += r.matrix(u, u);
    if (trace_over_roots(diag, dpsi * dpsi, spectrum.squarefree()) != trace) return tally.fail(t, "trace identity fails");
    if (static_cast<int>(kernel_exact(r.matrix).size()) != t.order() - r.rank) tally.fail(t, "kernel dimension");
  });
  return tally.result();
}

CheckResult check_coefficient_rank(int n_max) {
  Tally tally("coefficient rank equals exact rank");
  each_simple_tree(1, n_max, [&](const Tree& t, const IntPoly& phi) {
    tally.count();
    if (rank_via_coefficient(t, phi) != average_mixing_exact(t, phi).rank) tally.fail(t, "ranks differ");
  });
  return tally.result();
}

CheckResult check_half_bound(int n_max) {
  Tally tally("rank at most ceil(n/2) for simple trees");
  each_simple_tree(1, n_max, [&](const Tree& t, const IntPoly& phi) {
    tally.count();
    if (rank_via_coefficient(t, phi) > (t.order() + 1) / 2) tally.fail(t, "rank exceeds ceil(n/2)");
  });
  return tally.result();
}

CheckResult check_rooted_equivalence(int n_max) {
  Tally tally("rooted product block formula");
  each_simple_tree(1, n_max, [&](const Tree& t, const IntPoly&) {
    tally.count();
    if (amm_rooted_product_exact(t) != average_mixing_exact(rooted_product_k2(t.graph())).matrix)
      tally.fail(t, "block formula differs from direct computation");
  });
  return tally.result();
}

CheckResult check_kernel_lifting(int n_max) {
  Tally tally("kernel lifting to X(K2)");
  std::uint64_t vectors = 0;
  each_simple_tree(1, n_max, [&](const Tree& t, const IntPoly& phi) {
    tally.count();
    const auto kernel = kernel_exact(average_mixing_exact(t, phi).matrix);
    const RatMatrix big = average_mixing_exact(rooted_product_k2(t.graph())).matrix;
    for (const auto& v : kernel) {
      ++vectors;
      if (!annihilates(big, lifted(v, true)) || !annihilates(big, lifted(v, false)))
        return tally.fail(t, "lifted kernel vector not in kernel");
    }
  });
  return tally.result(std::to_string(vectors) + " kernel vectors lifted");
}

CheckResult check_kernel_weights(int n_max) {
  Tally tally("weighted projector sums vanish on the kernel");
  // w = num / den, positive on the reals, den without real roots
  const std::vector<std::pair<RatPoly, RatPoly>> weights = {
      {RatPoly::constant(1), RatPoly::constant(1)},
      {RatPoly::constant(2), RatPoly{Rational(4), Rational(0), Rational(1)}},
      {RatPoly::constant(1), RatPoly{Rational(1), Rational(0), Rational(1)}},
      {RatPoly{Rational(2), Rational(0), Rational(1)}, RatPoly{Rational(3), Rational(1), Rational(1)}},
  };
  each_tree(1, n_max, [&](const Tree& t) {
    tally.count();
    const ExactSpectrum spectrum(t);
    const auto kernel = kernel_exact(spectrum.schur_square_sum(weights[0].first, weights[0].second));
    for (const auto& [num, den] : weights) {
      const RatMatrix g = spectrum.schur_square_sum(num, den);
      for (const auto& v : kernel)
        if (!annihilates(g, v)) return tally.fail(t, "kernel vector not annihilated");
    }
  });
  return tally.result();
}

CheckResult check_float_agreement(int n_max, double tol) {
  Tally tally("float pipeline agrees with exact");
  double worst = 0.0;
  each_tree(1, n_max, [&](const Tree& t) {
    tally.count();
    const AmmResult exact = average_mixing_exact(t);
    const RealMatrix approx = average_mixing_float(t);
    const double diff = max_abs_diff(approx, to_real(exact.matrix));
    worst = std::max(worst, diff);
    if (!(diff < tol)) return tally.fail(t, "entry difference " + std::to_string(diff));
    if (numeric_rank(approx) != exact.rank) tally.fail(t, "numeric rank differs");
  });
  std::ostringstream extra;
  extra << "max difference " << worst;
  return tally.result(extra.str());
}

CheckResult check_cvdv(int n_max, double tol) {
  Tally tally("C V D^-2 V^T C^T identity");
  double worst = 0.0;
  each_simple_tree(1, n_max, [&](const Tree& t, const IntPoly&) {
    tally.count();
    const double r = verify_cvdv_identity(t);
    worst = std::max(worst, r);
    if (!(r < tol)) tally.fail(t, "residual " + std::to_string(r));
  });
  std::ostringstream extra;
  extra << "max residual " << worst;
  return tally.result(extra.str());
}

CheckResult check_projectors(int n_max) {
  Tally tally("spectral projector invariants");
  each_tree(1, n_max, [&](const Tree& t) {
    tally.count();
    const SpectralDecomp s = spectral_decomp(t);
    const std::size_t n = t.order();
    RealMatrix sum(n, n, 0.0);
    for (std::size_t a = 0; a < s.clusters.size(); ++a) {
      const RealMatrix& e = s.clusters[a].projector;
      if (max_abs_diff(e * e, e) >= 1e-9) return tally.fail(t, "projector not idempotent");
      for (std::size_t b = a + 1; b < s.clusters.size(); ++b)
        if (max_abs_diff(e * s.clusters[b].projector, RealMatrix(n, n, 0.0)) >= 1e-9)
          return tally.fail(t, "projectors not orthogonal");
      if (a > 0 && !(s.clusters[a].eigenvalue - s.clusters[a - 1].eigenvalue > s.cluster_tol))
        return tally.fail(t, "clusters not separated");
      for (std::size_t i = 0; i < n * n; ++i) sum.data()[i] += e.data()[i];
    }
    if (max_abs_diff(sum, RealMatrix::identity(n)) >= 1e-9) tally.fail(t, "projectors do not sum to I");
    const bool simple = is_squarefree(matching_char_poly(t));
    if (simple != (s.clusters.size() == n)) tally.fail(t, "cluster count disagrees with squarefree test");
  });
  return tally.result();
}

CheckResult check_cesaro(int n_max, double horizon, double tol) {
  Tally tally("Cesaro average converges to exact M");
  double worst = 0.0;
  each_tree(1, n_max, [&](const Tree& t) {
    tally.count();
    const RealMatrix exact = to_real(average_mixing_exact(t).matrix);
    double prev = INFINITY;
    for (double h : {horizon / 100, horizon / 10, horizon}) {
      const double err = max_abs_diff(cesaro_average(t, h, static_cast<int>(h * 20)), exact);
      if (!(err < prev) && err > 1e-12) return tally.fail(t, "error not decreasing at T = " + std::to_string(h));
      prev = err;
    }
    worst = std::max(worst, prev);
    if (!(prev < tol)) tally.fail(t, "error " + std::to_string(prev) + " at the horizon");
  });
  std::ostringstream extra;
  extra << "max error at T = " << horizon << ": " << worst;
  return tally.result(extra.str());
}

CheckResult check_k2_eigenbasis(int n_max) {
  Tally tally("X(K2) eigenbasis");
  each_simple_tree(1, n_max, [&](const Tree& t, const IntPoly&) {
    tally.count();
    const EigenSystem base = eigh(t.graph().adjacency<double>());
    const EigenSystem lift = k2_eigenbasis(base);
    const RealMatrix a = rooted_product_k2(t.graph()).adjacency<double>();
    const std::size_t m = a.rows();
    const RealMatrix av = a * lift.vectors;
    const auto mapped = k2_spectrum_map(base.values);
    for (std::size_t k = 0; k < m; ++k) {
      if (std::abs(mapped[k] - lift.values[k]) > 1e-10) return tally.fail(t, "eigenvalue map differs");
      for (std::size_t i = 0; i < m; ++i)
        if (std::abs(av(i, k) - lift.values[k] * lift.vectors(i, k)) > 1e-10) return tally.fail(t, "eigen-residual");
    }
    if (max_abs_diff(lift.vectors.transposed() * lift.vectors, RealMatrix::identity(m)) > 1e-10)
      tally.fail(t, "not orthonormal");
  });
  return tally.result();
}

CheckResult check_lower_bound(int n_min, int n_max) {
  Tally tally("rank lower bound certificates");
  int c1 = 0, c2 = 0, c3 = 0;
  try {
    (void)lower_bound_certificate(Tree(path(4)));
    tally.fail(path(4), "P4 was not rejected");
  } catch (const DomainError&) {
  }
  const Tree p4 = path(4);
  each_simple_tree(std::max(n_min, 4), n_max, [&](const Tree& t, const IntPoly& phi) {
    if (t.order() == 4 && canonical_form(t) == canonical_form(p4)) return;
    tally.count();
    try {
      const LowerBoundCertificate c = lower_bound_certificate(t);
      if (c.det == 0 || c.det != c.closed_form_det) return tally.fail(t, "determinant mismatch");
      if (!c.side_claims_hold) return tally.fail(t, "side claims fail");
      (c.kind == CertificateCase::C1 ? c1 : c.kind == CertificateCase::C2 ? c2 : c3)++;
      if (average_mixing_exact(t, phi).rank < 3) tally.fail(t, "rank below 3");
    } catch (const std::exception& e) {
      tally.fail(t, e.what());
    }
  });
  return tally.result("cases C1/C2/C3: " + std::to_string(c1) + "/" + std::to_string(c2) + "/" + std::to_string(c3));
}

CheckResult check_matching_structure(int n_max) {
  Tally tally("leaf pair and near-perfect matchings on simple trees");
  each_simple_tree(3, n_max, [&](const Tree& t, const IntPoly&) {
    tally.count();
    try {
      const auto [u, v] = leaf_next_to_degree_two(t);
      if (t.degree(u) != 1 || t.degree(v) != 2 || !t.graph().has_edge(u, v)) return tally.fail(t, "bad leaf pair");
    } catch (const std::exception& e) {
      return tally.fail(t, e.what());
    }
    if (has_perfect_matching(t)) return;
    const auto z = near_perfect_vertex(t);
    if (!z || !has_perfect_matching(t.graph().remove_vertices({*z}))) tally.fail(t, "no near-perfect vertex");
  });
  return tally.result();
}

CheckResult check_census_tables(int n_min, int n_max, RankMethod method, int threads) {
  CensusOptions opt;
  opt.n_min = n_min;
  opt.n_max = n_max;
  opt.method = method;
  opt.threads = threads;
  const CensusOutcome out = run_census(opt);
  const ComparisonReport rep = compare_tables(out.records);
  std::ostringstream d;
  d << "n = " << n_min << ".." << n_max << " method " << to_string(method) << ", " << rep.mismatches.size()
    << " mismatched cells";
  if (!rep.sanctioned.empty()) d << " (sanctioned at known inconsistencies)";
  for (const auto& note : rep.notes) d << "; " << note;
  return {"census tables", out.complete && rep.ok, d.str()};
}

std::vector<StarRow> star_report(int min_leaves, int max_leaves) {
  std::vector<StarRow> rows;
  for (int n = min_leaves; n <= max_leaves; ++n) {
    StarRow row;
    row.leaves = n;
    const AmmResult r = average_mixing_exact(star(n + 1));
    for (int i = 0; i <= n; ++i) row.exact_trace += r.matrix(i, i);
    row.exact_rank = r.rank;
    const Rational d2 = Rational((2 * n - 1) * (2 * n - 1));
    row.printed_trace = n % 2 == 0 ? Rational((Rational(2 * n * n) + Rational(5 * n, 2)) / d2)
                                    : Rational(Rational(2 * n * n + 3 * n) / d2);
    row.printed_trace.canonicalize();
    row.printed_rank = n + 1;

    RatMatrix printed(n + 1, n + 1);
    const Rational scale = Rational(2) / d2;
    printed(0, 0) = scale * n * n;
    for (int i = 1; i <= n; ++i) {
      printed(0, i) = printed(i, 0) = scale * n;
      for (int j = 1; j <= n; ++j) {
        Rational inner = 1;
        if (i == j) inner += Rational(1, 4);
        if (i + j == n + 1) inner += Rational(1, 4);
        printed(i, j) = scale * inner;
      }
    }
    row.printed_matrix_matches = printed == r.matrix;
    row.printed_matrix_rank = exact_rank(printed);
    rows.push_back(row);
  }
  return rows;
}

std::string star_report_text(const std::vector<StarRow>& rows) {
  std::ostringstream out;
  out << "leaves,exact_trace,printed_trace,trace_agrees,exact_rank,claimed_rank,printed_matrix_matches,"
         "printed_matrix_rank\n";
  for (const auto& r : rows)
    out << r.leaves << ',' << r.exact_trace.get_str() << ',' << r.printed_trace.get_str() << ','
        << (r.exact_trace == r.printed_trace ? "yes" : "no") << ',' << r.exact_rank << ',' << r.printed_rank << ','
        << (r.printed_matrix_matches ? "yes" : "no") << ',' << r.printed_matrix_rank << '\n';
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "rooted", "kernel", "float", "lowerbound", "stars", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n_max) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](const char* name) {
    const bool w = all || suite == name;
    known = known || w;
    return w;
  };
  if (want("identities")) {
    out.push_back(check_charpoly_routes(n_max));
    out.push_back(check_matching_identity(200, std::max(n_max, 1), 1));
    out.push_back(check_structural(n_max));
    out.push_back(check_coefficient_rank(n_max));
    out.push_back(check_half_bound(n_max));
  }
  if (want("rooted")) {
    out.push_back(check_rooted_equivalence(n_max));
    out.push_back(check_kernel_lifting(n_max));
    out.push_back(check_k2_eigenbasis(n_max));
  }
  if (want("kernel")) out.push_back(check_kernel_weights(n_max));
  if (want("float")) {
    out.push_back(check_float_agreement(n_max));
    out.push_back(check_cvdv(n_max));
    out.push_back(check_projectors(n_max));
    out.push_back(check_cesaro(std::min(n_max, 6)));
  }
  if (want("lowerbound")) {
    out.push_back(check_lower_bound(4, n_max));
    out.push_back(check_matching_structure(n_max));
  }
  if (want("stars")) {
    const auto rows = star_report(2, std::max(2, n_max - 1));
    out.push_back({"star comparison report (informational)", true, "\n" + star_report_text(rows)});
  }
  if (!known) throw InputError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace amm
