#include "masa/matrix_scene.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace masa::mm {

namespace {

using Vec = Eigen::VectorXcd;
using Cplx = std::complex<double>;

Vec vec(const Mat& x) {
  return Eigen::Map<const Vec>(x.data(), x.size());
}

// Full-precision decimal form; reports compare these numerically.
std::string num_str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Mat unvec(const Vec& v, int n) {
  return Eigen::Map<const Mat>(v.data(), n, n);
}

/// n^2 x n^2 matrix of phi in the standard basis (uniform scaling, so the
/// singular values match the normalized L2 operator norm).
Mat map_matrix(int n, const LinMap& phi) {
  Mat rep(n * n, n * n);
  Mat e = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      e(i, j) = 1.0;
      rep.col(j * n + i) = vec(phi(e));
      e(i, j) = 0.0;
    }
  return rep;
}

/// exp(S) for skew-Hermitian S, via the eigendecomposition of -iS.
Mat expm_skew(const Mat& s) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Cplx(0, -1) * s);
  Vec phases = (Cplx(0, 1) * es.eigenvalues().cast<Cplx>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double sigma_max(const Mat& rep) {
  return rep.jacobiSvd().singularValues()(0);
}

}  // namespace

std::complex<double> ntrace(const Mat& x) { return x.trace() / double(x.rows()); }

double norm2(const Mat& x) {
  return std::sqrt(x.squaredNorm() / double(x.rows()));
}

std::complex<double> inner(const Mat& x, const Mat& y) {
  return (y.adjoint() * x).trace() / double(x.rows());
}

bool is_unitary(const Mat& u, double tol) {
  int n = static_cast<int>(u.rows());
  return (u.adjoint() * u - Mat::Identity(n, n)).norm() < tol * n;
}

Mat random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Cplx d = r(i, i);
    q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : 1.0;
  }
  return q;
}

Mat expect_diag(const Mat& x) {
  return x.diagonal().asDiagonal();
}

Mat expect_conjugated(const Mat& u, const Mat& x) {
  if (!is_unitary(u)) throw std::invalid_argument("u is not unitary");
  return u * expect_diag(u.adjoint() * x * u) * u.adjoint();
}

SubspaceProjection::SubspaceProjection(int n, const std::vector<Mat>& spanning)
    : n_(n) {
  if (spanning.empty()) {
    basis_.resize(n * n, 0);
    return;
  }
  Mat cols(n * n, spanning.size());
  for (size_t i = 0; i < spanning.size(); ++i) cols.col(i) = vec(spanning[i]);
  // Rank-revealing QR gives an orthonormal basis of the span.
  Eigen::ColPivHouseholderQR<Mat> qr(cols);
  qr.setThreshold(1e-10);
  int rank = static_cast<int>(qr.rank());
  Mat q = qr.householderQ();
  basis_ = q.leftCols(rank);
}

Mat SubspaceProjection::operator()(const Mat& x) const {
  if (basis_.cols() == 0) return Mat::Zero(n_, n_);
  return unvec(basis_ * (basis_.adjoint() * vec(x)), n_);
}

namespace {

/// Span closure of the unital *-algebra generated by the given matrices.
std::vector<Mat> algebra_closure(int n, const std::vector<Mat>& generators) {
  std::vector<Mat> gens{Mat::Identity(n, n)};
  for (const auto& g : generators) {
    gens.push_back(g);
    gens.push_back(g.adjoint());
  }
  Mat cols(n * n, gens.size());
  for (size_t i = 0; i < gens.size(); ++i) cols.col(i) = vec(gens[i]);
  auto rank_of = [&](const Mat& c) {
    Eigen::ColPivHouseholderQR<Mat> qr(c);
    qr.setThreshold(1e-10);
    return static_cast<int>(qr.rank());
  };
  std::vector<Mat> span = gens;
  int dim = rank_of(cols);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mat> products;
    for (const auto& a : span)
      for (const auto& g : gens) products.push_back(a * g);
    Mat all(n * n, span.size() + products.size());
    for (size_t i = 0; i < span.size(); ++i) all.col(i) = vec(span[i]);
    for (size_t i = 0; i < products.size(); ++i)
      all.col(span.size() + i) = vec(products[i]);
    int new_dim = rank_of(all);
    if (new_dim > dim) {
      dim = new_dim;
      span.insert(span.end(), products.begin(), products.end());
      grew = true;
    }
  }
  return span;
}

}  // namespace

SubspaceProjection algebra_expectation(int n, const std::vector<Mat>& generators) {
  return SubspaceProjection(n, algebra_closure(n, generators));
}

SubspaceProjection commutant_expectation(int n, const std::vector<Mat>& generators) {
  std::vector<Mat> gens;
  for (const auto& g : generators) {
    gens.push_back(g);
    gens.push_back(g.adjoint());
  }
  if (gens.empty()) gens.push_back(Mat::Identity(n, n));
  // vec(BX - XB) = (I kron B - B^T kron I) vec(X); stack and take the kernel.
  Mat stacked(gens.size() * n * n, n * n);
  for (size_t k = 0; k < gens.size(); ++k) {
    const Mat& b = gens[k];
    Mat op = Mat::Zero(n * n, n * n);
    // kron(I, B) - kron(B^T, I) acting on vec(X), column-major
    for (int j = 0; j < n; ++j) op.block(j * n, j * n, n, n) += b;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          op(j * n + i, l * n + i) -= b(l, j);
    stacked.middleRows(k * n * n, n * n) = op;
  }
  Eigen::FullPivLU<Mat> lu(stacked);
  lu.setThreshold(1e-10);
  Mat kernel = lu.kernel();
  std::vector<Mat> basis;
  for (int c = 0; c < kernel.cols(); ++c)
    basis.push_back(unvec(kernel.col(c), n));
  return SubspaceProjection(n, basis);
}

DixmierRun dixmier_average(int n, const std::vector<Mat>& generators, const Mat& x,
                           int iterations, std::uint64_t seed) {
  auto span = algebra_closure(n, generators);
  SubspaceProjection onto_alg(n, span);
  auto target_proj = commutant_expectation(n, generators);
  Mat target = target_proj(x);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  auto random_alg_unitary = [&]() {
    Mat h = Mat::Zero(n, n);
    for (const auto& b : span) {
      Cplx c(g(rng), g(rng));
      h += c * b + std::conj(c) * b.adjoint();
    }
    h = onto_alg(h);             // stay inside the algebra
    h = (h + h.adjoint()) / 2.0;
    return expm_skew(Cplx(0, 1) * h);
  };

  DixmierRun run;
  run.average = x;
  const int samples = 8;
  for (int it = 0; it < iterations; ++it) {
    Mat next = Mat::Zero(n, n);
    for (int s = 0; s < samples; ++s) {
      Mat u = random_alg_unitary();
      next += u * run.average * u.adjoint();
    }
    run.average = next / double(samples);
    run.distances.push_back(norm2(run.average - target));
  }
  return run;
}

Bracket norm_inf2_bracket(int n, const LinMap& phi, std::uint64_t seed,
                          int restarts) {
  Mat rep = map_matrix(n, phi);
  Bracket bracket;
  bracket.upper = sigma_max(rep);
  Mat gram = rep.adjoint() * rep;

  std::mt19937_64 rng(seed);
  double best = 0;
  Mat best_u = Mat::Identity(n, n);
  auto consider = [&](Mat u) {
    // Geodesic gradient ascent of ||phi(u)||_2^2 over the unitary group.
    double eta = 0.5;
    double f = norm2(phi(u));
    for (int step = 0; step < 200 && eta > 1e-12; ++step) {
      Vec gv = gram * vec(u);
      Mat grad = unvec(gv, n);
      Mat s = grad * u.adjoint() - u * grad.adjoint();  // skew-Hermitian
      Mat trial = expm_skew(eta * s) * u;
      double ft = norm2(phi(trial));
      if (ft > f + 1e-14 && is_unitary(trial, 1e-8)) {
        u = trial;
        f = ft;
        eta = std::min(eta * 1.5, 2.0);
      } else {
        eta *= 0.5;
      }
    }
    if (f > best) {
      best = f;
      best_u = u;
    }
  };

  consider(Mat::Identity(n, n));
  // Permutation starts cover expectation-difference maps whose maximizers
  // are coordinate flips.
  {
    Mat perm = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) perm((i + 1) % n, i) = 1.0;
    consider(perm);
  }
  for (int r = 0; r < restarts; ++r) consider(random_unitary(n, rng));

  bracket.lower = best;
  bracket.maximizer = best_u;
  // Float slack can leave lower a hair above upper for exact projections.
  bracket.lower = std::min(bracket.lower, bracket.upper);
  return bracket;
}

CheckReport check_prop21(const Scene& scene, const Mat& u, std::uint64_t seed,
                         int samples, bool with_bracket) {
  if (!is_unitary(u)) throw std::invalid_argument("u is not unitary");
  int n = scene.n;
  double rhs = 4.0 * norm2(u - expect_diag(u));

  std::mt19937_64 rng(seed);
  double worst_chain = 0;
  for (int s = 0; s < samples; ++s) {
    Mat v = random_unitary(n, rng);
    double chain = norm2(expect_diag(u * v) * u - u * expect_diag(v * u));
    worst_chain = std::max(worst_chain, chain);
  }
  bool pass = worst_chain <= rhs + scene.tol_opt;

  double lower = 0;
  if (with_bracket) {
    auto phi = [&u](const Mat& x) { return Mat(expect_diag(x) - expect_conjugated(u, x)); };
    auto bracket = norm_inf2_bracket(n, phi, seed + 1);
    lower = bracket.lower;
    pass = pass && lower <= rhs + scene.tol_opt;
  }

  CheckReport rep;
  rep.check = "prop21_chain";
  rep.paper_eq = "2.2";
  rep.inputs = {{"n", n}, {"samples", samples}, {"with_bracket", with_bracket}};
  rep.lhs = num_str(with_bracket ? std::max(worst_chain, lower) : worst_chain);
  rep.rhs = num_str(rhs);
  rep.exact = false;
  rep.pass = pass;
  rep.witness = {{"worst_chain", worst_chain}, {"bracket_lower", lower}};
  return rep;
}

CheckReport flip_unitary(const Scene& scene, const Mat& p) {
  int n = scene.n;
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  std::vector<int> supp, comp;
  for (int i = 0; i < n; ++i) {
    double d = p(i, i).real();
    if (std::abs(d - 1.0) < 1e-12)
      supp.push_back(i);
    else if (std::abs(d) < 1e-12)
      comp.push_back(i);
    else
      throw std::invalid_argument("p must be a diagonal 0/1 projection");
  }
  if (supp.size() != comp.size())
    throw std::invalid_argument("p must have trace 1/2");

  Mat v = Mat::Zero(n, n);
  for (size_t k = 0; k < supp.size(); ++k) v(supp[k], comp[k]) = 1.0;
  Mat u = v + v.adjoint();
  Mat pperp = Mat::Identity(n, n) - p;

  double flip_err = (u * p * u - pperp).norm();
  double ea_err = expect_diag(u).norm();
  double len = norm2(u - expect_diag(u));

  CheckReport rep;
  rep.check = "flip_unitary";
  rep.paper_eq = "2.7c";
  rep.inputs = {{"n", n}, {"tr_p", ntrace(p).real()}};
  rep.lhs = num_str(len);
  rep.rhs = "1";
  rep.exact = false;
  rep.pass = flip_err < scene.tol_exact && ea_err < scene.tol_exact &&
             std::abs(len - 1.0) < scene.tol_exact;
  rep.witness = {{"upu_vs_pperp", flip_err}, {"E_A(u)_norm", ea_err}};
  return rep;
}

CheckReport check_lemma53(const Scene& scene, const std::vector<Mat>& a_gens,
                          const std::vector<Mat>& b_gens, std::uint64_t seed) {
  int n = scene.n;
  auto ea = algebra_expectation(n, a_gens);
  auto eb = algebra_expectation(n, b_gens);
  auto eac = commutant_expectation(n, a_gens);
  auto ebc = commutant_expectation(n, b_gens);

  auto phi = [&](const Mat& x) { return eac(x - ebc(x)); };
  auto psi = [&](const Mat& x) {
    Mat y = eb(x);
    return Mat(y - ea(y));
  };
  auto b_phi = norm_inf2_bracket(n, phi, seed);
  auto b_psi = norm_inf2_bracket(n, psi, seed + 1);

  CheckReport rep;
  rep.check = "lemma53";
  rep.paper_eq = "5.18";
  rep.inputs = {{"n", n}};
  rep.lhs = num_str(b_phi.lower);
  rep.rhs = num_str(2.0 * b_psi.upper);
  rep.exact = false;
  rep.pass = b_phi.lower <= 2.0 * b_psi.upper + scene.tol_opt;
  rep.witness = {{"lhs_bracket", {b_phi.lower, b_phi.upper}},
                 {"rhs_bracket", {b_psi.lower, b_psi.upper}}};
  return rep;
}

CheckReport check_lemma71(const Scene& scene, const LinMap& phi, const LinMap& psi,
                          std::uint64_t seed) {
  int n = scene.n;
  Mat rep_phi = map_matrix(n, phi);
  Mat rep_psi = map_matrix(n, psi);
  double range_overlap = (rep_phi.adjoint() * rep_psi).norm();
  if (range_overlap > 1e-10 * n * n)
    throw std::invalid_argument("ranges are not trace-orthogonal");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double worst_pyth = 0;
  for (int s = 0; s < 64; ++s) {
    Mat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = Cplx(g(rng), g(rng));
    Mat fx = phi(x), gx = psi(x);
    for (double sign : {1.0, -1.0}) {
      double lhs = std::pow(norm2(fx + sign * gx), 2);
      double rhs = std::pow(norm2(fx), 2) + std::pow(norm2(gx), 2);
      worst_pyth = std::max(worst_pyth, std::abs(lhs - rhs) / std::max(1.0, rhs));
    }
  }

  auto sum_map = [&](double sign) {
    return [&phi, &psi, sign](const Mat& x) { return Mat(phi(x) + sign * psi(x)); };
  };
  auto b_phi = norm_inf2_bracket(n, phi, seed + 1);
  auto b_psi = norm_inf2_bracket(n, psi, seed + 2);
  double cap = std::sqrt(b_phi.upper * b_phi.upper + b_psi.upper * b_psi.upper);
  bool norms_ok = true;
  for (double sign : {1.0, -1.0}) {
    auto b = norm_inf2_bracket(n, sum_map(sign), seed + 3);
    norms_ok = norms_ok && b.lower <= cap + scene.tol_opt;
  }

  CheckReport rep;
  rep.check = "lemma71";
  rep.paper_eq = "7.1a";
  rep.inputs = {{"n", n}};
  rep.lhs = num_str(worst_pyth);
  rep.rhs = num_str(scene.tol_exact);
  rep.exact = false;
  rep.pass = worst_pyth < scene.tol_exact && norms_ok;
  rep.witness = {{"range_overlap", range_overlap}};
  return rep;
}

CheckReport check_thm71_chain(const Scene& scene, const Mat& p, const Mat& q,
                              const Mat& v, std::uint64_t seed) {
  int n = scene.n;
  Mat id = Mat::Identity(n, n);
  if ((p * q).norm() > scene.tol_exact)
    throw std::invalid_argument("p and q must be orthogonal");
  if ((v * v.adjoint() - p).norm() > scene.tol_exact ||
      (v.adjoint() * v - q).norm() > scene.tol_exact)
    throw std::invalid_argument("v must satisfy vv* = p, v*v = q");
  if ((v * v).norm() > scene.tol_exact)
    throw std::invalid_argument("v must be nilpotent");

  Mat u = v + v.adjoint() + id - p - q;
  double unitary_err = (u.adjoint() * u - id).norm();
  double ev_err = expect_diag(v).norm();
  double eu_err = (expect_diag(u) - (id - p - q)).norm();

  double len_sq = std::pow(norm2(u - expect_diag(u)), 2);
  double two_tr_p = 2.0 * ntrace(p).real();

  // Subspace projections for the Pythagoras decomposition.
  std::vector<int> supp_p, supp_q;
  for (int i = 0; i < n; ++i) {
    if (std::abs(p(i, i).real() - 1.0) < 1e-9) supp_p.push_back(i);
    if (std::abs(q(i, i).real() - 1.0) < 1e-9) supp_q.push_back(i);
  }
  auto diag_units = [&](const std::vector<int>& supp) {
    std::vector<Mat> units;
    for (int i : supp) {
      Mat e = Mat::Zero(n, n);
      e(i, i) = 1.0;
      units.push_back(e);
    }
    return units;
  };
  auto conj_units = [&](const Mat& w, const std::vector<int>& supp) {
    std::vector<Mat> units;
    for (int i : supp) {
      Mat e = Mat::Zero(n, n);
      e(i, i) = 1.0;
      units.push_back(w * e * w.adjoint());
    }
    return units;
  };
  SubspaceProjection proj_pa(n, diag_units(supp_p));
  SubspaceProjection proj_qa(n, diag_units(supp_q));
  SubspaceProjection proj_vav(n, conj_units(v, supp_q));
  SubspaceProjection proj_vav_star(n, conj_units(v.adjoint(), supp_p));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double worst_decomp = 0, worst_pyth = 0;
  for (int s = 0; s < 64; ++s) {
    Mat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = Cplx(g(rng), g(rng));
    Mat total = expect_diag(x) - expect_conjugated(u, x);
    Mat part1 = proj_pa(x) - proj_vav(x);
    Mat part2 = proj_qa(x) - proj_vav_star(x);
    worst_decomp = std::max(worst_decomp, (total - part1 - part2).norm());
    double lhs = std::pow(norm2(total), 2);
    double rhs = std::pow(norm2(part1), 2) + std::pow(norm2(part2), 2);
    worst_pyth = std::max(worst_pyth, std::abs(lhs - rhs) / std::max(1.0, rhs));
  }

  // sqrt(5) comparison via brackets.
  auto phi = [&](const Mat& x) { return Mat(proj_pa(x) - proj_vav(x)); };
  auto psi = [&](const Mat& x) {
    Mat y = proj_vav(x);
    return Mat(y - proj_pa(y));
  };
  auto b_phi = norm_inf2_bracket(n, phi, seed + 1);
  auto b_psi = norm_inf2_bracket(n, psi, seed + 2);
  bool sqrt5_ok = b_phi.lower <= std::sqrt(5.0) * b_psi.upper + scene.tol_opt;

  CheckReport rep;
  rep.check = "thm71_chain";
  rep.paper_eq = "7.13";
  rep.inputs = {{"n", n}, {"tr_p", ntrace(p).real()}};
  rep.lhs = num_str(len_sq);
  rep.rhs = num_str(two_tr_p);
  rep.exact = false;
  rep.pass = unitary_err < scene.tol_exact && ev_err < scene.tol_exact &&
             eu_err < scene.tol_exact &&
             std::abs(len_sq - two_tr_p) < scene.tol_exact &&
             worst_decomp < 1e-10 && worst_pyth < 1e-10 && sqrt5_ok;
  rep.witness = {{"unitary_err", unitary_err},
                 {"E_A(v)_norm", ev_err},
                 {"E_A(u)_err", eu_err},
                 {"pythagoras_err", worst_pyth},
                 {"decomposition_err", worst_decomp},
                 {"sqrt5_lhs", b_phi.lower},
                 {"sqrt5_rhs", std::sqrt(5.0) * b_psi.upper}};
  return rep;
}

CheckReport delta_estimate(const Scene& scene, const Mat& v, std::uint64_t seed) {
  int n = scene.n;
  Mat p = v * v.adjoint();
  Mat q = v.adjoint() * v;
  if ((p * q).norm() > 1e-9)
    throw std::invalid_argument("vv* and v*v must be orthogonal");

  std::vector<int> supp_q;
  for (int i = 0; i < n; ++i)
    if (std::abs(q(i, i).real() - 1.0) < 1e-9) supp_q.push_back(i);
  int m = static_cast<int>(supp_q.size());

  auto image = [&](const Vec& phases) {
    Mat d = Mat::Zero(n, n);
    for (int k = 0; k < m; ++k) d(supp_q[k], supp_q[k]) = phases(k);
    Mat x = v * d * v.adjoint();
    return Mat(x - expect_diag(x));
  };
  auto value = [&](const Vec& phases) { return norm2(image(phases)); };

  // The supremum over the diagonal polydisc is attained at unimodular
  // phases; coordinate-wise the optimal phase has a closed form.
  auto refine = [&](Vec phases) {
    for (int sweep = 0; sweep < 20; ++sweep) {
      for (int k = 0; k < m; ++k) {
        Vec without = phases;
        without(k) = 0;
        Vec delta = Vec::Zero(m);
        delta(k) = 1;
        Mat base = image(without);
        Mat dir = image(delta);
        Cplx c = inner(dir, base);
        phases(k) = std::abs(c) > 1e-15 ? std::conj(c) / std::abs(c) : Cplx(1, 0);
      }
    }
    return phases;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  double best = 0;
  Vec best_phases = Vec::Ones(m);
  auto consider = [&](Vec start) {
    Vec ph = refine(std::move(start));
    double val = value(ph);
    if (val > best) {
      best = val;
      best_phases = ph;
    }
  };
  if (m > 0) {
    // All sign patterns when feasible, then random phase restarts.
    if (m <= 12) {
      for (long mask = 0; mask < (1L << m); ++mask) {
        Vec start(m);
        for (int k = 0; k < m; ++k) start(k) = (mask >> k) & 1 ? -1.0 : 1.0;
        consider(start);
      }
    }
    for (int r = 0; r < 16; ++r) {
      Vec start(m);
      for (int k = 0; k < m; ++k) start(k) = std::exp(Cplx(0, angle(rng)));
      consider(start);
    }
  }

  double ceiling = norm2(q);
  CheckReport rep;
  rep.check = "delta_estimate";
  rep.paper_eq = "2.10";
  rep.inputs = {{"n", n}, {"tr_q", ntrace(q).real()}};
  rep.lhs = num_str(best);
  rep.rhs = num_str(ceiling);
  rep.exact = false;
  rep.pass = best <= ceiling + scene.tol_opt;
  nlohmann::json ph = nlohmann::json::array();
  for (int k = 0; k < m; ++k)
    ph.push_back({best_phases(k).real(), best_phases(k).imag()});
  rep.witness = {{"phases", ph}};
  return rep;
}

CheckReport alpha_probe(const Scene& scene, int samples, std::uint64_t seed) {
  int n = scene.n;
  std::mt19937_64 rng(seed);
  double best_ratio = std::numeric_limits<double>::infinity();
  Mat best_u;

  auto consider = [&](const Mat& u) {
    double denom = norm2(u - expect_diag(u));
    if (denom <= 1e-6) return;
    auto phi = [&u](const Mat& x) { return Mat(expect_diag(x) - expect_conjugated(u, x)); };
    double upper = norm_inf2_bracket(n, phi, seed, 4).upper;
    double ratio = upper / denom;
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_u = u;
    }
  };

  // The swap permutation normalizes the diagonal masa: ratio 0.
  if (n >= 2) {
    Mat swap = Mat::Identity(n, n);
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    consider(swap);
  }
  for (int s = 0; s < samples; ++s) consider(random_unitary(n, rng));

  CheckReport rep;
  rep.check = "alpha_probe";
  rep.paper_eq = "2.7";
  rep.inputs = {{"n", n}, {"samples", samples}};
  rep.lhs = num_str(best_ratio);
  rep.rhs = "4";
  rep.exact = false;
  rep.pass = best_ratio <= 4.0 + scene.tol_opt;
  rep.witness = {{"ratio", best_ratio}};
  return rep;
}

}  // namespace masa::mm
