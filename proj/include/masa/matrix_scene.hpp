#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "masa/report.hpp"

namespace masa::mm {

using Mat = Eigen::MatrixXcd;
using LinMap = std::function<Mat(const Mat&)>;

/// Finite-dimensional model: M_n with the diagonal masa and the
/// normalized trace tr(I) = 1. All results are matrix-model analogues.
struct Scene {
  int n;
  double tol_exact = 1e-12;
  double tol_opt = 1e-9;
};

/// Normalized trace.
std::complex<double> ntrace(const Mat& x);
/// (tr(x*x))^{1/2} with the normalized trace.
double norm2(const Mat& x);
/// Normalized trace inner product <x, y> = tr(y* x).
std::complex<double> inner(const Mat& x, const Mat& y);

bool is_unitary(const Mat& u, double tol = 1e-10);

Mat random_unitary(int n, std::mt19937_64& rng);

/// Diagonal restriction; the expectation onto the diagonal masa.
Mat expect_diag(const Mat& x);
/// E_{uAu*}(x) = u E_A(u* x u) u*.
Mat expect_conjugated(const Mat& u, const Mat& x);

/// Hilbert-Schmidt orthogonal projection onto an explicit subspace
/// (spanning set need not be orthogonal or independent).
class SubspaceProjection {
 public:
  SubspaceProjection(int n, const std::vector<Mat>& spanning);
  Mat operator()(const Mat& x) const;
  int dim() const { return static_cast<int>(basis_.cols()); }

 private:
  int n_;
  Eigen::MatrixXcd basis_;  // n^2 x dim, orthonormal columns (vec'd)
};

/// Trace-preserving expectation onto the unital *-algebra generated by B.
SubspaceProjection algebra_expectation(int n, const std::vector<Mat>& generators);
/// Expectation onto the commutant of B.
SubspaceProjection commutant_expectation(int n, const std::vector<Mat>& generators);

/// Iterated averaging of x over random unitaries of the algebra generated
/// by B; converges to the commutant expectation. Distances recorded per
/// iteration.
struct DixmierRun {
  Mat average;
  std::vector<double> distances;
};
DixmierRun dixmier_average(int n, const std::vector<Mat>& generators, const Mat& x,
                           int iterations, std::uint64_t seed);

struct Bracket {
  double lower = 0;  // certified: ||phi(u)||_2 at the best unitary found
  double upper = 0;  // largest singular value of phi on the L2 space
  Mat maximizer;
};

/// Bracket for the infinity-to-2 norm of a linear map on M_n. The lower
/// bound searches the unitary group (valid since the operator-norm unit
/// ball is the closed convex hull of unitaries and x -> ||phi(x)||_2 is
/// convex); the upper bound is the L2 operator norm.
Bracket norm_inf2_bracket(int n, const LinMap& phi, std::uint64_t seed,
                          int restarts = 32);

/// Chain inequality ||E_A(uv)u - u E_A(vu)||_2 <= 4 ||u - E_A(u)||_2 over
/// sampled unitaries v, plus the bracketed comparison of
/// ||E_A - E_{uAu*}||_{inf,2} with the same right-hand side.
CheckReport check_prop21(const Scene& scene, const Mat& u, std::uint64_t seed,
                         int samples, bool with_bracket);

/// For a diagonal projection p of trace 1/2, builds v with vv* = p,
/// v*v = 1-p and u = v + v*, and verifies upu = 1-p, E_A(u) = 0 and
/// ||u - E_A(u)||_2 = 1.
CheckReport flip_unitary(const Scene& scene, const Mat& p);

/// ||E_{A' cap M}(I - E_{B' cap M})||_{inf,2} <= 2 ||(I - E_A) E_B||_{inf,2}
/// via brackets.
CheckReport check_lemma53(const Scene& scene, const std::vector<Mat>& a_gens,
                          const std::vector<Mat>& b_gens, std::uint64_t seed);

/// Pythagoras for maps with trace-orthogonal ranges:
/// ||phi +- psi||_{inf,2} <= sqrt(||phi||^2 + ||psi||^2).
CheckReport check_lemma71(const Scene& scene, const LinMap& phi, const LinMap& psi,
                          std::uint64_t seed);

/// Full inequality chain for u = v + v* + 1 - p - q: unitarity, E_A(u),
/// ||u - E_A(u)||_2^2 = 2 tr(p), per-input Pythagoras of the expectation
/// difference, and the sqrt(5) comparison via brackets.
CheckReport check_thm71_chain(const Scene& scene, const Mat& p, const Mat& q,
                              const Mat& v, std::uint64_t seed);

/// sup over diagonal contractions d of ||v d v* - E_A(v d v*)||_2, by
/// extreme-point search over unimodular diagonal phases; asserts the
/// ||v*v||_2 ceiling.
CheckReport delta_estimate(const Scene& scene, const Mat& v, std::uint64_t seed);

/// min over sampled unitaries of upper(||E_{uAu*} - E_A||_{inf,2}) divided
/// by ||u - E_A(u)||_2; an upper bound for the scene's singularity ratio.
CheckReport alpha_probe(const Scene& scene, int samples, std::uint64_t seed);

}  // namespace masa::mm
