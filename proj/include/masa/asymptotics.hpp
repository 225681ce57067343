#pragma once

#include <optional>
#include <set>
#include <vector>

#include "masa/algebra.hpp"
#include "masa/report.hpp"

namespace masa {

/// h = h0 * a^s with h0 not ending in a or a^{-1}; a must be a generator word.
std::pair<Word, long> a_run_decompose(const Word& h, const Word& a);

struct ExceptionalResult {
  bool degenerate = false;  // h or k lies in <a>; the set would be infinite
  std::set<long> exponents; // all m with h a^m k in <a>; cardinality <= 1
};

/// Closed-form exceptional set for the cyclic subgroup <a>, a a generator:
/// with h = h0 a^s and k = a^t k0, the set is {-s-t} when h0*k0 reduces
/// into <a>, and empty otherwise.
ExceptionalResult exceptional_exponents(const Word& h, const Word& k, const Word& a);

/// Brute-force cross-check over |m| <= window.
std::set<long> exceptional_exponents_bruteforce(const Word& h, const Word& k,
                                                const Word& a, long window);

/// E_A(x a^k y) - E_A(x) E_A(y) a^k, with A the algebra of <a>.
AlgebraElement phi_k(const AlgebraElement& x, const AlgebraElement& y,
                     const Word& a, long k);

struct DecayCertificate {
  long horizon = 0;                 // phi_k = 0 exactly for all |k| >= horizon
  std::set<long> exceptional;       // exponents where a support pair lands in <a>
  struct PairWitness {
    Word left, right;
    long exponent;
  };
  std::vector<PairWitness> witnesses;
};

DecayCertificate decay_horizon(const AlgebraElement& x, const AlgebraElement& y,
                               const Word& a);

/// A power of a beyond the exceptional sets of (u, v) and (u*u, v v*), so
/// that both product expectations factor exactly.
Word witness_g(const AlgebraElement& u, const AlgebraElement& v, const Word& a);

struct MultivarReport {
  std::vector<long> horizons;
  long grid_window = 0;
  bool all_zero = false;
};

/// Successive horizons K_1..K_n with the multivariable defect vanishing
/// exactly on the grid K_i <= k_i <= K_i + window.
MultivarReport multivar_decay(const std::vector<AlgebraElement>& xs, const Word& a,
                              int window = 3);

struct FreenessReport {
  long horizon = 0;  // defect zero exactly for horizon <= k <= kmax
  long kmax = 0;
  bool all_zero = false;
};

/// Same-power defect E_A(x1 a^k x2 ... a^k x_{n+1}) - prod E_A(x_i) a^{nk},
/// scanned over 1 <= k <= kmax.
FreenessReport freeness_decay(const std::vector<AlgebraElement>& xs, const Word& a,
                              long kmax);

/// Witness lower bound ||(I-E_N)(u g v)||_2^2 >= tr[E_N(vv*) - E_N(v)E_N(v)*]
/// for a group-element unitary u, with g chosen by witness_g.
CheckReport check_lemma32(const Word& u, const AlgebraElement& v, const Word& a);

/// Exact witness identity for a malnormality-certified subgroup H: for
/// gamma outside H, x = gamma g gamma^{-1} with g in H nontrivial gives
/// ||E_{uHu*}(x) - E_H(x)||_2 = 1 = ||gamma - E_H(gamma)||_2.
CheckReport check_thm33(const Word& gamma, const SubgroupGraph& h, const Word& g);

/// u = a^k beyond both decay horizons; verifies
/// ||(I-E_A)(x u y)||_2^2 >= tr(E(x*x)E(yy*) - E(x)E(x)*E(y)E(y)*), exact.
CheckReport check_prop65(const AlgebraElement& x, const AlgebraElement& y,
                         const Word& a);

}  // namespace masa
