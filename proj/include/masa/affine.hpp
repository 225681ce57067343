#pragma once

#include <cstdint>
#include <vector>

#include "masa/report.hpp"

namespace masa {

/// GF(p^d) in a polynomial basis modulo a fixed irreducible polynomial
/// (smallest monic irreducible of degree d in coefficient order).
class FiniteField {
 public:
  FiniteField(int p, int d);

  int p() const { return p_; }
  int d() const { return d_; }
  long size() const { return size_; }
  /// Coefficients of the modulus, degree d monic, length d+1.
  const std::vector<int>& modulus() const { return modulus_; }

  // Elements are encoded as integers in [0, p^d): base-p digit i is the
  // coefficient of x^i.
  long add(long a, long b) const;
  long sub(long a, long b) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long neg(long a) const;
  long one() const { return 1; }

  std::vector<int> coords(long a) const;
  long from_coords(const std::vector<int>& c) const;
  std::string element_str(long a) const;
  std::string modulus_str() const;

 private:
  int p_, d_;
  long size_;
  std::vector<int> modulus_;
};

/// Image of each element of `small` under the embedding into `big`
/// determined by sending the small field's generator to the first root of
/// its modulus in the big field (enumeration order). Requires d | d'.
std::vector<long> embed_field(const FiniteField& small, const FiniteField& big);

/// x -> alpha*x + beta with alpha != 0; the affine group of one field stage.
struct AffineMap {
  long alpha;
  long beta;
};

AffineMap affine_compose(const FiniteField& f, const AffineMap& a, const AffineMap& b);
AffineMap affine_invert(const FiniteField& f, const AffineMap& a);
AffineMap affine_conjugate(const FiniteField& f, const AffineMap& t, const AffineMap& g);

/// Exhaustive check that conjugating a nontrivial homothety by any map
/// outside the homothety subgroup leaves the subgroup.
CheckReport malnormality_exhaustive(int p, int d);

/// Size of the conjugacy class of g within the stage group.
long conjugacy_class_size(const FiniteField& f, const AffineMap& g);

/// Class growth of translations across stages; documents the ICC trend.
CheckReport icc_trend(int p, int d_max);

}  // namespace masa
