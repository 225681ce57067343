#pragma once

#include <functional>
#include <map>
#include <string_view>

#include "masa/scalar.hpp"
#include "masa/stallings.hpp"
#include "masa/words.hpp"

namespace masa {

/// Finitely supported function from group elements to Gaussian rationals;
/// an element of the group algebra. Zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(int rank) : rank_(rank) {}
  AlgebraElement(const Word& w, GaussianRational coeff = GaussianRational(1));

  static AlgebraElement zero(int rank) { return AlgebraElement(rank); }
  static AlgebraElement unit(int rank) {
    return AlgebraElement(Word::identity(rank));
  }

  int rank() const { return rank_; }
  const std::map<Word, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(const Word& w) const;

  void set(const Word& w, GaussianRational c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const GaussianRational& c, AlgebraElement a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

 private:
  int rank_;
  std::map<Word, GaussianRational> terms_;
};

/// (sum c_g g)* = sum conj(c_g) g^{-1}.
AlgebraElement adjoint(const AlgebraElement& x);

/// Coefficient of the identity.
GaussianRational trace(const AlgebraElement& x);

/// Sum of |c_g|^2, exact; equals norm2(x)^2 by orthonormality.
mpq_class norm2_squared(const AlgebraElement& x);
double norm2(const AlgebraElement& x);
/// Sum of |c_g|; certified upper bound for the operator norm.
double norm1(const AlgebraElement& x);

/// A subgroup with decidable membership, for conditional expectations.
using MembershipTest = std::function<bool(const Word&)>;

/// Conditional expectation onto the subgroup algebra: drops all terms
/// whose word falls outside the subgroup.
AlgebraElement expect(const AlgebraElement& x, const MembershipTest& in_subgroup);
AlgebraElement expect(const AlgebraElement& x, const SubgroupGraph& h);

/// The cyclic subgroup generated by one word, with exact membership.
class CyclicSubgroup {
 public:
  explicit CyclicSubgroup(const Word& generator);
  bool contains(const Word& w) const;
  const Word& generator() const { return gen_; }
  MembershipTest membership() const {
    return [this](const Word& w) { return contains(w); };
  }

 private:
  Word gen_;
  SubgroupGraph graph_;
};

/// n^{-1} sum_{j=1..n} a^{-j} x a^j.
AlgebraElement cesaro_average(const AlgebraElement& x, const Word& a, int n);

/// Element literal grammar: "2*e + 3*a - 1/2*aB + i*bb".
AlgebraElement parse_element(std::string_view text, int rank);
std::string format_element(const AlgebraElement& x);

}  // namespace masa
