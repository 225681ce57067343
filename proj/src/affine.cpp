#include "masa/affine.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace masa {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Polynomial arithmetic over GF(p), dense coefficient vectors.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > dm) {
    int lead = a.back();
    if (lead != 0) {
      // m is monic
      int shift = static_cast<int>(a.size()) - 1 - dm;
      for (int i = 0; i <= dm; ++i) {
        a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p * p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& m, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

}  // namespace

FiniteField::FiniteField(int p, int d) : p_(p), d_(d) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  size_ = 1;
  for (int i = 0; i < d; ++i) size_ *= p;

  // Smallest monic irreducible of degree d: scan constant-term-first digit
  // order and test by trial division over all monic factors of degree <= d/2.
  auto decode = [&](long code) {
    std::vector<int> poly(d + 1, 0);
    poly[d] = 1;
    for (int i = 0; i < d; ++i) {
      poly[i] = static_cast<int>(code % p);
      code /= p;
    }
    return poly;
  };
  auto divides = [&](const std::vector<int>& f, const std::vector<int>& g) {
    // true if g | f over GF(p); g monic
    std::vector<int> r = f;
    int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= dg) {
      int lead = r.back();
      if (lead != 0) {
        int shift = static_cast<int>(r.size()) - 1 - dg;
        for (int i = 0; i <= dg; ++i)
          r[shift + i] = ((r[shift + i] - lead * g[i]) % p + p * p) % p;
      }
      r.pop_back();
      if (r.empty()) break;
    }
    for (int c : r)
      if (c != 0) return false;
    return true;
  };
  for (long code = 0; code < size_; ++code) {
    auto cand = decode(code);
    if (cand[0] == 0) continue;  // reducible: x divides
    bool irreducible = true;
    for (int dg = 1; irreducible && 2 * dg <= d; ++dg) {
      long gcount = 1;
      for (int i = 0; i < dg; ++i) gcount *= p;
      for (long gc = 0; gc < gcount; ++gc) {
        std::vector<int> g(dg + 1, 0);
        g[dg] = 1;
        long t = gc;
        for (int i = 0; i < dg; ++i) {
          g[i] = static_cast<int>(t % p);
          t /= p;
        }
        if (divides(cand, g)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) {
      modulus_ = cand;
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> FiniteField::coords(long a) const {
  std::vector<int> c(d_, 0);
  for (int i = 0; i < d_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

long FiniteField::from_coords(const std::vector<int>& c) const {
  long v = 0;
  for (int i = d_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(c.size()) ? ((c[i] % p_ + p_) % p_) : 0);
  return v;
}

long FiniteField::add(long a, long b) const {
  auto ca = coords(a), cb = coords(b);
  for (int i = 0; i < d_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coords(ca);
}

long FiniteField::sub(long a, long b) const {
  auto ca = coords(a), cb = coords(b);
  for (int i = 0; i < d_; ++i) ca[i] = ((ca[i] - cb[i]) % p_ + p_) % p_;
  return from_coords(ca);
}

long FiniteField::neg(long a) const { return sub(0, a); }

long FiniteField::mul(long a, long b) const {
  auto prod = poly_mulmod(coords(a), coords(b), modulus_, p_);
  prod.resize(d_, 0);
  return from_coords(prod);
}

long FiniteField::inv(long a) const {
  if (a == 0) throw std::domain_error("division by zero");
  // a^(q-2) in a group of order q-1
  long result = 1, base = a, e = size_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string FiniteField::element_str(long a) const {
  auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i == 0) continue;
    if (c[i] != 1) os << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string FiniteField::modulus_str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = d_; i >= 0; --i) {
    if (modulus_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i == 0) continue;
    if (modulus_[i] != 1) os << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<long> embed_field(const FiniteField& small, const FiniteField& big) {
  if (small.p() != big.p()) throw std::invalid_argument("characteristic mismatch");
  if (big.d() % small.d() != 0)
    throw std::invalid_argument("degree must divide for embedding");
  // Root of the small modulus in the big field, first in enumeration order.
  long root = -1;
  for (long cand = 0; cand < big.size(); ++cand) {
    long acc = 0, pw = 1;
    for (int i = 0; i <= small.d(); ++i) {
      long coeff = small.modulus()[i] % big.p();
      acc = big.add(acc, big.mul(coeff, pw));
      pw = big.mul(pw, cand);
    }
    if (acc == 0) {
      root = cand;
      break;
    }
  }
  if (root < 0) throw std::logic_error("modulus has no root in the extension");
  std::vector<long> image(small.size());
  for (long a = 0; a < small.size(); ++a) {
    auto c = small.coords(a);
    long acc = 0, pw = 1;
    for (int i = 0; i < small.d(); ++i) {
      acc = big.add(acc, big.mul(c[i], pw));
      pw = big.mul(pw, root);
    }
    image[a] = acc;
  }
  return image;
}

AffineMap affine_compose(const FiniteField& f, const AffineMap& a, const AffineMap& b) {
  return {f.mul(a.alpha, b.alpha), f.add(f.mul(a.alpha, b.beta), a.beta)};
}

AffineMap affine_invert(const FiniteField& f, const AffineMap& a) {
  long ai = f.inv(a.alpha);
  return {ai, f.neg(f.mul(ai, a.beta))};
}

AffineMap affine_conjugate(const FiniteField& f, const AffineMap& t, const AffineMap& g) {
  return affine_compose(f, affine_compose(f, t, g), affine_invert(f, t));
}

CheckReport malnormality_exhaustive(int p, int d) {
  FiniteField f(p, d);
  long violations = 0;
  long pairs = 0;
  // t outside the homothety subgroup means beta != 0; g = (gamma, 0) nontrivial.
  for (long alpha = 1; alpha < f.size(); ++alpha)
    for (long beta = 1; beta < f.size(); ++beta)
      for (long gamma = 1; gamma < f.size(); ++gamma) {
        if (gamma == 1) continue;
        ++pairs;
        AffineMap c = affine_conjugate(f, {alpha, beta}, {gamma, 0});
        // Closed form: t g t^{-1} = (gamma, beta*(1-gamma)).
        long expected_beta = f.mul(beta, f.sub(1, gamma));
        if (c.alpha != gamma || c.beta != expected_beta)
          throw std::logic_error("conjugation closed form mismatch");
        if (c.beta == 0) ++violations;
      }
  CheckReport rep;
  rep.check = "affine_malnormality";
  rep.paper_eq = "3.21";
  rep.inputs = {{"p", p}, {"d", d}, {"modulus", f.modulus_str()},
                {"group_order", f.size() * (f.size() - 1)}};
  rep.lhs = std::to_string(violations);
  rep.rhs = "0";
  rep.exact = true;
  rep.pass = violations == 0;
  rep.witness = {{"pairs_checked", pairs}};
  return rep;
}

long conjugacy_class_size(const FiniteField& f, const AffineMap& g) {
  if (g.alpha == 1 && g.beta == 0)
    throw std::invalid_argument("identity has a trivial class");
  std::set<std::pair<long, long>> cls;
  for (long alpha = 1; alpha < f.size(); ++alpha)
    for (long beta = 0; beta < f.size(); ++beta) {
      AffineMap c = affine_conjugate(f, {alpha, beta}, g);
      cls.insert({c.alpha, c.beta});
    }
  return static_cast<long>(cls.size());
}

CheckReport icc_trend(int p, int d_max) {
  CheckReport rep;
  rep.check = "affine_icc_trend";
  rep.paper_eq = "3.21";
  rep.inputs = {{"p", p}, {"d_max", d_max}};
  rep.exact = true;
  rep.pass = true;
  nlohmann::json stages = nlohmann::json::array();
  for (int d = 1; d <= d_max; ++d) {
    FiniteField f(p, d);
    long cls = conjugacy_class_size(f, {1, 1});
    bool ok = cls == f.size() - 1;
    rep.pass = rep.pass && ok;
    stages.push_back({{"d", d}, {"translation_class", cls},
                      {"expected", f.size() - 1}});
  }
  rep.witness = stages;
  rep.lhs = "translation class sizes";
  rep.rhs = "p^d - 1 at each stage";
  return rep;
}

}  // namespace masa
