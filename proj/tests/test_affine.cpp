#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "masa/affine.hpp"

using namespace masa;

TEST_CASE("prime field arithmetic") {
  FiniteField f(3, 1);
  CHECK(f.mul(2, 2) == 1);
  CHECK(f.add(2, 2) == 1);
  CHECK(f.inv(2) == 2);
  CHECK_THROWS(f.inv(0));
}

TEST_CASE("GF(4) multiplication with x^2 = x + 1") {
  FiniteField f(2, 2);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});  // 1 + x + x^2
  long x = f.from_coords({0, 1});
  CHECK(f.mul(x, x) == f.from_coords({1, 1}));  // x + 1
  // Frobenius is an automorphism
  for (long a = 0; a < f.size(); ++a)
    for (long b = 0; b < f.size(); ++b) {
      CHECK(f.mul(f.mul(a, a), f.mul(b, b)) ==
            f.mul(f.mul(a, b), f.mul(a, b)));
      long s = f.add(a, b);
      CHECK(f.mul(s, s) == f.add(f.mul(a, a), f.mul(b, b)));
    }
}

TEST_CASE("field axioms on sample stages") {
  for (auto [p, d] : {std::pair{2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    FiniteField f(p, d);
    for (long a = 0; a < f.size(); ++a) {
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (long b = 0; b < f.size(); ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(a, b) == f.add(b, a));
      }
    }
  }
}

TEST_CASE("embedding is injective and multiplicative") {
  FiniteField small(2, 1), big(2, 2);
  auto img = embed_field(small, big);
  CHECK(img[0] == 0);
  CHECK(img[1] == 1);

  FiniteField s2(3, 1), b2(3, 2);
  auto img2 = embed_field(s2, b2);
  std::set<long> uniq(img2.begin(), img2.end());
  CHECK(uniq.size() == img2.size());
  for (long a = 0; a < s2.size(); ++a)
    for (long b = 0; b < s2.size(); ++b) {
      CHECK(img2[s2.mul(a, b)] == b2.mul(img2[a], img2[b]));
      CHECK(img2[s2.add(a, b)] == b2.add(img2[a], img2[b]));
    }

  FiniteField s3(2, 2), b3(2, 4);
  auto img3 = embed_field(s3, b3);
  for (long a = 0; a < s3.size(); ++a)
    for (long b = 0; b < s3.size(); ++b)
      CHECK(img3[s3.mul(a, b)] == b3.mul(img3[a], img3[b]));
}

TEST_CASE("affine group laws") {
  FiniteField f(3, 1);
  AffineMap a{2, 1}, b{2, 0};
  auto c = affine_compose(f, a, b);
  CHECK(c.alpha == 1);
  CHECK(c.beta == 1);
  auto inv = affine_invert(f, a);
  auto id = affine_compose(f, a, inv);
  CHECK(id.alpha == 1);
  CHECK(id.beta == 0);
  auto cid = affine_conjugate(f, a, AffineMap{1, 0});
  CHECK(cid.alpha == 1);
  CHECK(cid.beta == 0);
  auto cg = affine_conjugate(f, AffineMap{1, 1}, AffineMap{2, 0});
  CHECK(cg.alpha == 2);
  CHECK(cg.beta == f.sub(1, 2));  // 1 - gamma
}

TEST_CASE("homothety subgroup abelian, malnormality at small stages") {
  for (auto [p, d] : {std::pair{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    FiniteField f(p, d);
    for (long a = 1; a < f.size(); ++a)
      for (long b = 1; b < f.size(); ++b)
        CHECK(f.mul(a, b) == f.mul(b, a));
    auto rep = malnormality_exhaustive(p, d);
    CHECK(rep.pass);
    CHECK(rep.exact);
  }
}

TEST_CASE("conjugacy classes") {
  FiniteField f3(3, 1);
  CHECK(conjugacy_class_size(f3, AffineMap{1, 1}) == 2);
  CHECK(conjugacy_class_size(f3, AffineMap{2, 0}) == 3);
  FiniteField f9(3, 2);
  CHECK(conjugacy_class_size(f9, AffineMap{1, 1}) == 8);
  CHECK_THROWS(conjugacy_class_size(f3, AffineMap{1, 0}));
}

TEST_CASE("icc trend report") {
  auto rep = icc_trend(3, 3);
  CHECK(rep.pass);
}
