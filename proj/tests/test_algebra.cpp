#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "masa/algebra.hpp"

using namespace masa;

namespace {

AlgebraElement random_element(std::mt19937_64& rng, const std::vector<Word>& ball,
                              int terms) {
  AlgebraElement x(2);
  for (int i = 0; i < terms; ++i) {
    GaussianRational c(mpq_class(static_cast<long>(rng() % 9) - 4,
                                 1 + static_cast<long>(rng() % 3)),
                       mpq_class(static_cast<long>(rng() % 5) - 2));
    x += AlgebraElement(ball[rng() % ball.size()], c);
  }
  return x;
}

}  // namespace

TEST_CASE("ring operations") {
  AlgebraElement e = AlgebraElement::unit(2);
  AlgebraElement a(parse_word("a", 2));
  auto prod = (e + a) * (e - a);
  CHECK(prod == e - AlgebraElement(parse_word("aa", 2)));

  auto x = AlgebraElement(parse_word("ab", 2), GaussianRational(2));
  CHECK(adjoint(x) == AlgebraElement(parse_word("BA", 2), GaussianRational(2)));
  auto y = AlgebraElement(parse_word("a", 2), GaussianRational::i());
  CHECK(adjoint(y) == AlgebraElement(parse_word("A", 2), -GaussianRational::i()));
  CHECK(adjoint(adjoint(x + y)) == x + y);
}

TEST_CASE("(xy)* = y*x* on random pairs") {
  std::mt19937_64 rng(5);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 50; ++t) {
    auto x = random_element(rng, ball, 3);
    auto y = random_element(rng, ball, 3);
    CHECK(adjoint(x * y) == adjoint(y) * adjoint(x));
  }
}

TEST_CASE("trace") {
  auto x = GaussianRational(3) * AlgebraElement::unit(2) +
           GaussianRational(2) * AlgebraElement(parse_word("a", 2));
  CHECK(trace(x) == GaussianRational(3));
  CHECK(trace(AlgebraElement(parse_word("a", 2))).is_zero());
  auto ea = AlgebraElement::unit(2) + AlgebraElement(parse_word("a", 2));
  CHECK(trace(adjoint(ea) * ea) == GaussianRational(2));
}

TEST_CASE("trace property and Parseval on random pairs") {
  std::mt19937_64 rng(7);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 60; ++t) {
    auto x = random_element(rng, ball, 4);
    auto y = random_element(rng, ball, 4);
    CHECK(trace(x * y) == trace(y * x));
    mpq_class sum = 0;
    for (const auto& [w, c] : x.terms()) sum += c.abs2();
    CHECK(norm2_squared(x) == sum);
    CHECK(trace(adjoint(x) * x).im == 0);
    CHECK(trace(adjoint(x) * x).re >= 0);
  }
}

TEST_CASE("norms") {
  auto x = AlgebraElement::unit(2) + AlgebraElement(parse_word("a", 2)) +
           AlgebraElement(parse_word("b", 2));
  CHECK(norm2_squared(x) == 3);
  CHECK(norm2_squared(AlgebraElement(parse_word("ab", 2))) == 1);
  auto h = GaussianRational(mpq_class(1, 2)) *
           (AlgebraElement::unit(2) + AlgebraElement(parse_word("a", 2)));
  CHECK(norm2_squared(h) == mpq_class(1, 2));
  CHECK(norm1(h) == doctest::Approx(1.0));
}

TEST_CASE("conditional expectation") {
  auto sub = SubgroupGraph::build({parse_word("a", 2)}, 2);
  auto x = GaussianRational(2) * AlgebraElement::unit(2) +
           GaussianRational(3) * AlgebraElement(parse_word("a", 2)) +
           GaussianRational(5) * AlgebraElement(parse_word("b", 2));
  auto ex = expect(x, sub);
  CHECK(ex == GaussianRational(2) * AlgebraElement::unit(2) +
                  GaussianRational(3) * AlgebraElement(parse_word("a", 2)));
  CHECK(expect(AlgebraElement(parse_word("aba", 2)), sub).is_zero());
  // idempotent, trace-preserving, contractive
  std::mt19937_64 rng(13);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 100; ++t) {
    auto y = random_element(rng, ball, 4);
    auto ey = expect(y, sub);
    CHECK(expect(ey, sub) == ey);
    CHECK(trace(ey) == trace(y));
    CHECK(norm2_squared(ey) <= norm2_squared(y));
    CHECK(norm2(y) <= norm1(y) + 1e-12);
  }
}

TEST_CASE("bimodularity over the subgroup on random triples") {
  auto sub = SubgroupGraph::build({parse_word("aa", 2), parse_word("ab", 2)}, 2);
  std::vector<Word> subwords;
  for (const Word& w : enumerate_ball(2, 4))
    if (sub.contains(w)) subwords.push_back(w);
  REQUIRE(subwords.size() > 2);
  std::mt19937_64 rng(17);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 100; ++t) {
    AlgebraElement h(subwords[rng() % subwords.size()]);
    AlgebraElement k(subwords[rng() % subwords.size()]);
    auto x = random_element(rng, ball, 3);
    CHECK(expect(h * x * k, sub) == h * expect(x, sub) * k);
  }
}

TEST_CASE("cyclic subgroup membership") {
  CyclicSubgroup c(parse_word("ab", 2));
  CHECK(c.contains(parse_word("abab", 2)));
  CHECK(c.contains(parse_word("BA", 2)));
  CHECK(c.contains(Word::identity(2)));
  CHECK_FALSE(c.contains(parse_word("a", 2)));
}

TEST_CASE("cesaro averaging") {
  Word a = parse_word("a", 2);
  auto avg = cesaro_average(AlgebraElement(parse_word("b", 2)), a, 4);
  CHECK(norm2_squared(avg) == mpq_class(1, 4));
  auto a2 = AlgebraElement(parse_word("aa", 2));
  CHECK(cesaro_average(a2, a, 10) == a2);
  auto one = cesaro_average(AlgebraElement(parse_word("b", 2)), a, 1);
  CHECK(one == AlgebraElement(parse_word("Aba", 2)));
  CHECK(norm2_squared(one) == 1);
}

TEST_CASE("element literal round-trip") {
  auto x = parse_element("2*e + 3*a - 1/2*aB + i*bb", 2);
  CHECK(x.coeff(Word::identity(2)) == GaussianRational(2));
  CHECK(x.coeff(parse_word("a", 2)) == GaussianRational(3));
  CHECK(x.coeff(parse_word("aB", 2)) == GaussianRational(mpq_class(-1, 2)));
  CHECK(x.coeff(parse_word("bb", 2)) == GaussianRational::i());
  CHECK(parse_element(format_element(x), 2) == x);
  std::mt19937_64 rng(19);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 30; ++t) {
    auto y = random_element(rng, ball, 4);
    CHECK(parse_element(format_element(y), 2) == y);
  }
}
