#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "masa/asymptotics.hpp"

using namespace masa;

namespace {

const Word A = parse_word("a", 2);

AlgebraElement random_element(std::mt19937_64& rng, const std::vector<Word>& ball,
                              int terms) {
  AlgebraElement x(2);
  for (int i = 0; i < terms; ++i) {
    GaussianRational c(mpq_class(static_cast<long>(rng() % 7) - 3),
                       mpq_class(static_cast<long>(rng() % 3) - 1));
    x += AlgebraElement(ball[rng() % ball.size()], c);
  }
  return x;
}

}  // namespace

TEST_CASE("a_run_decompose") {
  auto [h0, s] = a_run_decompose(parse_word("baa", 2), A);
  CHECK(h0 == parse_word("b", 2));
  CHECK(s == 2);
  auto [h1, s1] = a_run_decompose(parse_word("AAA", 2), A);
  CHECK(h1.is_identity());
  CHECK(s1 == -3);
  auto [h2, s2] = a_run_decompose(parse_word("b", 2), A);
  CHECK(h2 == parse_word("b", 2));
  CHECK(s2 == 0);
}

TEST_CASE("exceptional_exponents closed form") {
  auto r1 = exceptional_exponents(parse_word("B", 2), parse_word("b", 2), A);
  CHECK_FALSE(r1.degenerate);
  CHECK(r1.exponents == std::set<long>{0});

  auto r2 = exceptional_exponents(parse_word("b", 2), parse_word("b", 2), A);
  CHECK(r2.exponents.empty());

  auto r3 = exceptional_exponents(parse_word("baa", 2), parse_word("aaaB", 2), A);
  CHECK(r3.exponents == std::set<long>{-5});

  CHECK(exceptional_exponents(parse_word("aa", 2), parse_word("b", 2), A)
            .degenerate);
}

TEST_CASE("singleton bound vs brute force on random pairs") {
  std::mt19937_64 rng(29);
  auto ball = enumerate_ball(2, 5);
  CyclicSubgroup ca(A);
  int tested = 0;
  while (tested < 200) {
    Word h = ball[rng() % ball.size()], k = ball[rng() % ball.size()];
    if (ca.contains(h) || ca.contains(k)) continue;
    ++tested;
    auto closed = exceptional_exponents(h, k, A);
    REQUIRE_FALSE(closed.degenerate);
    CHECK(closed.exponents.size() <= 1);
    CHECK(exceptional_exponents_bruteforce(h, k, A, 20) == closed.exponents);
  }
}

TEST_CASE("phi_k point values") {
  AlgebraElement bm(parse_word("B", 2)), b(parse_word("b", 2));
  CHECK(phi_k(bm, b, A, 0) == AlgebraElement::unit(2));
  for (long k : {-3L, -1L, 1L, 2L, 7L}) CHECK(phi_k(bm, b, A, k).is_zero());
  AlgebraElement a2(parse_word("aa", 2));
  std::mt19937_64 rng(31);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 20; ++t)
    CHECK(phi_k(a2, random_element(rng, ball, 3), A, 5).is_zero());
}

TEST_CASE("decay_horizon examples") {
  auto c1 = decay_horizon(AlgebraElement(parse_word("B", 2)),
                          AlgebraElement(parse_word("b", 2)), A);
  CHECK(c1.horizon == 1);
  CHECK(c1.exceptional == std::set<long>{0});

  auto c2 = decay_horizon(AlgebraElement(parse_word("b", 2)),
                          AlgebraElement(parse_word("b", 2)), A);
  CHECK(c2.horizon == 0);

  auto c3 = decay_horizon(AlgebraElement(parse_word("baa", 2)),
                          AlgebraElement(parse_word("aaaB", 2)), A);
  CHECK(c3.horizon == 6);
  CHECK(c3.exceptional == std::set<long>{-5});
}

TEST_CASE("certificate validity and norm bounds on random samples") {
  std::mt19937_64 rng(37);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 40; ++t) {
    auto x = random_element(rng, ball, 3);
    auto y = random_element(rng, ball, 3);
    auto cert = decay_horizon(x, y, A);
    for (long k = cert.horizon; k <= cert.horizon + 20; ++k) {
      CHECK(phi_k(x, y, A, k).is_zero());
      CHECK(phi_k(x, y, A, -k).is_zero());
    }
    for (long k = -5; k <= 5; ++k) {
      double n = norm2(phi_k(x, y, A, k));
      CHECK(n <= 2 * norm2(x) * norm1(y) + 1e-9);
      CHECK(n <= 2 * norm1(x) * norm2(y) + 1e-9);
    }
  }
}

TEST_CASE("witness_g") {
  AlgebraElement b(parse_word("b", 2)), bm(parse_word("B", 2));
  CHECK_NOTHROW(witness_g(b, b, A));
  Word g = witness_g(bm, b, A);
  CHECK_FALSE(g.is_identity());  // must dodge the exceptional exponent 0
  CHECK(witness_g(AlgebraElement(parse_word("a", 2)),
                  AlgebraElement(parse_word("aa", 2)), A)
            .length() >= 0);
  std::mt19937_64 rng(41);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 20; ++t)
    CHECK_NOTHROW(witness_g(random_element(rng, ball, 2),
                            random_element(rng, ball, 2), A));
}

TEST_CASE("multivariable and freeness decay") {
  AlgebraElement b(parse_word("b", 2)), bm(parse_word("B", 2));
  auto fr = freeness_decay({b, b, b, b}, A, 12);
  CHECK(fr.all_zero);
  CHECK(fr.horizon <= 1);

  auto mv = multivar_decay({bm, b}, A);
  CHECK(mv.all_zero);

  AlgebraElement a2(parse_word("aa", 2));
  auto mv2 = multivar_decay({b, a2 * b}, A);
  CHECK(mv2.all_zero);
}

TEST_CASE("check_lemma32") {
  auto r1 = check_lemma32(parse_word("b", 2), AlgebraElement(parse_word("B", 2)), A);
  CHECK(r1.pass);
  CHECK(r1.exact);
  auto r2 = check_lemma32(parse_word("a", 2), AlgebraElement(parse_word("A", 2)), A);
  CHECK(r2.pass);
  auto r3 = check_lemma32(parse_word("b", 2),
                          GaussianRational(mpq_class(1, 2)) *
                              AlgebraElement::unit(2),
                          A);
  CHECK(r3.pass);
}

TEST_CASE("check_thm33") {
  auto h = SubgroupGraph::build({A}, 2);
  auto r1 = check_thm33(parse_word("b", 2), h, A);
  CHECK(r1.pass);
  auto r2 = check_thm33(parse_word("aaa", 2), h, A);
  CHECK(r2.pass);
  auto r3 = check_thm33(parse_word("baB", 2), h, A);
  CHECK(r3.pass);
}

TEST_CASE("check_prop65") {
  auto r1 = check_prop65(AlgebraElement(parse_word("B", 2)),
                         AlgebraElement(parse_word("b", 2)), A);
  CHECK(r1.pass);
  auto r2 = check_prop65(AlgebraElement(parse_word("a", 2)),
                         AlgebraElement(parse_word("A", 2)), A);
  CHECK(r2.pass);
  std::mt19937_64 rng(43);
  auto ball = enumerate_ball(2, 3);
  for (int t = 0; t < 25; ++t)
    CHECK(check_prop65(random_element(rng, ball, 3),
                       random_element(rng, ball, 3), A)
              .pass);
}
