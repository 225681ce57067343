#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "masa/words.hpp"

using namespace masa;

TEST_CASE("free reduction") {
  CHECK(Word({1, -1, 2}, 2) == parse_word("b", 2));
  CHECK(Word({1, 2, -2}, 2) == parse_word("a", 2));
  CHECK(Word({}, 2).is_identity());
  // idempotence + length bound
  Word w({1, 2, -2, -1, 2, 1, -1}, 2);
  CHECK(Word(w.letters(), 2) == w);
  CHECK(w.length() <= 7);
  CHECK_THROWS_AS(Word({3}, 2), std::out_of_range);
}

TEST_CASE("multiply invert conjugate") {
  Word a = parse_word("a", 2), b = parse_word("b", 2);
  CHECK(multiply(a, invert(a)).is_identity());
  CHECK(conjugate(a, b) == parse_word("baB", 2));
  CHECK(invert(parse_word("ab", 2)) == parse_word("BA", 2));
  CHECK(conjugate(Word::identity(2), b).is_identity());
  for (const Word& w : enumerate_ball(2, 4))
    CHECK(multiply(w, invert(w)).is_identity());
}

TEST_CASE("cyclic_reduce") {
  auto [core1, conj1] = cyclic_reduce(parse_word("Aba", 2));
  CHECK(core1 == parse_word("b", 2));
  CHECK(conj1 == parse_word("A", 2));
  auto [core2, conj2] = cyclic_reduce(parse_word("b", 2));
  CHECK(core2 == parse_word("b", 2));
  CHECK(conj2.is_identity());
  auto [core3, conj3] = cyclic_reduce(parse_word("abAB", 2));
  CHECK(core3 == parse_word("abAB", 2));
  CHECK(conj3.is_identity());
  for (const Word& w : enumerate_ball(2, 4)) {
    auto [core, conj] = cyclic_reduce(w);
    CHECK(conjugate(core, conj) == w);
  }
}

TEST_CASE("root_power") {
  CHECK(root_power(parse_word("aa", 2)) == std::pair(parse_word("a", 2), 2L));
  CHECK(root_power(parse_word("abab", 2)) == std::pair(parse_word("ab", 2), 2L));
  CHECK(root_power(parse_word("abAB", 2)) ==
        std::pair(parse_word("abAB", 2), 1L));
  CHECK_THROWS(root_power(Word::identity(2)));
  CHECK(is_prime_element(parse_word("ab", 2)));
  CHECK_FALSE(is_prime_element(parse_word("abab", 2)));
}

TEST_CASE("root_power against brute-force oracle on radius-5 ball") {
  for (const Word& w : enumerate_ball(2, 5)) {
    if (w.is_identity()) continue;
    auto [root, exp] = root_power(w);
    CHECK(power(root, exp) == w);
    // maximality: oracle over all candidate roots of the cyclic core
    auto [core, conj] = cyclic_reduce(w);
    long best = 1;
    for (long n = 2; n <= static_cast<long>(core.length()); ++n) {
      if (core.length() % n) continue;
      size_t len = core.length() / n;
      Word cand(std::vector<int>(core.letters().begin(),
                                 core.letters().begin() + len),
                2);
      if (power(cand, n) == core) best = std::max(best, n);
    }
    CHECK(exp == best);
  }
}

TEST_CASE("enumerate_ball") {
  CHECK(enumerate_ball(2, 0).size() == 1);
  CHECK(enumerate_ball(2, 1).size() == 5);
  CHECK(enumerate_ball(2, 2).size() == 17);
  // sphere sizes 2r(2r-1)^{k-1}; no duplicates
  for (int r : {1, 2, 3}) {
    auto ball = enumerate_ball(r, 4);
    std::set<Word> uniq(ball.begin(), ball.end());
    CHECK(uniq.size() == ball.size());
    std::vector<size_t> spheres(5, 0);
    for (const Word& w : ball) spheres[w.length()]++;
    CHECK(spheres[0] == 1);
    for (int k = 1; k <= 4; ++k) {
      size_t expected = 2 * r;
      for (int j = 1; j < k; ++j) expected *= 2 * r - 1;
      CHECK(spheres[k] == expected);
    }
    CHECK(std::is_sorted(ball.begin(), ball.end()));
  }
}

TEST_CASE("parse and format round-trip") {
  CHECK(parse_word("abA", 2) == Word({1, 2, -1}, 2));
  CHECK(parse_word("e", 2).is_identity());
  CHECK(parse_word("", 2).is_identity());
  CHECK(format_word(parse_word("abBA", 2)) == "e");
  for (const Word& w : enumerate_ball(2, 3))
    CHECK(parse_word(format_word(w), 2) == w);
  CHECK_THROWS_AS(parse_word("ab1", 2), parse_error);
  CHECK_THROWS_AS(parse_word("c", 2), parse_error);
  try {
    parse_word("ab?", 2);
  } catch (const parse_error& e) {
    CHECK(e.position == 2);
  }
}
