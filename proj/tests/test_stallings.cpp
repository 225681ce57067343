#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "masa/stallings.hpp"

using namespace masa;

namespace {

SubgroupGraph build_from(std::initializer_list<const char*> gens, int rank = 2) {
  std::vector<Word> ws;
  for (const char* g : gens) ws.push_back(parse_word(g, rank));
  return SubgroupGraph::build(ws, rank);
}

// mod-2 exponent-sum (total letter count mod 2)
bool even_length(const Word& w) { return w.length() % 2 == 0; }

}  // namespace

TEST_CASE("build basics") {
  auto cyclic = build_from({"a"});
  CHECK(cyclic.vertex_count() == 1);
  CHECK(cyclic.contains(parse_word("aaa", 2)));
  CHECK_FALSE(cyclic.contains(parse_word("b", 2)));

  auto trivial = build_from({});
  CHECK(trivial.vertex_count() == 1);
  CHECK_FALSE(trivial.contains(parse_word("a", 2)));
  CHECK(trivial.contains(Word::identity(2)));

  auto kernel = build_from({"aa", "ab", "ba"});
  CHECK(kernel.vertex_count() == 2);
}

TEST_CASE("membership agrees with mod-2 homomorphism on index-2 kernel") {
  auto kernel = build_from({"aa", "ab", "ba"});
  CHECK_FALSE(kernel.contains(parse_word("b", 2)));
  CHECK(kernel.contains(parse_word("Ab", 2)));
  for (const Word& w : enumerate_ball(2, 6))
    CHECK(kernel.contains(w) == even_length(w));
}

TEST_CASE("index") {
  CHECK(build_from({"aa", "ab", "ba"}).index() == 2);
  CHECK_FALSE(build_from({"a"}).index().has_value());
  CHECK(build_from({"a", "b"}).index() == 1);
}

TEST_CASE("contains agrees with bounded product oracle") {
  std::mt19937_64 rng(11);
  auto ball = enumerate_ball(2, 6);
  for (int trial = 0; trial < 25; ++trial) {
    int ngen = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> gens;
    for (int i = 0; i < ngen; ++i) {
      Word g;
      do {
        g = ball[rng() % ball.size()];
      } while (g.is_identity() || g.length() > 4);
      gens.push_back(g);
    }
    auto graph = SubgroupGraph::build(gens, 2);
    // all products of <= 5 generator letters (generators and inverses)
    std::set<Word> products = {Word::identity(2)};
    std::set<Word> frontier = products;
    for (int step = 0; step < 5; ++step) {
      std::set<Word> next;
      for (const Word& w : frontier)
        for (const Word& g : gens) {
          next.insert(multiply(w, g));
          next.insert(multiply(w, invert(g)));
        }
      for (const Word& w : next) products.insert(w);
      frontier = std::move(next);
    }
    for (const Word& w : products) CHECK(graph.contains(w));
  }
}

TEST_CASE("fold confluence under generator permutation") {
  std::mt19937_64 rng(23);
  auto ball = enumerate_ball(2, 6);
  std::vector<Word> gens = {parse_word("abA", 2), parse_word("bb", 2),
                            parse_word("aBa", 2)};
  auto ref = SubgroupGraph::build(gens, 2);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto other = SubgroupGraph::build(gens, 2);
    for (const Word& w : ball) CHECK(ref.contains(w) == other.contains(w));
  }
}

TEST_CASE("cyclic subgroup membership matches root powers") {
  for (const char* gen : {"ab", "aab", "abAB"}) {
    Word g = parse_word(gen, 2);
    auto graph = SubgroupGraph::build({g}, 2);
    std::set<Word> powers;
    for (long n = -8; n <= 8; ++n) powers.insert(power(g, n));
    for (const Word& w : enumerate_ball(2, 6)) {
      bool oracle = powers.count(w) > 0;
      if (w.length() <= 6 && g.length() * 9 > 6)  // window large enough
        CHECK(graph.contains(w) == oracle);
    }
  }
}

TEST_CASE("malnormal_violations examples") {
  auto a = build_from({"a"});
  CHECK(malnormal_violations(a, 2, 3).empty());

  auto b2 = build_from({"bb"});
  auto viols = malnormal_violations(b2, 2, 1);
  bool found = false;
  for (const auto& v : viols)
    if (v.x == parse_word("b", 2) && v.g == parse_word("bb", 2) &&
        v.g_conj == parse_word("bb", 2))
      found = true;
  CHECK(found);

  auto kernel = build_from({"aa", "ab", "ba"});
  CHECK_FALSE(malnormal_violations(kernel, 2, 2).empty());
}

TEST_CASE("parallel scan matches serial reference") {
  for (const auto& gens :
       {std::vector<const char*>{"aa", "bb", "abAB"},
        std::vector<const char*>{"bb"}, std::vector<const char*>{"ab"}}) {
    std::vector<Word> ws;
    for (const char* g : gens) ws.push_back(parse_word(g, 2));
    auto graph = SubgroupGraph::build(ws, 2);
    auto p = malnormal_violations(graph, 2, 3);
    auto s = malnormal_violations_serial(graph, 2, 3);
    REQUIRE(p.size() == s.size());
    for (size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].x == s[i].x);
      CHECK(p[i].g == s[i].g);
      CHECK(p[i].g_conj == s[i].g_conj);
    }
  }
}

TEST_CASE("normalizer_scan") {
  Word a = parse_word("a", 2);
  CHECK(normalizer_scan(a, 1, 3).empty());
  CHECK(normalizer_scan(a, 3, 2).empty());
  auto hits = normalizer_scan(parse_word("bb", 2), 1, 1);
  CHECK(std::find(hits.begin(), hits.end(), parse_word("b", 2)) != hits.end());
  CHECK_THROWS(normalizer_scan(Word::identity(2), 1, 1));
}
