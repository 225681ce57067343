#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "masa/words.hpp"

namespace masa {

/// Folded core automaton of a finitely generated subgroup of a free group.
/// Basepoint loops spell exactly the subgroup elements.
class SubgroupGraph {
 public:
  static SubgroupGraph build(const std::vector<Word>& generators, int rank);

  bool contains(const Word& w) const;

  /// Vertex count if the core is complete (every direction present at every
  /// vertex), otherwise nullopt meaning infinite index.
  std::optional<long> index() const;

  int rank() const { return rank_; }
  size_t vertex_count() const { return next_.size(); }

 private:
  SubgroupGraph(int rank) : rank_(rank) {}
  int slot(int letter) const { return letter_key(letter); }

  int rank_;
  // next_[v][slot(letter)] = target vertex, or -1. Basepoint is vertex 0.
  std::vector<std::vector<int>> next_;
};

/// All elements of G with word length <= radius, sorted.
std::vector<Word> subgroup_ball(const SubgroupGraph& g, int rank, int radius);

struct MalnormalViolation {
  Word x;        // conjugator, x not in G
  Word g;        // nontrivial element of G
  Word g_conj;   // x g x^{-1}, again in G
};

/// Exhaustive bounded scan of the condition xGx^{-1} cap G = {e}:
/// x ranges over Ball(radius) \ G, g over G cap Ball(2*radius), and a
/// violation is recorded when x g x^{-1} lands back in G.
std::vector<MalnormalViolation> malnormal_violations(const SubgroupGraph& g,
                                                     int rank, int radius);
/// Serial reference for the OpenMP kernel above.
std::vector<MalnormalViolation> malnormal_violations_serial(
    const SubgroupGraph& g, int rank, int radius);

/// Words x with |x| <= radius, x outside Gp(a), with x a^p x^{-1} and
/// x^{-1} a^p x both in Gp(a^p). Empty result certifies the normalizer
/// condition N(Gp(a^p)) = Gp(a) up to the radius.
std::vector<Word> normalizer_scan(const Word& a, int p, int radius);

}  // namespace masa
