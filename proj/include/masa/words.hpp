#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace masa {

/// Enumeration key for a signed generator letter: a < A < b < B < ...
inline int letter_key(int letter) {
  return (std::abs(letter) - 1) * 2 + (letter < 0 ? 1 : 0);
}

/// A freely reduced word in the free group of the given rank.
/// Letters are signed generator indices: +1 = a, -1 = a^{-1}, +2 = b, ...
/// Always stored reduced, so equality is plain comparison.
class Word {
 public:
  Word() : rank_(1) {}
  Word(std::vector<int> raw, int rank);

  static Word identity(int rank) { return Word({}, rank); }
  static Word generator(int index, int rank) { return Word({index}, rank); }

  const std::vector<int>& letters() const { return letters_; }
  int rank() const { return rank_; }
  size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// Length-lexicographic order, letters ordered a < a^{-1} < b < b^{-1}.
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<int> letters_;
  int rank_;
};

Word multiply(const Word& w1, const Word& w2);
Word invert(const Word& w);
/// x * w * x^{-1}, reduced.
Word conjugate(const Word& w, const Word& x);
Word power(const Word& w, long n);

/// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// Maximal-exponent decomposition w = root^exponent. Throws on identity.
std::pair<Word, long> root_power(const Word& w);

/// True iff w is not a proper power (and not the identity).
bool is_prime_element(const Word& w);

/// All reduced words of length <= radius, length-lexicographic order.
std::vector<Word> enumerate_ball(int rank, int radius);

/// "abA" grammar: lowercase = generator, uppercase = inverse; "e" or "" = identity.
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w);

struct parse_error : std::runtime_error {
  size_t position;
  parse_error(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

}  // namespace masa
