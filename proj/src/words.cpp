#include "masa/words.hpp"

#include <algorithm>
#include <numeric>

namespace masa {

Word::Word(std::vector<int> raw, int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  letters_.reserve(raw.size());
  for (int l : raw) {
    if (l == 0 || std::abs(l) > rank)
      throw std::out_of_range("generator index out of range");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size())
    return a.letters_.size() < b.letters_.size();
  for (size_t i = 0; i < a.letters_.size(); ++i) {
    int ka = letter_key(a.letters_[i]);
    int kb = letter_key(b.letters_[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

Word multiply(const Word& w1, const Word& w2) {
  if (w1.rank() != w2.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> raw = w1.letters();
  raw.insert(raw.end(), w2.letters().begin(), w2.letters().end());
  return Word(std::move(raw), w1.rank());
}

Word invert(const Word& w) {
  std::vector<int> raw(w.letters().rbegin(), w.letters().rend());
  for (int& l : raw) l = -l;
  return Word(std::move(raw), w.rank());
}

Word conjugate(const Word& w, const Word& x) {
  return multiply(multiply(x, w), invert(x));
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? invert(w) : w;
  long k = std::labs(n);
  Word result = Word::identity(w.rank());
  for (long i = 0; i < k; ++i) result = multiply(result, base);
  return result;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::vector<int> core = w.letters();
  std::vector<int> conj;
  while (core.size() >= 2 && core.front() == -core.back()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {Word(std::move(core), w.rank()), Word(std::move(conj), w.rank())};
}

std::pair<Word, long> root_power(const Word& w) {
  if (w.is_identity()) throw std::invalid_argument("identity has no root-power form");
  auto [core, conj] = cyclic_reduce(w);
  const auto& cl = core.letters();
  size_t n = cl.size();
  // Smallest period of the cyclic core. Since the core is cyclically reduced,
  // core = v^k holds as plain concatenation.
  for (size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (size_t i = d; i < n && periodic; ++i)
      periodic = cl[i] == cl[i % d];
    if (periodic) {
      Word root(std::vector<int>(cl.begin(), cl.begin() + d), w.rank());
      return {conjugate(root, conj), static_cast<long>(n / d)};
    }
  }
  return {w, 1};  // unreachable
}

bool is_prime_element(const Word& w) {
  return !w.is_identity() && root_power(w).second == 1;
}

std::vector<Word> enumerate_ball(int rank, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<int> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  std::vector<Word> result{Word::identity(rank)};
  std::vector<std::vector<int>> level{{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : level) {
      for (int l : alphabet) {
        if (!prefix.empty() && prefix.back() == -l) continue;
        auto ext = prefix;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    }
    for (auto& letters : next) result.emplace_back(letters, rank);
    level = std::move(next);
  }
  return result;
}

Word parse_word(std::string_view text, int rank) {
  if (text == "e") return Word::identity(rank);
  std::vector<int> raw;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    int letter;
    if (c >= 'a' && c <= 'z')
      letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      letter = -(c - 'A' + 1);
    else
      throw parse_error("invalid character in word", i);
    if (std::abs(letter) > rank)
      throw parse_error("generator index exceeds rank", i);
    raw.push_back(letter);
  }
  return Word(std::move(raw), rank);
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "e";
  std::string s;
  for (int l : w.letters())
    s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
  return s;
}

}  // namespace masa
