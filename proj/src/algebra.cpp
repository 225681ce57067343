#include "masa/algebra.hpp"

#include <cmath>
#include <sstream>

namespace masa {

AlgebraElement::AlgebraElement(const Word& w, GaussianRational coeff)
    : rank_(w.rank()) {
  if (!coeff.is_zero()) terms_.emplace(w, std::move(coeff));
}

GaussianRational AlgebraElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void AlgebraElement::set(const Word& w, GaussianRational c) {
  if (c.is_zero())
    terms_.erase(w);
  else
    terms_.insert_or_assign(w, std::move(c));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [w, c] : o.terms_) set(w, coeff(w) + c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [w, c] : o.terms_) set(w, coeff(w) - c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  AlgebraElement out(a.rank_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = multiply(wa, wb);
      out.set(w, out.coeff(w) + ca * cb);
    }
  return out;
}

AlgebraElement operator*(const GaussianRational& c, AlgebraElement a) {
  AlgebraElement out(a.rank_);
  for (const auto& [w, cw] : a.terms_) out.set(w, c * cw);
  return out;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement out(x.rank());
  for (const auto& [w, c] : x.terms()) out.set(invert(w), c.conj());
  return out;
}

GaussianRational trace(const AlgebraElement& x) {
  return x.coeff(Word::identity(x.rank()));
}

mpq_class norm2_squared(const AlgebraElement& x) {
  mpq_class s = 0;
  for (const auto& [w, c] : x.terms()) s += c.abs2();
  return s;
}

double norm2(const AlgebraElement& x) {
  return std::sqrt(norm2_squared(x).get_d());
}

double norm1(const AlgebraElement& x) {
  double s = 0;
  for (const auto& [w, c] : x.terms()) s += c.abs();
  return s;
}

AlgebraElement expect(const AlgebraElement& x, const MembershipTest& in_subgroup) {
  AlgebraElement out(x.rank());
  for (const auto& [w, c] : x.terms())
    if (in_subgroup(w)) out.set(w, c);
  return out;
}

AlgebraElement expect(const AlgebraElement& x, const SubgroupGraph& h) {
  return expect(x, [&h](const Word& w) { return h.contains(w); });
}

CyclicSubgroup::CyclicSubgroup(const Word& generator)
    : gen_(generator),
      graph_(SubgroupGraph::build({generator}, generator.rank())) {}

bool CyclicSubgroup::contains(const Word& w) const {
  if (gen_.is_identity()) return w.is_identity();
  return graph_.contains(w);
}

AlgebraElement cesaro_average(const AlgebraElement& x, const Word& a, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  AlgebraElement sum(x.rank());
  Word aj = Word::identity(a.rank());
  for (int j = 1; j <= n; ++j) {
    aj = multiply(aj, a);
    Word aj_inv = invert(aj);
    for (const auto& [w, c] : x.terms()) {
      Word conj = multiply(multiply(aj_inv, w), aj);
      sum.set(conj, sum.coeff(conj) + c);
    }
  }
  return GaussianRational(mpq_class(1, n)) * sum;
}

namespace {

// Coefficient token: [int][/int] with optional trailing 'i', or bare 'i'.
GaussianRational parse_coeff(std::string_view tok, size_t pos) {
  bool imaginary = false;
  if (!tok.empty() && tok.back() == 'i') {
    imaginary = true;
    tok.remove_suffix(1);
  }
  mpq_class value;
  if (tok.empty()) {
    value = 1;
  } else {
    try {
      value = mpq_class(std::string(tok));
    } catch (const std::invalid_argument&) {
      throw parse_error("invalid coefficient", pos);
    }
    value.canonicalize();
  }
  return imaginary ? GaussianRational(mpq_class(0), value) : GaussianRational(value);
}

}  // namespace

AlgebraElement parse_element(std::string_view text, int rank) {
  AlgebraElement out(rank);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw parse_error("expected '+' or '-'", i);
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    size_t start = i;
    // Parenthesized complex coefficient: "(a+bi)" or "(a-bi)".
    if (i < text.size() && text[i] == '(') {
      size_t close = text.find(')', i);
      if (close == std::string_view::npos)
        throw parse_error("unbalanced '('", i);
      std::string_view inner = text.substr(i + 1, close - i - 1);
      size_t split = inner.find_first_of("+-", 1);
      if (split == std::string_view::npos)
        throw parse_error("expected complex coefficient", i);
      GaussianRational c = parse_coeff(inner.substr(0, split), i);
      GaussianRational im_part = parse_coeff(inner.substr(split + 1), i);
      if (inner[split] == '-') im_part = -im_part;
      c += im_part;
      i = close + 1;
      if (i >= text.size() || text[i] != '*')
        throw parse_error("expected '*' after coefficient", i);
      ++i;
      size_t wend = i;
      while (wend < text.size() && std::isalpha(static_cast<unsigned char>(text[wend])))
        ++wend;
      if (wend == i) throw parse_error("expected word after '*'", i);
      Word w = parse_word(text.substr(i, wend - i), rank);
      i = wend;
      GaussianRational signed_c = sign < 0 ? -c : c;
      out.set(w, out.coeff(w) + signed_c);
      skip_ws();
      continue;
    }
    // Coefficient part: digits, '/', or 'i', terminated by '*' or a letter.
    size_t coeff_end = i;
    while (coeff_end < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[coeff_end])) ||
            text[coeff_end] == '/' || text[coeff_end] == 'i'))
      ++coeff_end;
    GaussianRational c(1);
    Word w = Word::identity(rank);
    if (coeff_end < text.size() && text[coeff_end] == '*') {
      c = parse_coeff(text.substr(i, coeff_end - i), i);
      i = coeff_end + 1;
      size_t wend = i;
      while (wend < text.size() && std::isalpha(static_cast<unsigned char>(text[wend])))
        ++wend;
      if (wend == i) throw parse_error("expected word after '*'", i);
      w = parse_word(text.substr(i, wend - i), rank);
      i = wend;
    } else {
      size_t wend = i;
      while (wend < text.size() && std::isalpha(static_cast<unsigned char>(text[wend])))
        ++wend;
      if (wend > i) {
        w = parse_word(text.substr(i, wend - i), rank);
        i = wend;
      } else if (coeff_end > i) {
        c = parse_coeff(text.substr(i, coeff_end - i), i);
        i = coeff_end;
      } else {
        throw parse_error("expected term", start);
      }
    }
    if (sign < 0) c = -c;
    out.set(w, out.coeff(w) + c);
    skip_ws();
  }
  return out;
}

std::string format_element(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    std::string cs = c.str();
    bool complex_pair = c.im != 0 && c.re != 0;
    if (!first) {
      if (!complex_pair && !cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    } else if (!complex_pair && !cs.empty() && cs[0] == '-') {
      os << "-";
      cs = cs.substr(1);
    }
    first = false;
    if (complex_pair) cs = "(" + cs + ")";
    if (cs == "1")
      os << format_word(w);
    else
      os << cs << "*" << format_word(w);
  }
  return os.str();
}

}  // namespace masa
