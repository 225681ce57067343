#include "masa/asymptotics.hpp"

#include <algorithm>
#include <cstdlib>

namespace masa {

namespace {

int generator_letter(const Word& a) {
  if (a.length() != 1) throw std::invalid_argument("a must be a single generator");
  return a.letters()[0];
}

bool is_power_of_generator(const Word& w, int gen) {
  for (int l : w.letters())
    if (std::abs(l) != std::abs(gen)) return false;
  return true;
}

}  // namespace

std::pair<Word, long> a_run_decompose(const Word& h, const Word& a) {
  int gen = std::abs(generator_letter(a));
  const auto& ls = h.letters();
  long s = 0;
  size_t end = ls.size();
  while (end > 0 && std::abs(ls[end - 1]) == gen) {
    s += ls[end - 1] > 0 ? 1 : -1;
    --end;
  }
  return {Word(std::vector<int>(ls.begin(), ls.begin() + end), h.rank()), s};
}

ExceptionalResult exceptional_exponents(const Word& h, const Word& k, const Word& a) {
  int gen = generator_letter(a);
  ExceptionalResult r;
  if (is_power_of_generator(h, gen) || is_power_of_generator(k, gen)) {
    r.degenerate = true;
    return r;
  }
  auto [h0, s] = a_run_decompose(h, a);
  auto [k0_inv, t_neg] = a_run_decompose(invert(k), a);
  Word k0 = invert(k0_inv);
  long t = -t_neg;
  // h a^m k = h0 a^{s+m+t} k0 with no cancellation at the junctions unless the
  // middle power vanishes; so m = -s-t is the only candidate.
  if (is_power_of_generator(multiply(h0, k0), gen)) r.exponents.insert(-s - t);
  return r;
}

std::set<long> exceptional_exponents_bruteforce(const Word& h, const Word& k,
                                                const Word& a, long window) {
  int gen = generator_letter(a);
  std::set<long> out;
  for (long m = -window; m <= window; ++m) {
    Word w = multiply(multiply(h, power(a, m)), k);
    if (is_power_of_generator(w, gen)) out.insert(m);
  }
  return out;
}

AlgebraElement phi_k(const AlgebraElement& x, const AlgebraElement& y,
                     const Word& a, long k) {
  CyclicSubgroup A(a);
  AlgebraElement ak(power(a, k));
  AlgebraElement lhs = expect(x * ak * y, A.membership());
  AlgebraElement rhs = expect(x, A.membership()) * expect(y, A.membership()) * ak;
  return lhs - rhs;
}

DecayCertificate decay_horizon(const AlgebraElement& x, const AlgebraElement& y,
                               const Word& a) {
  int gen = generator_letter(a);
  DecayCertificate cert;
  for (const auto& [wx, cx] : x.terms()) {
    if (is_power_of_generator(wx, gen)) continue;
    for (const auto& [wy, cy] : y.terms()) {
      if (is_power_of_generator(wy, gen)) continue;
      auto r = exceptional_exponents(wx, wy, a);
      for (long m : r.exponents) {
        cert.exceptional.insert(m);
        cert.witnesses.push_back({wx, wy, m});
      }
    }
  }
  for (long m : cert.exceptional)
    cert.horizon = std::max(cert.horizon, std::labs(m) + 1);
  return cert;
}

Word witness_g(const AlgebraElement& u, const AlgebraElement& v, const Word& a) {
  auto c1 = decay_horizon(u, v, a);
  auto c2 = decay_horizon(adjoint(u) * u, v * adjoint(v), a);
  long k = std::max(c1.horizon, c2.horizon);
  Word g = power(a, k);
  // Both factorizations must now hold exactly.
  CyclicSubgroup A(a);
  AlgebraElement ge(g);
  auto factors = [&](const AlgebraElement& p, const AlgebraElement& q) {
    return expect(p * ge * q, A.membership()) ==
           expect(p, A.membership()) * ge * expect(q, A.membership());
  };
  if (!factors(u, v) || !factors(adjoint(u) * u, v * adjoint(v)))
    throw std::logic_error("witness power fails the factorization equations");
  return g;
}

MultivarReport multivar_decay(const std::vector<AlgebraElement>& xs, const Word& a,
                              int window) {
  if (xs.size() < 2) throw std::invalid_argument("need at least two elements");
  size_t n = xs.size() - 1;  // number of inserted powers
  CyclicSubgroup A(a);
  AlgebraElement expected_tail = expect(xs[0], A.membership());
  for (size_t i = 1; i < xs.size(); ++i)
    expected_tail = expected_tail * expect(xs[i], A.membership());

  auto defect = [&](const std::vector<long>& ks) {
    AlgebraElement prod = xs[0];
    long total = 0;
    for (size_t i = 0; i < n; ++i) {
      prod = prod * AlgebraElement(power(a, ks[i])) * xs[i + 1];
      total += ks[i];
    }
    return expect(prod, A.membership()) -
           expected_tail * AlgebraElement(power(a, total));
  };

  MultivarReport rep;
  rep.grid_window = window;
  std::vector<long> horizon(n, 1);
  const long cap = 50;
  for (int round = 0; round < 400; ++round) {
    // Enumerate the grid horizon_i <= k_i <= horizon_i + window.
    std::vector<long> ks(horizon);
    bool failed = false;
    std::vector<long> failing;
    while (true) {
      if (!defect(ks).is_zero()) {
        failed = true;
        failing = ks;
        break;
      }
      size_t pos = 0;
      while (pos < n) {
        if (++ks[pos] <= horizon[pos] + window) break;
        ks[pos] = horizon[pos];
        ++pos;
      }
      if (pos == n) break;
    }
    if (!failed) {
      rep.horizons = horizon;
      rep.all_zero = true;
      return rep;
    }
    // Push up the first coordinate sitting at its current horizon.
    size_t bump = 0;
    for (size_t i = 0; i < n; ++i)
      if (failing[i] == horizon[i]) {
        bump = i;
        break;
      }
    if (++horizon[bump] > cap) break;
  }
  rep.horizons = horizon;
  rep.all_zero = false;
  return rep;
}

FreenessReport freeness_decay(const std::vector<AlgebraElement>& xs, const Word& a,
                              long kmax) {
  if (xs.size() < 2) throw std::invalid_argument("need at least two elements");
  size_t n = xs.size() - 1;
  CyclicSubgroup A(a);
  AlgebraElement expected_tail = expect(xs[0], A.membership());
  for (size_t i = 1; i < xs.size(); ++i)
    expected_tail = expected_tail * expect(xs[i], A.membership());

  FreenessReport rep;
  rep.kmax = kmax;
  long last_nonzero = 0;
  for (long k = 1; k <= kmax; ++k) {
    AlgebraElement prod = xs[0];
    for (size_t i = 0; i < n; ++i)
      prod = prod * AlgebraElement(power(a, k)) * xs[i + 1];
    AlgebraElement d = expect(prod, A.membership()) -
                       expected_tail * AlgebraElement(power(a, k * static_cast<long>(n)));
    if (!d.is_zero()) last_nonzero = k;
  }
  rep.horizon = last_nonzero + 1;
  rep.all_zero = rep.horizon <= kmax;
  return rep;
}

CheckReport check_lemma32(const Word& u, const AlgebraElement& v, const Word& a) {
  CyclicSubgroup A(a);
  AlgebraElement ue(u);
  Word g = witness_g(ue, v, a);
  AlgebraElement ugv = ue * AlgebraElement(g) * v;
  AlgebraElement defect = ugv - expect(ugv, A.membership());
  mpq_class lhs = norm2_squared(defect);

  AlgebraElement vv = v * adjoint(v);
  AlgebraElement ev = expect(v, A.membership());
  GaussianRational rhs_g =
      trace(expect(vv, A.membership())) - trace(ev * adjoint(ev));
  mpq_class rhs = rhs_g.re;

  CheckReport rep;
  rep.check = "lemma32_witness";
  rep.paper_eq = "3.4";
  rep.inputs = {{"u", format_word(u)}, {"v", format_element(v)},
                {"a", format_word(a)}};
  rep.lhs = lhs.get_str();
  rep.rhs = rhs.get_str();
  rep.exact = true;
  rep.pass = rhs_g.im == 0 && lhs >= rhs;
  rep.witness = {{"g", format_word(g)}};
  return rep;
}

CheckReport check_thm33(const Word& gamma, const SubgroupGraph& h, const Word& g) {
  CheckReport rep;
  rep.check = "thm33_witness";
  rep.paper_eq = "3.13";
  rep.inputs = {{"gamma", format_word(gamma)}, {"g", format_word(g)}};
  rep.exact = true;

  auto eh = [&h](const Word& w) { return h.contains(w); };
  AlgebraElement ge(gamma);
  mpq_class rhs = norm2_squared(ge - expect(ge, eh));
  rep.rhs = rhs.get_str();

  if (h.contains(gamma)) {
    rep.lhs = "0";
    rep.pass = rhs == 0;
    rep.witness = {{"case", "gamma in H"}};
    return rep;
  }

  Word x = conjugate(g, gamma);
  auto e_conj = [&](const Word& w) {
    return h.contains(conjugate(w, invert(gamma)));
  };
  AlgebraElement xe(x);
  mpq_class lhs = norm2_squared(expect(xe, e_conj) - expect(xe, eh));
  rep.lhs = lhs.get_str();
  rep.pass = lhs == 1 && rhs == 1;
  rep.witness = {{"x", format_word(x)}};
  return rep;
}

CheckReport check_prop65(const AlgebraElement& x, const AlgebraElement& y,
                         const Word& a) {
  CyclicSubgroup A(a);
  auto c1 = decay_horizon(x, y, a);
  auto c2 = decay_horizon(adjoint(x) * x, y * adjoint(y), a);
  long k = std::max(c1.horizon, c2.horizon);
  AlgebraElement u(power(a, k));

  AlgebraElement xuy = x * u * y;
  mpq_class lhs = norm2_squared(xuy - expect(xuy, A.membership()));

  AlgebraElement exx = expect(adjoint(x) * x, A.membership());
  AlgebraElement eyy = expect(y * adjoint(y), A.membership());
  AlgebraElement ex = expect(x, A.membership());
  AlgebraElement ey = expect(y, A.membership());
  GaussianRational rhs_g = trace(exx * eyy) -
                           trace(ex * adjoint(ex) * ey * adjoint(ey));

  CheckReport rep;
  rep.check = "prop65_witness";
  rep.paper_eq = "6.11";
  rep.inputs = {{"x", format_element(x)}, {"y", format_element(y)},
                {"a", format_word(a)}};
  rep.lhs = lhs.get_str();
  rep.rhs = rhs_g.re.get_str();
  rep.exact = true;
  rep.pass = rhs_g.im == 0 && lhs >= rhs_g.re;
  rep.witness = {{"u", format_word(power(a, k))}, {"k", k}};
  return rep;
}

}  // namespace masa
