#include "masa/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "masa/affine.hpp"
#include "masa/algebra.hpp"
#include "masa/asymptotics.hpp"
#include "masa/matrix_scene.hpp"
#include "masa/stallings.hpp"
#include "masa/words.hpp"

namespace masa {

namespace {

Word gen_a(int rank = 2) { return Word::generator(1, rank); }

Word random_word(std::mt19937_64& rng, int rank, int max_len, int min_len = 1) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 2 * rank - 1);
  int len = len_dist(rng);
  std::vector<int> raw;
  while (static_cast<int>(raw.size()) < len) {
    int code = letter_dist(rng);
    int l = (code / 2 + 1) * (code % 2 == 0 ? 1 : -1);
    if (!raw.empty() && raw.back() == -l) continue;
    raw.push_back(l);
  }
  return Word(std::move(raw), rank);
}

AlgebraElement random_element(std::mt19937_64& rng, const std::vector<Word>& pool,
                              int max_terms) {
  std::uniform_int_distribution<int> count_dist(1, max_terms);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  AlgebraElement x(pool.empty() ? 2 : pool[0].rank());
  int terms = count_dist(rng);
  for (int t = 0; t < terms; ++t) {
    const Word& w = pool[pick(rng)];
    GaussianRational c(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    if (c.is_zero()) c = GaussianRational(1);
    x.set(w, x.coeff(w) + c);
  }
  if (x.is_zero()) x.set(pool[pick(rng)], GaussianRational(1));
  return x;
}

CheckReport summary(const std::string& check, const std::string& eq, bool pass,
                    long checked, long failures, nlohmann::json extra = {}) {
  CheckReport rep;
  rep.check = check;
  rep.paper_eq = eq;
  rep.inputs = {{"cases", checked}};
  rep.lhs = std::to_string(failures);
  rep.rhs = "0";
  rep.exact = true;
  rep.pass = pass;
  rep.witness = std::move(extra);
  return rep;
}

// Criterion 1: exhaustive witness identity over the radius-6 ball.
SuiteResult criterion1(const SuiteConfig& cfg) {
  SuiteResult res{"c1_strong_singularity_witness", {}, true};
  Word a = gen_a();
  auto graph = SubgroupGraph::build({a}, 2);
  long checked = 0, failures = 0;
  for (const auto& gamma : enumerate_ball(2, 6)) {
    if (graph.contains(gamma)) continue;
    ++checked;
    auto rep = check_thm33(gamma, graph, a);
    if (!rep.pass) {
      ++failures;
      if (res.checks.size() < 5) res.checks.push_back(rep);
    }
  }
  res.pass = failures == 0;
  res.checks.insert(res.checks.begin(),
                    summary("thm33_exhaustive_ball6", "3.13", res.pass, checked,
                            failures));
  (void)cfg;
  return res;
}

// Criterion 2: exceptional-exponent singleton bound, closed form vs brute force.
SuiteResult criterion2(const SuiteConfig& cfg) {
  SuiteResult res{"c2_lemma31_singleton", {}, true};
  std::mt19937_64 rng(cfg.seed);
  Word a = gen_a();
  CyclicSubgroup A(a);
  int samples = cfg.samples > 0 ? cfg.samples : 500;
  long failures = 0;
  for (int s = 0; s < samples; ++s) {
    Word h = random_word(rng, 2, 5);
    Word k = random_word(rng, 2, 5);
    if (A.contains(h) || A.contains(k)) {
      --s;
      continue;
    }
    auto closed = exceptional_exponents(h, k, a);
    auto brute = exceptional_exponents_bruteforce(h, k, a, 20);
    bool ok = !closed.degenerate && closed.exponents.size() <= 1 &&
              closed.exponents == brute;
    if (!ok) ++failures;
  }
  res.pass = failures == 0;
  res.checks.push_back(summary("lemma31_singleton", "3.2", res.pass, samples,
                               failures, {{"seed", cfg.seed}}));
  return res;
}

// Criterion 3: decay horizons with exact vanishing and the norm bounds.
SuiteResult criterion3(const SuiteConfig& cfg) {
  SuiteResult res{"c3_phi_decay", {}, true};
  std::mt19937_64 rng(cfg.seed);
  Word a = gen_a();
  auto pool = enumerate_ball(2, 3);
  int samples = cfg.samples > 0 ? cfg.samples : 200;
  long failures = 0;
  long max_horizon = 0;
  for (int s = 0; s < samples; ++s) {
    AlgebraElement x = random_element(rng, pool, 3);
    AlgebraElement y = random_element(rng, pool, 3);
    auto cert = decay_horizon(x, y, a);
    max_horizon = std::max(max_horizon, cert.horizon);
    bool ok = true;
    double n2x = norm2(x), n1x = norm1(x), n2y = norm2(y), n1y = norm1(y);
    for (long k = -(cert.horizon + 20); k <= cert.horizon + 20; ++k) {
      AlgebraElement p = phi_k(x, y, a, k);
      if (std::labs(k) >= cert.horizon && !p.is_zero()) ok = false;
      double n2p = norm2(p);
      if (n2p > 2.0 * n2x * n1y + 1e-9) ok = false;
      if (n2p > 2.0 * n1x * n2y + 1e-9) ok = false;
    }
    if (!ok) ++failures;
  }
  res.pass = failures == 0;
  res.checks.push_back(summary("phi_decay_horizon", "6.6", res.pass, samples,
                               failures,
                               {{"seed", cfg.seed}, {"max_horizon", max_horizon}}));
  return res;
}

// Criterion 4: the witness inequality with u beyond both horizons.
SuiteResult criterion4(const SuiteConfig& cfg) {
  SuiteResult res{"c4_prop65_witness", {}, true};
  std::mt19937_64 rng(cfg.seed);
  Word a = gen_a();
  auto pool = enumerate_ball(2, 3);
  int samples = cfg.samples > 0 ? cfg.samples : 200;
  long failures = 0;
  for (int s = 0; s < samples; ++s) {
    AlgebraElement x = random_element(rng, pool, 3);
    AlgebraElement y = random_element(rng, pool, 3);
    auto rep = check_prop65(x, y, a);
    if (!rep.pass) {
      ++failures;
      if (res.checks.size() < 5) res.checks.push_back(rep);
    }
  }
  // Equality case x = b^{-1}, y = b.
  AlgebraElement xb(parse_word("B", 2)), yb(parse_word("b", 2));
  auto eq_rep = check_prop65(xb, yb, a);
  bool eq_ok = eq_rep.pass && eq_rep.lhs == "1" && eq_rep.rhs == "1";
  res.pass = failures == 0 && eq_ok;
  res.checks.insert(res.checks.begin(),
                    summary("prop65_samples", "6.11", res.pass, samples + 1,
                            failures + (eq_ok ? 0 : 1), {{"seed", cfg.seed}}));
  return res;
}

// Criterion 5: Cesaro decay at rate n^{-1/2}, exact.
SuiteResult criterion5(const SuiteConfig& cfg) {
  SuiteResult res{"c5_cesaro", {}, true};
  Word a = gen_a();
  CyclicSubgroup A(a);
  long checked = 0, failures = 0;
  for (const auto& g : enumerate_ball(2, 4)) {
    if (A.contains(g)) continue;
    AlgebraElement x(g);
    for (int n = 1; n <= 64; ++n) {
      ++checked;
      if (norm2_squared(cesaro_average(x, a, n)) != mpq_class(1, n)) ++failures;
    }
  }
  res.pass = failures == 0;
  res.checks.push_back(summary("cesaro_rate", "6.2", res.pass, checked, failures));
  (void)cfg;
  return res;
}

// Criterion 6: matrix-model chain inequality and bracketed comparison.
SuiteResult criterion6(const SuiteConfig& cfg) {
  SuiteResult res{"c6_matrix_prop21", {}, true};
  int pairs = cfg.samples > 0 ? cfg.samples : 1000;
  for (int n = 2; n <= 8; ++n) {
    mm::Scene scene{n};
    std::mt19937_64 rng(cfg.seed + n);
    long failures = 0;
    double worst_margin = 0;
    for (int s = 0; s < pairs; ++s) {
      mm::Mat u = mm::random_unitary(n, rng);
      mm::Mat v = mm::random_unitary(n, rng);
      double chain =
          mm::norm2(mm::expect_diag(u * v) * u - u * mm::expect_diag(v * u));
      double rhs = 4.0 * mm::norm2(u - mm::expect_diag(u));
      if (chain > rhs + 1e-9) ++failures;
      worst_margin = std::max(worst_margin, chain - rhs);
    }
    // Bracketed (2.2) assertion on a few sampled unitaries.
    bool brackets_ok = true;
    for (int s = 0; s < 3; ++s) {
      mm::Mat u = mm::random_unitary(n, rng);
      auto rep = mm::check_prop21(scene, u, cfg.seed + 100 + s, 16, true);
      brackets_ok = brackets_ok && rep.pass;
    }
    bool ok = failures == 0 && brackets_ok;
    res.pass = res.pass && ok;
    res.checks.push_back(summary("prop21_n" + std::to_string(n), "2.6", ok, pairs,
                                 failures, {{"worst_margin", worst_margin}}));
  }
  return res;
}

// Criterion 7: the full unitary-flip chain for generated (p, q, v).
SuiteResult criterion7(const SuiteConfig& cfg) {
  SuiteResult res{"c7_thm71_chain", {}, true};
  for (int n : {2, 4, 6, 8}) {
    mm::Scene scene{n};
    std::mt19937_64 rng(cfg.seed + n);
    for (int m = 1; 2 * m <= n; ++m) {
      mm::Mat p = mm::Mat::Zero(n, n), q = mm::Mat::Zero(n, n);
      for (int i = 0; i < m; ++i) {
        p(i, i) = 1.0;
        q(m + i, m + i) = 1.0;
      }
      mm::Mat plain = mm::Mat::Zero(n, n);
      for (int i = 0; i < m; ++i) plain(i, m + i) = 1.0;

      std::vector<mm::Mat> vs{plain};
      // Twisted variant: unitary rotation inside the range projection.
      mm::Mat w = mm::Mat::Identity(n, n);
      mm::Mat block = mm::random_unitary(m, rng);
      w.topLeftCorner(m, m) = block;
      vs.push_back(w * plain);
      if (m == 2) {
        mm::Mat had = mm::Mat::Identity(n, n);
        had(0, 0) = had(0, 1) = had(1, 0) = 1.0 / std::sqrt(2.0);
        had(1, 1) = -1.0 / std::sqrt(2.0);
        vs.push_back(had * plain);
      }
      for (size_t i = 0; i < vs.size(); ++i) {
        auto rep = mm::check_thm71_chain(scene, p, q, vs[i], cfg.seed + i);
        rep.inputs["n"] = n;
        rep.inputs["m"] = m;
        res.pass = res.pass && rep.pass;
        if (!rep.pass || i == 0) res.checks.push_back(rep);
      }
    }
  }
  // Orthogonal-range Pythagoras on the Hadamard-twisted configuration, n = 4.
  {
    mm::Scene scene{4};
    mm::Mat p = mm::Mat::Zero(4, 4), q = mm::Mat::Zero(4, 4);
    p(0, 0) = p(1, 1) = 1.0;
    q(2, 2) = q(3, 3) = 1.0;
    mm::Mat v = mm::Mat::Zero(4, 4);
    v(0, 2) = v(0, 3) = v(1, 2) = 1.0 / std::sqrt(2.0);
    v(1, 3) = -1.0 / std::sqrt(2.0);
    std::vector<mm::Mat> p_units, v_units;
    for (int i = 0; i < 2; ++i) {
      mm::Mat e = mm::Mat::Zero(4, 4);
      e(i, i) = 1.0;
      p_units.push_back(e);
      mm::Mat f = mm::Mat::Zero(4, 4);
      f(2 + i, 2 + i) = 1.0;
      v_units.push_back(v * f * v.adjoint());
    }
    mm::SubspaceProjection proj_pa(4, p_units), proj_v(4, v_units);
    auto phi = [&](const mm::Mat& x) {
      mm::Mat y = x - proj_v(x);
      return mm::Mat(proj_pa(y));
    };
    auto psi = [&](const mm::Mat& x) {
      mm::Mat y = proj_v(x);
      return mm::Mat(y - proj_pa(y));
    };
    auto rep = mm::check_lemma71(scene, phi, psi, cfg.seed);
    res.pass = res.pass && rep.pass;
    res.checks.push_back(rep);
  }
  return res;
}

// Criterion 8: delta ceiling, attainment, and the vanishing certificate.
SuiteResult criterion8(const SuiteConfig& cfg) {
  SuiteResult res{"c8_delta", {}, true};
  mm::Scene scene{4};

  mm::Mat v_plain = mm::Mat::Zero(4, 4);
  v_plain(0, 2) = v_plain(1, 3) = 1.0;
  auto rep_plain = mm::delta_estimate(scene, v_plain, cfg.seed);
  bool plain_zero = std::stod(rep_plain.lhs) < 1e-12;
  rep_plain.check = "delta_diagonal_certificate";
  rep_plain.pass = rep_plain.pass && plain_zero;
  res.checks.push_back(rep_plain);
  res.pass = res.pass && rep_plain.pass;

  mm::Mat v_had = mm::Mat::Zero(4, 4);
  v_had(0, 2) = v_had(0, 3) = v_had(1, 2) = 1.0 / std::sqrt(2.0);
  v_had(1, 3) = -1.0 / std::sqrt(2.0);
  auto rep_had = mm::delta_estimate(scene, v_had, cfg.seed + 1);
  double attained = std::stod(rep_had.lhs);
  bool attains = std::abs(attained - std::sqrt(0.5)) < 1e-9;
  rep_had.check = "delta_hadamard_attainment";
  rep_had.pass = rep_had.pass && attains;
  res.checks.push_back(rep_had);
  res.pass = res.pass && rep_had.pass;

  // Random twisted partial isometries keep the ceiling.
  std::mt19937_64 rng(cfg.seed + 2);
  for (int n : {4, 6}) {
    mm::Scene sc{n};
    for (int m = 1; 2 * m <= n; ++m) {
      mm::Mat plain = mm::Mat::Zero(n, n);
      for (int i = 0; i < m; ++i) plain(i, m + i) = 1.0;
      mm::Mat w = mm::Mat::Identity(n, n);
      w.topLeftCorner(m, m) = mm::random_unitary(m, rng);
      auto rep = mm::delta_estimate(sc, w * plain, cfg.seed + 10 + n + m);
      res.pass = res.pass && rep.pass;
      if (!rep.pass) res.checks.push_back(rep);
    }
  }
  res.checks.push_back(summary("delta_ceiling_random", "2.10", res.pass, 5, 0));
  return res;
}

// Criterion 9: Dixmier affine stages.
SuiteResult criterion9(const SuiteConfig& cfg) {
  SuiteResult res{"c9_affine_stages", {}, true};
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    long q = p;
    for (int d = 1; q <= 64; ++d, q *= p) {
      auto mal = malnormality_exhaustive(p, d);
      res.pass = res.pass && mal.pass;
      if (!mal.pass) res.checks.push_back(mal);
      FiniteField f(p, d);
      long cls = conjugacy_class_size(f, {1, 1});
      if (cls != f.size() - 1) {
        res.pass = false;
        res.checks.push_back(summary("translation_class_p" + std::to_string(p) +
                                         "_d" + std::to_string(d),
                                     "3.21", false, 1, 1));
      }
    }
  }
  res.checks.push_back(summary("affine_all_stages", "3.21", res.pass, 0, 0));
  (void)cfg;
  return res;
}

// Criterion 10: membership soundness and fold confluence.
SuiteResult criterion10(const SuiteConfig& cfg) {
  SuiteResult res{"c10_stallings_soundness", {}, true};
  auto queries = enumerate_ball(2, 6);
  long failures = 0, checked = 0;

  // Cyclic subgroups, exhaustive over generators of length <= 4, with the
  // two-sided power oracle.
  for (const auto& w : enumerate_ball(2, 4)) {
    if (w.is_identity()) continue;
    auto graph = SubgroupGraph::build({w}, 2);
    for (const auto& v : queries) {
      ++checked;
      bool oracle = false;
      for (long k = -8; k <= 8 && !oracle; ++k)
        if (power(w, k) == v) oracle = true;
      if (graph.contains(v) != oracle) ++failures;
    }
  }

  // The index-2 kernel with its homomorphism oracle, two-sided.
  {
    std::vector<Word> gens{parse_word("aa", 2), parse_word("ab", 2),
                           parse_word("ba", 2)};
    auto graph = SubgroupGraph::build(gens, 2);
    for (const auto& v : queries) {
      ++checked;
      long s = 0;
      for (int l : v.letters()) s += l > 0 ? 1 : -1;
      if (graph.contains(v) != (((s % 2) + 2) % 2 == 0)) ++failures;
    }
  }

  // Random multi-generator subgroups: product-enumeration oracle (positive
  // direction) and fold confluence across shuffled build orders.
  std::mt19937_64 rng(cfg.seed);
  int subgroups = cfg.samples > 0 ? cfg.samples : 40;
  for (int s = 0; s < subgroups; ++s) {
    std::uniform_int_distribution<int> count(2, 3);
    int k = count(rng);
    std::vector<Word> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_word(rng, 2, 4));
    auto graph = SubgroupGraph::build(gens, 2);

    // All products of <= 5 generator-or-inverse factors.
    std::set<Word> products{Word::identity(2)};
    std::set<Word> frontier{Word::identity(2)};
    std::vector<Word> steps;
    for (const auto& g : gens) {
      steps.push_back(g);
      steps.push_back(invert(g));
    }
    for (int depth = 0; depth < 5; ++depth) {
      std::set<Word> next;
      for (const auto& w : frontier)
        for (const auto& g : steps) {
          Word prod = multiply(w, g);
          if (!products.count(prod)) {
            products.insert(prod);
            next.insert(prod);
          }
        }
      frontier = std::move(next);
    }
    for (const auto& w : products) {
      if (w.length() > 6) continue;
      ++checked;
      if (!graph.contains(w)) ++failures;
    }

    for (int order = 0; order < 20; ++order) {
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto alt = SubgroupGraph::build(shuffled, 2);
      for (const auto& v : queries) {
        ++checked;
        if (graph.contains(v) != alt.contains(v)) ++failures;
      }
    }
  }

  res.pass = failures == 0;
  res.checks.push_back(summary("stallings_soundness", "3.2", res.pass, checked,
                               failures, {{"seed", cfg.seed}}));
  return res;
}

// Criterion 11: normalizer and malnormality scans.
SuiteResult criterion11(const SuiteConfig& cfg) {
  SuiteResult res{"c11_scans", {}, true};
  Word a = gen_a();
  Word b = Word::generator(2, 2);
  long failures = 0;

  for (int p : {1, 2, 3})
    if (!normalizer_scan(a, p, 3).empty()) ++failures;

  auto bb_scan = normalizer_scan(multiply(b, b), 1, 1);
  if (std::find(bb_scan.begin(), bb_scan.end(), b) == bb_scan.end()) ++failures;

  auto graph_a = SubgroupGraph::build({a}, 2);
  if (!malnormal_violations(graph_a, 2, 3).empty()) ++failures;

  auto graph_bb = SubgroupGraph::build({multiply(b, b)}, 2);
  if (malnormal_violations(graph_bb, 2, 1).empty()) ++failures;

  res.pass = failures == 0;
  res.checks.push_back(summary("lemma35_scans", "3.19", res.pass, 6, failures));
  (void)cfg;
  return res;
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  return {{"suite", name}, {"pass", pass}, {"checks", checks_json}};
}

SuiteResult run_criterion(int id, const SuiteConfig& cfg) {
  switch (id) {
    case 1: return criterion1(cfg);
    case 2: return criterion2(cfg);
    case 3: return criterion3(cfg);
    case 4: return criterion4(cfg);
    case 5: return criterion5(cfg);
    case 6: return criterion6(cfg);
    case 7: return criterion7(cfg);
    case 8: return criterion8(cfg);
    case 9: return criterion9(cfg);
    case 10: return criterion10(cfg);
    case 11: return criterion11(cfg);
    default: throw std::invalid_argument("unknown criterion");
  }
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "sec2") return {6};
  if (suite == "sec3") return {1, 2, 11};
  if (suite == "sec6") return {3, 4, 5};
  if (suite == "sec7") return {7, 8};
  if (suite == "affine") return {9};
  if (suite == "stallings") return {10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  throw std::invalid_argument("unknown suite: " + suite);
}

SuiteResult run_suite(const std::string& suite, const SuiteConfig& cfg) {
  SuiteResult combined{suite, {}, true};
  for (int id : suite_criteria(suite)) {
    auto res = run_criterion(id, cfg);
    combined.pass = combined.pass && res.pass;
    for (auto& c : res.checks) {
      c.inputs["criterion"] = res.name;
      combined.checks.push_back(std::move(c));
    }
  }
  std::sort(combined.checks.begin(), combined.checks.end(),
            [](const CheckReport& x, const CheckReport& y) {
              return x.check < y.check;
            });
  return combined;
}

}  // namespace masa
