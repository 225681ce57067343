#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "masa/affine.hpp"
#include "masa/algebra.hpp"
#include "masa/asymptotics.hpp"
#include "masa/matrix_scene.hpp"
#include "masa/stallings.hpp"
#include "masa/suites.hpp"
#include "masa/words.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::vector<masa::Word> parse_subgroup(const std::string& text, int rank) {
  std::vector<masa::Word> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) gens.push_back(masa::parse_word(item, rank));
  return gens;
}

json element_json(const masa::AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms())
    terms.push_back({{"word", masa::format_word(w)},
                     {"re", c.re.get_str()},
                     {"im", c.im.get_str()}});
  return terms;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    f << j.dump(2) << "\n";
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_suite(const masa::SuiteResult& res, const masa::SuiteConfig& cfg,
                const std::string& format, const std::string& out_path) {
  if (format == "csv") {
    std::ostringstream os;
    os << "check,paper_eq,lhs,rhs,exact,pass\n";
    for (const auto& c : res.checks)
      os << csv_escape(c.check) << "," << csv_escape(c.paper_eq) << ","
         << csv_escape(c.lhs) << "," << csv_escape(c.rhs) << ","
         << (c.exact ? "true" : "false") << "," << (c.pass ? "true" : "false")
         << "\n";
    if (out_path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(out_path);
      f << os.str();
    }
    return;
  }
  json j = res.to_json();
  j["schema_version"] = kSchemaVersion;
  j["seed"] = cfg.seed;
  j["config"] = {{"rank", cfg.rank}, {"radius", cfg.radius},
                 {"samples", cfg.samples}, {"restarts", cfg.restarts}};
  emit(j, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for group-algebra and matrix-model checks"};
  app.set_config("--config");
  app.require_subcommand(1);

  int rank = 2;
  app.add_option("--rank", rank, "ambient free-group rank")->capture_default_str();

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "freely reduce a word");
  std::string reduce_word;
  cmd_reduce->add_option("word", reduce_word)->required();

  // member
  auto* cmd_member = app.add_subcommand("member", "subgroup membership");
  std::string member_sub, member_word;
  cmd_member->add_option("--sub", member_sub, "comma-separated generators")->required();
  cmd_member->add_option("--word", member_word)->required();

  // expect
  auto* cmd_expect = app.add_subcommand("expect", "conditional expectation");
  std::string expect_elem, expect_sub;
  cmd_expect->add_option("--x", expect_elem, "algebra element literal")->required();
  cmd_expect->add_option("--sub", expect_sub, "comma-separated generators")->required();

  // phi
  auto* cmd_phi = app.add_subcommand("phi", "bilinear defect at one exponent");
  std::string phi_x, phi_y, phi_gen;
  long phi_exp = 0;
  cmd_phi->add_option("--x", phi_x)->required();
  cmd_phi->add_option("--y", phi_y)->required();
  cmd_phi->add_option("--gen", phi_gen)->required();
  cmd_phi->add_option("--k", phi_exp)->required();

  // horizon
  auto* cmd_horizon = app.add_subcommand("horizon", "decay horizon certificate");
  std::string hor_x, hor_y, hor_gen;
  cmd_horizon->add_option("--x", hor_x)->required();
  cmd_horizon->add_option("--y", hor_y)->required();
  cmd_horizon->add_option("--gen", hor_gen)->required();

  // exceptional
  auto* cmd_exc = app.add_subcommand("exceptional", "exceptional exponent set");
  std::string exc_h, exc_k, exc_gen;
  cmd_exc->set_help_flag("--help", "print help");  // frees -h/--h for the input
  cmd_exc->add_option("--h", exc_h)->required();
  cmd_exc->add_option("--k", exc_k)->required();
  cmd_exc->add_option("--gen", exc_gen)->required();

  // affine
  auto* cmd_affine = app.add_subcommand("affine", "finite-field affine group checks");
  int aff_p = 3, aff_d = 1;
  std::string aff_check = "malnormal";
  cmd_affine->add_option("--p", aff_p)->required();
  cmd_affine->add_option("--d", aff_d)->required();
  cmd_affine->add_option("--check", aff_check)
      ->check(CLI::IsMember({"malnormal", "icc-trend"}));

  // matrix
  auto* cmd_matrix = app.add_subcommand("matrix", "matrix-model check suites");
  int mat_n = 4;
  std::string mat_suite = "sec2";
  std::uint64_t mat_seed = 7;
  int mat_restarts = 32;
  cmd_matrix->add_option("--n", mat_n)->required();
  cmd_matrix->add_option("--suite", mat_suite)
      ->check(CLI::IsMember({"sec2", "sec7"}));
  cmd_matrix->add_option("--seed", mat_seed)->required();
  cmd_matrix->add_option("--restarts", mat_restarts)->capture_default_str();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite, out_path, format = "json";
  masa::SuiteConfig cfg;
  bool seed_given = false;
  cmd_verify->add_option("--suite", suite)->required();
  cmd_verify->add_option("--radius", cfg.radius)->capture_default_str();
  cmd_verify->add_option("--samples", cfg.samples, "0 = criterion default")
      ->capture_default_str();
  cmd_verify->add_option("--restarts", cfg.restarts)->capture_default_str();
  cmd_verify->add_option("--seed", cfg.seed)->each([&](const std::string&) {
    seed_given = true;
  });
  cmd_verify->add_option("--out", out_path, "report file (default stdout)");
  cmd_verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (cmd_reduce->parsed()) {
      emit({{"word", masa::format_word(masa::parse_word(reduce_word, rank))}}, "");
    } else if (cmd_member->parsed()) {
      auto graph = masa::SubgroupGraph::build(parse_subgroup(member_sub, rank), rank);
      auto w = masa::parse_word(member_word, rank);
      json j = {{"word", masa::format_word(w)}, {"member", graph.contains(w)}};
      if (auto idx = graph.index())
        j["index"] = *idx;
      else
        j["index"] = "infinite";
      emit(j, "");
    } else if (cmd_expect->parsed()) {
      auto x = masa::parse_element(expect_elem, rank);
      auto graph = masa::SubgroupGraph::build(parse_subgroup(expect_sub, rank), rank);
      emit({{"expect", element_json(masa::expect(x, graph))}}, "");
    } else if (cmd_phi->parsed()) {
      auto x = masa::parse_element(phi_x, rank);
      auto y = masa::parse_element(phi_y, rank);
      auto a = masa::parse_word(phi_gen, rank);
      emit({{"phi", element_json(masa::phi_k(x, y, a, phi_exp))}}, "");
    } else if (cmd_horizon->parsed()) {
      auto x = masa::parse_element(hor_x, rank);
      auto y = masa::parse_element(hor_y, rank);
      auto a = masa::parse_word(hor_gen, rank);
      auto cert = masa::decay_horizon(x, y, a);
      json exc = json::array();
      for (long m : cert.exceptional) exc.push_back(m);
      emit({{"K", cert.horizon}, {"exceptional", exc}}, "");
    } else if (cmd_exc->parsed()) {
      auto h = masa::parse_word(exc_h, rank);
      auto k = masa::parse_word(exc_k, rank);
      auto a = masa::parse_word(exc_gen, rank);
      auto r = masa::exceptional_exponents(h, k, a);
      json exps = json::array();
      for (long m : r.exponents) exps.push_back(m);
      emit({{"exponents", exps}, {"degenerate", r.degenerate}}, "");
    } else if (cmd_affine->parsed()) {
      masa::CheckReport rep = aff_check == "malnormal"
                                  ? masa::malnormality_exhaustive(aff_p, aff_d)
                                  : masa::icc_trend(aff_p, aff_d);
      emit(rep.to_json(), "");
      return rep.pass ? 0 : 1;
    } else if (cmd_matrix->parsed()) {
      masa::mm::Scene scene{mat_n};
      std::vector<masa::CheckReport> reps;
      if (mat_suite == "sec2") {
        std::mt19937_64 rng(mat_seed);
        reps.push_back(masa::mm::check_prop21(scene,
                                              masa::mm::random_unitary(mat_n, rng),
                                              mat_seed, 64, true));
        if (mat_n % 2 == 0) {
          masa::mm::Mat p = masa::mm::Mat::Zero(mat_n, mat_n);
          for (int i = 0; i < mat_n / 2; ++i) p(i, i) = 1.0;
          reps.push_back(masa::mm::flip_unitary(scene, p));
        }
        reps.push_back(masa::mm::alpha_probe(scene, 32, mat_seed));
      } else {
        std::mt19937_64 rng(mat_seed);
        int m = mat_n / 2;
        if (m >= 1) {
          masa::mm::Mat p = masa::mm::Mat::Zero(mat_n, mat_n);
          masa::mm::Mat q = masa::mm::Mat::Zero(mat_n, mat_n);
          for (int i = 0; i < m; ++i) {
            p(i, i) = 1.0;
            q(m + i, m + i) = 1.0;
          }
          masa::mm::Mat v = masa::mm::Mat::Zero(mat_n, mat_n);
          for (int i = 0; i < m; ++i) v(i, m + i) = 1.0;
          masa::mm::Mat w = masa::mm::Mat::Identity(mat_n, mat_n);
          w.topLeftCorner(m, m) = masa::mm::random_unitary(m, rng);
          reps.push_back(masa::mm::check_thm71_chain(scene, p, q, w * v, mat_seed));
          reps.push_back(masa::mm::delta_estimate(scene, w * v, mat_seed));
        }
        std::vector<masa::mm::Mat> diag_gens;
        for (int i = 0; i < mat_n; ++i) {
          masa::mm::Mat e = masa::mm::Mat::Zero(mat_n, mat_n);
          e(i, i) = 1.0;
          diag_gens.push_back(e);
        }
        masa::mm::Mat u = masa::mm::random_unitary(mat_n, rng);
        std::vector<masa::mm::Mat> conj_gens;
        for (const auto& e : diag_gens) conj_gens.push_back(u * e * u.adjoint());
        reps.push_back(masa::mm::check_lemma53(scene, diag_gens, conj_gens, mat_seed));
      }
      json out = json::array();
      bool pass = true;
      for (const auto& r : reps) {
        out.push_back(r.to_json());
        pass = pass && r.pass;
      }
      emit({{"schema_version", kSchemaVersion}, {"seed", mat_seed},
            {"suite", mat_suite}, {"n", mat_n}, {"checks", out}, {"pass", pass}},
           "");
      return pass ? 0 : 1;
    } else if (cmd_verify->parsed()) {
      bool randomized = suite != "affine";
      if (randomized && !seed_given) {
        std::cerr << "error: --seed is required for randomized suites\n";
        return 2;
      }
      cfg.rank = rank;
      auto res = masa::run_suite(suite, cfg);
      emit_suite(res, cfg, format, out_path);
      return res.pass ? 0 : 1;
    }
  } catch (const masa::parse_error& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
