// Command-line front end: grading-group arithmetic, Hom dimensions, canonical
// algebras, 3-preprojective checks, QP mutation, exchange graphs, surveys and
// the verification harness. Exit codes: 0 pass, 1 fail, 2 indeterminate.
#include <CLI11.hpp>

#include <iostream>

#include "wpline/catalog.hpp"
#include "wpline/exchange.hpp"
#include "wpline/io.hpp"
#include "wpline/survey.hpp"
#include "wpline/threeprep.hpp"
#include "wpline/verify.hpp"

using namespace wpline;

namespace {

AlgebraPresentation load_algebra(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) return catalog_get(arg.substr(8)).algebra;
  return algebra_from_json(load_json_file(arg));
}

GradedQP load_qp(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0)
    return extended_qp(catalog_get(arg.substr(8)).algebra).qp;
  return qp_from_json(load_json_file(arg));
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(out_path, j);
}

std::string tri_str(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    default: return "indeterminate";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted projective lines, quivers with potential and "
               "3-preprojective algebras"};
  app.require_subcommand(1);
  int cap = 32;
  unsigned seed = 20240401;
  app.add_option("--cap", cap, "rewriting length cap")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();

  // lgroup <weights> <op> [args...]
  auto* lg = app.add_subcommand("lgroup", "arithmetic in the grading group");
  std::string lg_w, lg_op;
  std::vector<std::string> lg_args;
  lg->add_option("weights", lg_w)->required();
  lg->add_option("op", lg_op,
                 "zero|c|x<i>|omega|order-omega|chi|delta|order|add|neg|leq|nonneg")
      ->required();
  lg->add_option("args", lg_args);

  auto* hd = app.add_subcommand("homdim", "Hom and Ext dimensions between symbols");
  std::string hd_w, hd_x, hd_y;
  bool hd_ext = false, hd_cluster = false;
  hd->add_option("weights", hd_w)->required();
  hd->add_option("X", hd_x)->required();
  hd->add_option("Y", hd_y)->required();
  hd->add_flag("--ext", hd_ext, "first extension group instead of Hom");
  hd->add_flag("--cluster", hd_cluster, "orbit-category Hom");

  auto* can = app.add_subcommand("canonical", "canonical algebra of a weight type");
  std::string can_w, can_out;
  std::string can_lambda;
  can->add_option("weights", can_w)->required();
  can->add_option("--lambda4", can_lambda, "parameter of the fourth point");
  can->add_option("-o,--out", can_out, "output file (stdout otherwise)");

  auto* p3 = app.add_subcommand("pi3", "3-preprojective algebra of a presentation");
  std::string p3_alg, p3_out;
  p3->add_option("algebra", p3_alg, "algebra file or catalog:<name>")->required();
  p3->add_option("-o,--out", p3_out, "write the extended QP here");

  auto* rf = app.add_subcommand("check2rf", "2-representation-finiteness");
  std::string rf_alg;
  rf->add_option("algebra", rf_alg)->required();

  auto* apr = app.add_subcommand("2apr", "2-APR reflection at a sink or source");
  std::string apr_alg, apr_vertex, apr_out;
  bool apr_left = false, apr_right = false;
  apr->add_option("algebra", apr_alg)->required();
  apr->add_option("-k,--vertex", apr_vertex, "vertex name")->required();
  apr->add_flag("--left", apr_left);
  apr->add_flag("--right", apr_right);
  apr->add_option("-o,--out", apr_out);

  auto* mut = app.add_subcommand("mutate", "graded QP mutation");
  std::string mut_qp, mut_vertex, mut_out, mut_orbit;
  bool mut_left = false, mut_right = false;
  mut->add_option("qp", mut_qp, "QP file or catalog:<name>")->required();
  mut->add_option("-k,--vertex", mut_vertex);
  mut->add_option("--orbit", mut_orbit, "comma-separated vertex names");
  mut->add_flag("--left", mut_left);
  mut->add_flag("--right", mut_right);
  mut->add_option("-o,--out", mut_out);

  auto* exch = app.add_subcommand("exchange", "closure under orbit mutation");
  std::string ex_qp, ex_out, ex_dot;
  int ex_max = 500;
  bool ex_plain = false;
  exch->add_option("qp", ex_qp)->required();
  exch->add_option("--max-nodes", ex_max)->capture_default_str();
  exch->add_flag("--plain-orbits", ex_plain, "mutate at single vertices only");
  exch->add_option("-o,--out", ex_out);
  exch->add_option("--dot", ex_dot, "also write a DOT file");

  auto* sv = app.add_subcommand("survey", "tilting sums in a twist window");
  std::string sv_w, sv_window, sv_out;
  bool sv_tau2 = false;
  sv->add_option("weights", sv_w)->required();
  sv->add_option("--window", sv_window, "lo..hi as m|m1,..,mt..m|m1,..,mt")->required();
  sv->add_flag("--tau2", sv_tau2, "keep tau^2-stable sums only");
  sv->add_option("-o,--out", sv_out);

  auto* ver = app.add_subcommand("verify", "replay the verification suites");
  std::string ver_suite = "all";
  ver->add_option("suite", ver_suite, "suite name or 'all'")->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "list built-in algebras");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lg) {
      Weights w = Weights::parse(lg_w);
      auto arg = [&](size_t i) {
        if (i >= lg_args.size()) throw std::domain_error("missing argument");
        return lv_parse(w, lg_args[i]);
      };
      if (lg_op == "zero") std::cout << lv_str(lv_zero(w)) << "\n";
      else if (lg_op == "c") std::cout << lv_str(lv_c(w)) << "\n";
      else if (lg_op == "omega") std::cout << lv_str(lv_omega(w)) << "\n";
      else if (lg_op == "chi") std::cout << rat_str(euler_char(w)) << "\n";
      else if (lg_op == "order-omega") {
        auto ord = lv_order(w, lv_omega(w));
        std::cout << (ord ? std::to_string(*ord) : std::string("infinite")) << "\n";
      } else if (lg_op == "delta") std::cout << lv_delta(w, arg(0)) << "\n";
      else if (lg_op == "order") {
        auto ord = lv_order(w, arg(0));
        std::cout << (ord ? std::to_string(*ord) : std::string("infinite")) << "\n";
      } else if (lg_op == "add") std::cout << lv_str(lv_add(w, arg(0), arg(1))) << "\n";
      else if (lg_op == "neg") std::cout << lv_str(lv_neg(w, arg(0))) << "\n";
      else if (lg_op == "leq") std::cout << (lv_leq(w, arg(0), arg(1)) ? "true" : "false") << "\n";
      else if (lg_op == "nonneg") std::cout << (lv_is_nonneg(arg(0)) ? "true" : "false") << "\n";
      else if (lg_op.rfind('x', 0) == 0)
        std::cout << lv_str(lv_x(w, std::stoi(lg_op.substr(1)) - 1)) << "\n";
      else throw std::domain_error("unknown lgroup operation: " + lg_op);
      return 0;
    }
    if (*hd) {
      Weights w = Weights::parse(hd_w);
      SheafSymbol X = symbol_parse(w, hd_x), Y = symbol_parse(w, hd_y);
      if (hd_cluster && !is_tubular(w))
        std::cerr << "warning: weight type is not tubular; orbit-category facts unused\n";
      long d = hd_cluster ? cluster_hom_dim(w, X, Y)
                          : (hd_ext ? ext1_dim(w, X, Y) : hom_dim(w, X, Y));
      std::cout << d << "\n";
      return 0;
    }
    if (*can) {
      Weights w = can_lambda.empty()
                      ? Weights::parse(can_w)
                      : Weights::parse(can_w + ";lambda4=" + can_lambda);
      emit(algebra_to_json(canonical_algebra(w)), can_out);
      return 0;
    }
    if (*p3) {
      AlgebraPresentation A = load_algebra(p3_alg);
      ExtendedQP E = extended_qp(A, cap);
      if (!p3_out.empty()) save_json_file(p3_out, qp_to_json(E.qp));
      auto out = jacobian(E.qp, cap);
      if (auto* g = std::get_if<GradedFD>(&out)) {
        std::cout << "finite dimensional, dim " << g->fd.total_dim << "\n";
        for (auto& [d, n] : g->dim_by_degree)
          std::cout << "  degree " << d << ": " << n << "\n";
        std::cout << "selfinjective: " << (is_selfinjective(g->fd) ? "yes" : "no") << "\n";
        return 0;
      }
      if (std::holds_alternative<InfiniteWitness>(out)) {
        std::cout << "infinite dimensional\n";
        return 0;
      }
      std::cout << "indeterminate at cap " << cap << "\n";
      return 2;
    }
    if (*rf) {
      TwoRFResult r = is_2rf(load_algebra(rf_alg), cap);
      std::cout << tri_str(r.value) << ": " << r.reason << "\n";
      if (r.pi3_dim) std::cout << "dim of the 3-preprojective algebra: " << *r.pi3_dim << "\n";
      if (r.nakayama) {
        std::cout << "nakayama permutation:";
        for (int v : *r.nakayama) std::cout << " " << v;
        std::cout << "\n";
      }
      if (r.value == TriState::True) {
        bool hom = is_2homogeneous(load_algebra(rf_alg), cap);
        std::cout << "2-homogeneous: " << (hom ? "yes" : "no") << "\n";
      }
      return r.value == TriState::True ? 0 : (r.value == TriState::False ? 1 : 2);
    }
    if (*apr) {
      AlgebraPresentation A = load_algebra(apr_alg);
      int k = A.quiver.vertex_id(apr_vertex);
      if (k < 0) throw std::domain_error("unknown vertex: " + apr_vertex);
      MutationSide side = apr_right ? MutationSide::Right : MutationSide::Left;
      (void)apr_left;
      TwoAprResult r = two_apr_tilt(A, k, side, cap);
      std::cout << "input 2-RF: " << tri_str(r.input_2rf)
                << ", output 2-RF: " << tri_str(r.output_2rf) << "\n";
      emit(algebra_to_json(r.algebra), apr_out);
      return 0;
    }
    if (*mut) {
      GradedQP P = load_qp(mut_qp);
      MutationSide side = mut_right ? MutationSide::Right : MutationSide::Left;
      (void)mut_left;
      GradedQP result = P;
      if (!mut_orbit.empty()) {
        std::vector<int> orbit;
        std::stringstream ss(mut_orbit);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          int v = P.quiver.vertex_id(tok);
          if (v < 0) throw std::domain_error("unknown vertex: " + tok);
          orbit.push_back(v);
        }
        result = mutate_orbit(P, orbit, side);
      } else {
        int k = P.quiver.vertex_id(mut_vertex);
        if (k < 0) throw std::domain_error("unknown vertex: " + mut_vertex);
        result = mutate(P, k, side);
      }
      emit(qp_to_json(result), mut_out);
      return 0;
    }
    if (*exch) {
      GradedQP P = load_qp(ex_qp);
      ExchangeOptions opt;
      opt.max_nodes = ex_max;
      opt.cap = cap;
      opt.nakayama_orbits = !ex_plain;
      ExchangeResult r = explore_exchange(P, opt);
      for (const auto& wmsg : r.warnings) std::cerr << "warning: " << wmsg << "\n";
      emit(exchange_to_json(r, cap), ex_out);
      if (!ex_dot.empty()) {
        std::ofstream dot(ex_dot);
        dot << exchange_to_dot(r);
      }
      return r.truncated ? 2 : 0;
    }
    if (*sv) {
      Weights w = Weights::parse(sv_w);
      auto sep = sv_window.find("..");
      if (sep == std::string::npos)
        throw std::domain_error("window must be lo..hi in twist text form");
      LVec lo = lv_parse(w, sv_window.substr(0, sep));
      LVec hi = lv_parse(w, sv_window.substr(sep + 2));
      SurveyOptions opt;
      opt.require_tau2 = sv_tau2;
      opt.cap = cap;
      SurveyResult r = survey_tilting(w, lo, hi, opt);
      emit(survey_to_json(w, r, cap), sv_out);
      return 0;
    }
    if (*ver) {
      auto results = run_verify(ver_suite, cap, seed);
      bool fail = false, indet = false;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : (r.indeterminate ? "INDET" : "FAIL")) << "  ["
                  << r.suite << "] " << r.name;
        if (!r.detail.empty()) std::cout << "  -- " << r.detail;
        std::cout << "\n";
        if (!r.pass && r.indeterminate) indet = true;
        if (!r.pass && !r.indeterminate) fail = true;
      }
      return fail ? 1 : (indet ? 2 : 0);
    }
    if (*cat) {
      for (const auto& e : catalog())
        std::cout << e.name << ": " << e.provenance << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
