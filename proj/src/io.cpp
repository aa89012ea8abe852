#include "wpline/io.hpp"

#include <fstream>
#include <sstream>

namespace wpline {

using nlohmann::json;

json report_metadata(int cap) {
  json j;
  j["tool"] = kToolVersion;
  j["monomial_order"] = "length-lex over the declared arrow order, complete path algebra";
  j["cap"] = cap;
  return j;
}

json algebra_to_json(const AlgebraPresentation& a) {
  json j;
  j["vertices"] = a.quiver.vertices;
  j["arrows"] = json::array();
  for (const auto& ar : a.quiver.arrows)
    j["arrows"].push_back({{"name", ar.name},
                           {"from", a.quiver.vertices[ar.src]},
                           {"to", a.quiver.vertices[ar.dst]}});
  j["relations"] = json::array();
  for (const auto& r : a.relations) {
    json rel = json::array();
    for (const auto& [p, c] : r.terms) {
      json term;
      term["coeff"] = rat_str(c);
      term["path"] = json::array();
      for (int ai : p.as) term["path"].push_back(a.quiver.arrows[ai].name);
      rel.push_back(std::move(term));
    }
    j["relations"].push_back(std::move(rel));
  }
  return j;
}

AlgebraPresentation algebra_from_json(const json& j) {
  AlgebraPresentation a;
  for (const auto& v : j.at("vertices")) a.quiver.add_vertex(v.get<std::string>());
  for (const auto& ar : j.at("arrows")) {
    int s = a.quiver.vertex_id(ar.at("from").get<std::string>());
    int d = a.quiver.vertex_id(ar.at("to").get<std::string>());
    if (s < 0 || d < 0) throw std::domain_error("arrow endpoint is not a vertex");
    a.quiver.add_arrow(ar.at("name").get<std::string>(), s, d);
  }
  for (const auto& rel : j.at("relations")) {
    PathPoly r;
    for (const auto& term : rel) {
      Path p;
      for (const auto& name : term.at("path")) {
        int ai = a.quiver.arrow_id(name.get<std::string>());
        if (ai < 0) throw std::domain_error("unknown arrow in relation");
        p.as.push_back(ai);
      }
      if (p.as.empty()) throw std::domain_error("empty relation path");
      p.src = a.quiver.arrows[p.as.front()].src;
      r.add_term(p, rat_parse(term.at("coeff").get<std::string>()));
    }
    a.relations.push_back(std::move(r));
  }
  a.validate();
  return a;
}

json qp_to_json(const GradedQP& p) {
  json j;
  j["vertices"] = p.quiver.vertices;
  j["arrows"] = json::array();
  for (size_t i = 0; i < p.quiver.arrows.size(); ++i) {
    const auto& ar = p.quiver.arrows[i];
    j["arrows"].push_back({{"name", ar.name},
                           {"from", p.quiver.vertices[ar.src]},
                           {"to", p.quiver.vertices[ar.dst]},
                           {"degree", p.degree[i]}});
  }
  j["potential"] = json::array();
  for (const auto& [path, c] : p.potential.terms) {
    json term;
    term["coeff"] = rat_str(c);
    term["cycle"] = json::array();
    for (int ai : path.as) term["cycle"].push_back(p.quiver.arrows[ai].name);
    j["potential"].push_back(std::move(term));
  }
  j["dW"] = p.potential_degree;
  return j;
}

GradedQP qp_from_json(const json& j) {
  GradedQP p;
  for (const auto& v : j.at("vertices")) p.quiver.add_vertex(v.get<std::string>());
  for (const auto& ar : j.at("arrows")) {
    int s = p.quiver.vertex_id(ar.at("from").get<std::string>());
    int d = p.quiver.vertex_id(ar.at("to").get<std::string>());
    if (s < 0 || d < 0) throw std::domain_error("arrow endpoint is not a vertex");
    p.quiver.add_arrow(ar.at("name").get<std::string>(), s, d);
    p.degree.push_back(ar.at("degree").get<int>());
  }
  for (const auto& term : j.at("potential")) {
    Path path;
    for (const auto& name : term.at("cycle")) {
      int ai = p.quiver.arrow_id(name.get<std::string>());
      if (ai < 0) throw std::domain_error("unknown arrow in potential");
      path.as.push_back(ai);
    }
    if (path.as.empty()) throw std::domain_error("empty potential cycle");
    path.src = p.quiver.arrows[path.as.front()].src;
    p.potential.add_term(path, rat_parse(term.at("coeff").get<std::string>()));
  }
  p.potential_degree = j.at("dW").get<int>();
  p.potential = potential_normalize(p.quiver, p.potential);
  p.validate(/*allow_two_cycles=*/true);
  return p;
}

json survey_to_json(const Weights& w, const SurveyResult& r, int cap) {
  json j;
  j["meta"] = report_metadata(cap);
  j["weights"] = w.str();
  j["window"] = {{"lo", lv_str(r.lo)}, {"hi", lv_str(r.hi)}};
  j["require_tau2"] = r.require_tau2;
  j["sums_found"] = r.sums_found;
  j["entries"] = json::array();
  for (const auto& e : r.entries) {
    json je;
    json sum = json::array();
    for (const auto& s : e.representative.items) sum.push_back(symbol_str(s));
    je["summands"] = std::move(sum);
    je["class_size"] = e.members.size();
    je["q_per_tube"] = e.q_per_tube;
    je["tau2_stable"] = e.tau2_stable;
    je["end_algebra"] = algebra_to_json(e.end_alg);
    j["entries"].push_back(std::move(je));
  }
  return j;
}

json exchange_to_json(const ExchangeResult& r, int cap) {
  json j;
  j["meta"] = report_metadata(cap);
  j["truncated"] = r.truncated;
  j["warnings"] = r.warnings;
  j["nodes"] = json::array();
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    const auto& n = r.nodes[i];
    json jn;
    jn["id"] = i;
    jn["qp"] = qp_to_json(n.qp);
    jn["jacobian_finite"] = n.jacobian_finite;
    jn["selfinjective"] = n.selfinjective;
    jn["total_dim"] = n.total_dim;
    json dims = json::object();
    for (auto& [d, k] : n.dims) dims[std::to_string(d)] = k;
    jn["dims_by_degree"] = std::move(dims);
    jn["orbits"] = n.orbits;
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = json::array();
  for (const auto& e : r.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"orbit", e.orbit}});
  return j;
}

std::string exchange_to_dot(const ExchangeResult& r) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    const auto& n = r.nodes[i];
    os << "  n" << i << " [label=\"#" << i << " dim=" << n.total_dim
       << (n.selfinjective ? " si" : "") << "\"];\n";
  }
  for (const auto& e : r.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"";
    for (size_t k = 0; k < e.orbit.size(); ++k) {
      if (k) os << ',';
      os << e.orbit[k];
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace wpline
