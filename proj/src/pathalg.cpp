#include "wpline/pathalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wpline {

// ---- quiver -------------------------------------------------------------------

int Quiver::add_vertex(const std::string& name) {
  vertices.push_back(name);
  return static_cast<int>(vertices.size()) - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int dst) {
  if (src < 0 || src >= static_cast<int>(vertices.size()) || dst < 0 ||
      dst >= static_cast<int>(vertices.size()))
    throw std::domain_error("arrow endpoints out of range");
  if (arrow_id(name) >= 0) throw std::domain_error("duplicate arrow name: " + name);
  arrows.push_back({name, src, dst});
  return static_cast<int>(arrows.size()) - 1;
}

int Quiver::vertex_id(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_id(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Quiver::has_loop() const {
  for (const auto& a : arrows)
    if (a.src == a.dst) return true;
  return false;
}

bool Quiver::has_two_cycle() const {
  for (const auto& a : arrows)
    for (const auto& b : arrows)
      if (a.src == b.dst && a.dst == b.src && a.src != a.dst) return true;
  return false;
}

int Quiver::arrows_between(int src, int dst) const {
  int n = 0;
  for (const auto& a : arrows)
    if (a.src == src && a.dst == dst) ++n;
  return n;
}

// ---- paths --------------------------------------------------------------------

int path_dst(const Quiver& q, const Path& p) {
  if (p.as.empty()) return p.src;
  return q.arrows[p.as.back()].dst;
}

bool path_composable(const Quiver& q, const Path& a, const Path& b) {
  return path_dst(q, a) == b.src;
}

Path path_concat(const Quiver& q, const Path& a, const Path& b) {
  if (!path_composable(q, a, b)) throw std::domain_error("paths not composable");
  Path r = a;
  r.as.insert(r.as.end(), b.as.begin(), b.as.end());
  return r;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.as.empty()) return "e_" + q.vertices[p.src];
  std::string s;
  for (size_t i = 0; i < p.as.size(); ++i) {
    if (i) s += ".";
    s += q.arrows[p.as[i]].name;
  }
  return s;
}

static Path make_path(const Quiver& q, const std::vector<int>& arrows_in, int src_if_empty) {
  Path p;
  if (arrows_in.empty()) {
    p.src = src_if_empty;
    return p;
  }
  p.src = q.arrows[arrows_in.front()].src;
  p.as = arrows_in;
  return p;
}

// ---- path polynomials -----------------------------------------------------------

void PathPoly::add_term(const Path& p, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(p);
  if (it == terms.end()) {
    terms.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

PathPoly pp_add(const PathPoly& a, const PathPoly& b) {
  PathPoly r = a;
  for (const auto& [p, c] : b.terms) r.add_term(p, c);
  return r;
}

PathPoly pp_scale(const PathPoly& a, const Rat& c) {
  PathPoly r;
  if (c == 0) return r;
  for (const auto& [p, k] : a.terms) r.terms[p] = k * c;
  return r;
}

PathPoly pp_mul(const Quiver& q, const PathPoly& a, const PathPoly& b) {
  PathPoly r;
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms)
      if (path_composable(q, pa, pb)) r.add_term(path_concat(q, pa, pb), ca * cb);
  return r;
}

std::string pp_str(const Quiver& q, const PathPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : a.terms) {
    if (!first) os << " + ";
    if (c != 1) os << rat_str(c) << "*";
    os << path_str(q, p);
    first = false;
  }
  return os.str();
}

void AlgebraPresentation::validate() const {
  for (const auto& r : relations) {
    if (r.is_zero()) throw std::domain_error("zero relation in presentation");
    int src = -1, dst = -1;
    for (const auto& [p, c] : r.terms) {
      (void)c;
      if (p.length() < 2) throw std::domain_error("relation term of length < 2");
      if (src < 0) {
        src = p.src;
        dst = path_dst(quiver, p);
      } else if (p.src != src || path_dst(quiver, p) != dst) {
        throw std::domain_error("relation terms are not parallel");
      }
    }
  }
}

// ---- rewriting ------------------------------------------------------------------

std::pair<int, int> RewriteSystem::find_redex(const Path& w) const {
  for (size_t pos = 0; pos < w.as.size(); ++pos) {
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
      const auto& lead = rules_[ri].lead.as;
      if (lead.size() > w.as.size() - pos) continue;
      bool match = std::equal(lead.begin(), lead.end(), w.as.begin() + pos);
      if (match) return {static_cast<int>(ri), static_cast<int>(pos)};
    }
  }
  return {-1, -1};
}

PathPoly RewriteSystem::normal_form(const Path& p, bool* truncated) const {
  PathPoly start;
  start.add_term(p, Rat(1));
  return normal_form(std::move(start), truncated);
}

PathPoly RewriteSystem::normal_form(PathPoly p, bool* truncated) const {
  PathPoly done;
  while (!p.terms.empty()) {
    // take the smallest pending term; replacements are strictly larger
    auto it = p.terms.begin();
    Path w = it->first;
    Rat c = it->second;
    p.terms.erase(it);
    if (static_cast<int>(w.length()) > cap_) {
      if (truncated) *truncated = true;
      continue;
    }
    auto [ri, pos] = find_redex(w);
    if (ri < 0) {
      done.add_term(w, c);
      continue;
    }
    const RewriteRule& rule = rules_[ri];
    std::vector<int> pre(w.as.begin(), w.as.begin() + pos);
    std::vector<int> post(w.as.begin() + pos + rule.lead.as.size(), w.as.end());
    Path p_pre = make_path(q_, pre, w.src);
    for (const auto& [t, tc] : rule.tail.terms) {
      Path combined = p_pre;
      combined.as.insert(combined.as.end(), t.as.begin(), t.as.end());
      combined.as.insert(combined.as.end(), post.begin(), post.end());
      if (combined.as.empty()) combined.src = w.src;
      p.add_term(combined, c * tc);
    }
  }
  return done;
}

namespace {

// lead = smallest term, made monic; tail = the larger terms it rewrites to
std::optional<RewriteRule> make_rule(const PathPoly& nf) {
  if (nf.is_zero()) return std::nullopt;
  auto it = nf.terms.begin();
  RewriteRule r;
  r.lead = it->first;
  Rat c = it->second;
  for (auto jt = std::next(it); jt != nf.terms.end(); ++jt)
    r.tail.add_term(jt->first, -jt->second / c);
  return r;
}

bool contains_factor(const std::vector<int>& w, const std::vector<int>& f) {
  if (f.size() > w.size()) return false;
  for (size_t pos = 0; pos + f.size() <= w.size(); ++pos)
    if (std::equal(f.begin(), f.end(), w.begin() + pos)) return true;
  return false;
}

}  // namespace

Completion groebner_complete(const AlgebraPresentation& a, int cap) {
  a.validate();
  return groebner_complete(a.quiver, a.relations, cap);
}

Completion groebner_complete(const Quiver& q, const std::vector<PathPoly>& relations, int cap) {
  Completion comp{RewriteSystem(q, cap)};
  comp.cap = cap;

  std::deque<PathPoly> pending(relations.begin(), relations.end());
  std::vector<RewriteRule> rules;
  long inserted = 0;

  auto rebuild = [&]() {
    comp.system = RewriteSystem(q, cap);
    for (auto& r : rules) comp.system.add_rule(r);
  };

  while (!pending.empty()) {
    PathPoly p = pending.front();
    pending.pop_front();
    rebuild();
    bool drop = false;
    PathPoly nf = comp.system.normal_form(std::move(p), &drop);
    if (drop) comp.truncated = true;
    auto rule = make_rule(nf);
    if (!rule) continue;
    if (++inserted > 20000) throw std::runtime_error("completion budget exceeded");
    // drop existing rules whose lead now reduces; requeue them as polynomials
    std::vector<RewriteRule> kept;
    for (auto& r : rules) {
      if (contains_factor(r.lead.as, rule->lead.as)) {
        PathPoly back;
        back.add_term(r.lead, Rat(1));
        back = pp_add(back, pp_scale(r.tail, Rat(-1)));
        pending.push_back(std::move(back));
      } else {
        kept.push_back(std::move(r));
      }
    }
    rules = std::move(kept);

    // queue all critical pairs with the new rule (including itself)
    for (size_t i = 0; i <= rules.size(); ++i) {
      const RewriteRule& other = (i == rules.size()) ? *rule : rules[i];
      for (int fst = 0; fst < 2; ++fst) {
        const RewriteRule& r1 = fst ? other : *rule;
        const RewriteRule& r2 = fst ? *rule : other;
        const auto& u = r1.lead.as;
        const auto& v = r2.lead.as;
        // proper overlaps: a suffix of u equals a prefix of v
        size_t kmax = std::min(u.size(), v.size()) - 1;
        for (size_t k = 1; k <= kmax; ++k) {
          if (!std::equal(u.end() - k, u.end(), v.begin())) continue;
          std::vector<int> prefix(u.begin(), u.end() - k);
          std::vector<int> suffix(v.begin() + k, v.end());
          PathPoly left = r1.tail;  // u -> tail1, then append suffix
          PathPoly s1;
          for (const auto& [t, c] : left.terms) {
            Path ext = t;
            ext.as.insert(ext.as.end(), suffix.begin(), suffix.end());
            if (ext.as.empty()) ext.src = t.src;
            s1.add_term(ext, c);
          }
          PathPoly s2;
          for (const auto& [t, c] : r2.tail.terms) {
            Path ext = make_path(q, prefix, r1.lead.src);
            ext.as.insert(ext.as.end(), t.as.begin(), t.as.end());
            if (ext.as.empty()) ext.src = r1.lead.src;
            s2.add_term(ext, c);
          }
          pending.push_back(pp_add(s1, pp_scale(s2, Rat(-1))));
        }
      }
    }
    rules.push_back(std::move(*rule));
  }
  rebuild();
  comp.confluent = true;
  return comp;
}

// ---- normal-word automaton and dimension ----------------------------------------

namespace {

struct Automaton {
  // state 0..V-1: roots per vertex; then prefix states
  std::vector<std::vector<int>> prefixes;       // non-root state words
  std::vector<int> state_vertex;                // current end vertex per state
  std::map<std::vector<int>, int> prefix_index;
  // trans[state][arrow] = next state or -1 (dead)
  std::vector<std::vector<int>> trans;
};

Automaton build_automaton(const Quiver& q, const std::vector<RewriteRule>& rules) {
  Automaton a;
  std::set<std::vector<int>> leads;
  for (const auto& r : rules) leads.insert(r.lead.as);

  int V = static_cast<int>(q.vertices.size());
  std::set<std::vector<int>> prefix_set;
  for (const auto& l : leads)
    for (size_t k = 1; k < l.size(); ++k) prefix_set.insert(std::vector<int>(l.begin(), l.begin() + k));

  a.state_vertex.resize(V);
  for (int v = 0; v < V; ++v) a.state_vertex[v] = v;
  for (const auto& p : prefix_set) {
    a.prefix_index[p] = V + static_cast<int>(a.prefixes.size());
    a.prefixes.push_back(p);
    a.state_vertex.push_back(q.arrows[p.back()].dst);
  }
  int S = V + static_cast<int>(a.prefixes.size());
  a.trans.assign(S, std::vector<int>(q.arrows.size(), -1));

  auto is_lead_suffix = [&](const std::vector<int>& w) {
    for (const auto& l : leads) {
      if (l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.end() - l.size())) return true;
    }
    return false;
  };
  auto longest_prefix_suffix = [&](const std::vector<int>& w) -> int {
    // longest proper suffix of w that is in the prefix set
    size_t maxlen = w.size();
    for (size_t len = std::min(maxlen, prefix_set.empty() ? size_t(0) : maxlen); len >= 1; --len) {
      std::vector<int> suf(w.end() - len, w.end());
      auto it = a.prefix_index.find(suf);
      if (it != a.prefix_index.end()) return it->second;
    }
    return -2;  // root
  };

  for (int s = 0; s < S; ++s) {
    std::vector<int> w = (s < V) ? std::vector<int>{} : a.prefixes[s - V];
    int at = a.state_vertex[s];
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      if (q.arrows[ai].src != at) continue;
      std::vector<int> u = w;
      u.push_back(static_cast<int>(ai));
      if (is_lead_suffix(u)) continue;  // dead
      int nxt = longest_prefix_suffix(u);
      a.trans[s][ai] = (nxt == -2) ? q.arrows[ai].dst : nxt;
    }
  }
  return a;
}

}  // namespace

FdOutcome fd_quotient(const AlgebraPresentation& a, int cap, long word_limit) {
  a.validate();
  return fd_quotient(a.quiver, a.relations, cap, word_limit);
}

FdOutcome fd_quotient(const Quiver& q, const std::vector<PathPoly>& relations, int cap,
                      long word_limit) {
  Completion comp = groebner_complete(q, relations, cap);

  Automaton aut = build_automaton(q, comp.system.rules());
  int V = static_cast<int>(q.vertices.size());
  int S = static_cast<int>(aut.trans.size());

  // reachable states from the roots
  std::vector<bool> reach(S, false);
  std::deque<int> work;
  for (int v = 0; v < V; ++v) {
    reach[v] = true;
    work.push_back(v);
  }
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      int t = aut.trans[s][ai];
      if (t >= 0 && !reach[t]) {
        reach[t] = true;
        work.push_back(t);
      }
    }
  }

  // cycle detection among reachable states (any cycle pumps normal words)
  std::vector<int> color(S, 0);
  std::vector<int> parent_arrow(S, -1), parent_state(S, -1);
  std::vector<int> cycle;
  auto dfs = [&](auto&& self, int s) -> bool {
    color[s] = 1;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      int t = aut.trans[s][ai];
      if (t < 0 || !reach[t]) continue;
      if (color[t] == 0) {
        parent_state[t] = s;
        parent_arrow[t] = static_cast<int>(ai);
        if (self(self, t)) return true;
      } else if (color[t] == 1) {
        // back edge: roll the arrow word of the cycle
        cycle.push_back(static_cast<int>(ai));
        int cur = s;
        while (cur != t && parent_state[cur] >= 0) {
          cycle.push_back(parent_arrow[cur]);
          cur = parent_state[cur];
        }
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
    }
    color[s] = 2;
    return false;
  };
  for (int v = 0; v < V; ++v)
    if (color[v] == 0 && dfs(dfs, v)) {
      // with truncation the rule set is only approximate, so a cycle is
      // conclusive only when the completion ran exactly
      if (comp.truncated) return CapInfo{cap};
      return InfiniteWitness{cycle};
    }

  // enumerate all normal words
  FDAlgebraData fd;
  fd.quiver = q;
  fd.sys = comp;
  std::vector<Path> words;
  std::vector<int> stack_arrows;
  long count = 0;
  auto enumerate = [&](auto&& self, int s, int start_vertex) -> void {
    if (++count > word_limit) throw std::runtime_error("normal-word budget exceeded");
    Path p;
    p.src = start_vertex;
    p.as = stack_arrows;
    words.push_back(p);
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      int t = aut.trans[s][ai];
      if (t < 0) continue;
      stack_arrows.push_back(static_cast<int>(ai));
      self(self, t, start_vertex);
      stack_arrows.pop_back();
    }
  };
  for (int v = 0; v < V; ++v) enumerate(enumerate, v, v);

  std::sort(words.begin(), words.end(), PathOrder{});
  if (comp.truncated) {
    // exactness needs head room: every word of length cap must die below cap
    size_t maxlen = 0;
    for (const auto& p : words) maxlen = std::max(maxlen, p.length());
    if (static_cast<int>(maxlen) + 1 >= cap) return CapInfo{cap};
  }
  fd.basis = std::move(words);
  for (size_t i = 0; i < fd.basis.size(); ++i) fd.index[fd.basis[i]] = static_cast<int>(i);
  fd.cartan.assign(V, std::vector<long>(V, 0));
  for (const auto& p : fd.basis) ++fd.cartan[p.src][path_dst(q, p)];
  fd.total_dim = static_cast<long>(fd.basis.size());
  return fd;
}

std::map<int, Rat> FDAlgebraData::expand(const PathPoly& p) const {
  PathPoly nf = sys.system.normal_form(p);
  std::map<int, Rat> out;
  for (const auto& [w, c] : nf.terms) {
    auto it = index.find(w);
    if (it == index.end()) throw std::logic_error("normal word missing from basis");
    out[it->second] += c;
  }
  return out;
}

std::map<int, Rat> FDAlgebraData::mult(int bi, int bj) const {
  const Path& a = basis[bi];
  const Path& b = basis[bj];
  if (!path_composable(quiver, a, b)) return {};
  PathPoly prod;
  prod.add_term(path_concat(quiver, a, b), Rat(1));
  return expand(prod);
}

// ---- right modules ---------------------------------------------------------------

long RightModule::total() const {
  long t = 0;
  for (int d : dim) t += d;
  return t;
}

namespace {

std::vector<std::vector<Path>> words_from(const FDAlgebraData& A, int vertex) {
  int V = static_cast<int>(A.quiver.vertices.size());
  std::vector<std::vector<Path>> by_dst(V);
  for (const auto& p : A.basis)
    if (p.src == vertex) by_dst[path_dst(A.quiver, p)].push_back(p);
  return by_dst;
}

std::vector<std::vector<Path>> words_into(const FDAlgebraData& A, int vertex) {
  int V = static_cast<int>(A.quiver.vertices.size());
  std::vector<std::vector<Path>> by_src(V);
  for (const auto& p : A.basis)
    if (path_dst(A.quiver, p) == vertex) by_src[p.src].push_back(p);
  return by_src;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

// coordinates of v in the row space spanned by B (rows independent)
QVec express_in_rows(const QMat& B, const QVec& v) {
  QMat cols;  // transpose of B
  if (!B.empty()) {
    cols.assign(B[0].size(), QVec(B.size(), Rat(0)));
    for (size_t i = 0; i < B.size(); ++i)
      for (size_t j = 0; j < B[i].size(); ++j) cols[j][i] = B[i][j];
  }
  QVec x;
  if (!solve_linear(cols, v, x)) throw std::logic_error("vector not in submodule span");
  return x;
}

}  // namespace

RightModule projective_module(const FDAlgebraData& A, int vertex) {
  const Quiver& q = A.quiver;
  int V = static_cast<int>(q.vertices.size());
  auto words = words_from(A, vertex);
  RightModule M;
  M.A = &A;
  M.dim.resize(V);
  std::vector<std::map<Path, int, PathOrder>> idx(V);
  for (int v = 0; v < V; ++v) {
    M.dim[v] = static_cast<int>(words[v].size());
    for (size_t k = 0; k < words[v].size(); ++k) idx[v][words[v][k]] = static_cast<int>(k);
  }
  M.act.resize(q.arrows.size());
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int s = q.arrows[ai].src, d = q.arrows[ai].dst;
    M.act[ai].assign(M.dim[d], QVec(M.dim[s], Rat(0)));
    for (int col = 0; col < M.dim[s]; ++col) {
      Path w = words[s][col];
      w.as.push_back(static_cast<int>(ai));
      if (w.as.empty()) w.src = vertex;
      PathPoly p;
      p.add_term(w, Rat(1));
      PathPoly nf = A.sys.system.normal_form(p);
      for (const auto& [t, c] : nf.terms) {
        auto it = idx[d].find(t);
        if (it == idx[d].end()) throw std::logic_error("projective basis mismatch");
        M.act[ai][it->second][col] += c;
      }
    }
  }
  return M;
}

RightModule injective_module(const FDAlgebraData& A, int vertex) {
  const Quiver& q = A.quiver;
  int V = static_cast<int>(q.vertices.size());
  auto words = words_into(A, vertex);  // words v -> `vertex`, dual basis
  RightModule M;
  M.A = &A;
  M.dim.resize(V);
  std::vector<std::map<Path, int, PathOrder>> idx(V);
  for (int v = 0; v < V; ++v) {
    M.dim[v] = static_cast<int>(words[v].size());
    for (size_t k = 0; k < words[v].size(); ++k) idx[v][words[v][k]] = static_cast<int>(k);
  }
  M.act.resize(q.arrows.size());
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int s = q.arrows[ai].src, d = q.arrows[ai].dst;
    // (f.a)(u) = f(a.u) for u: d -> vertex; matrix rows index words d->vertex
    M.act[ai].assign(M.dim[d], QVec(M.dim[s], Rat(0)));
    for (int row = 0; row < M.dim[d]; ++row) {
      Path u = words[d][row];
      Path au;
      au.src = s;
      au.as.push_back(static_cast<int>(ai));
      au.as.insert(au.as.end(), u.as.begin(), u.as.end());
      PathPoly p;
      p.add_term(au, Rat(1));
      PathPoly nf = A.sys.system.normal_form(p);
      for (const auto& [t, c] : nf.terms) {
        auto it = idx[s].find(t);
        if (it == idx[s].end()) throw std::logic_error("injective basis mismatch");
        M.act[ai][row][it->second] += c;
      }
    }
  }
  return M;
}

RightModule simple_module(const FDAlgebraData& A, int vertex) {
  const Quiver& q = A.quiver;
  RightModule M;
  M.A = &A;
  M.dim.assign(q.vertices.size(), 0);
  M.dim[vertex] = 1;
  M.act.resize(q.arrows.size());
  for (size_t ai = 0; ai < q.arrows.size(); ++ai)
    M.act[ai].assign(M.dim[q.arrows[ai].dst], QVec(M.dim[q.arrows[ai].src], Rat(0)));
  return M;
}

RightModule direct_sum(const FDAlgebraData& A, const std::vector<const RightModule*>& parts) {
  const Quiver& q = A.quiver;
  int V = static_cast<int>(q.vertices.size());
  RightModule M;
  M.A = &A;
  M.dim.assign(V, 0);
  for (const auto* p : parts)
    for (int v = 0; v < V; ++v) M.dim[v] += p->dim[v];
  M.act.resize(q.arrows.size());
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int s = q.arrows[ai].src, d = q.arrows[ai].dst;
    M.act[ai].assign(M.dim[d], QVec(M.dim[s], Rat(0)));
    int ro = 0, co = 0;
    for (const auto* p : parts) {
      for (int r = 0; r < p->dim[d]; ++r)
        for (int c = 0; c < p->dim[s]; ++c) M.act[ai][ro + r][co + c] = p->act[ai][r][c];
      ro += p->dim[d];
      co += p->dim[s];
    }
  }
  return M;
}

RightModule regular_module(const FDAlgebraData& A) {
  std::vector<RightModule> projs;
  for (size_t v = 0; v < A.quiver.vertices.size(); ++v) projs.push_back(projective_module(A, static_cast<int>(v)));
  std::vector<const RightModule*> ptrs;
  for (auto& p : projs) ptrs.push_back(&p);
  return direct_sum(A, ptrs);
}

RightModule dual_regular_module(const FDAlgebraData& A) {
  std::vector<RightModule> injs;
  for (size_t v = 0; v < A.quiver.vertices.size(); ++v) injs.push_back(injective_module(A, static_cast<int>(v)));
  std::vector<const RightModule*> ptrs;
  for (auto& p : injs) ptrs.push_back(&p);
  return direct_sum(A, ptrs);
}

std::vector<int> top_dims(const RightModule& M) {
  const Quiver& q = M.A->quiver;
  int V = static_cast<int>(q.vertices.size());
  std::vector<int> out(V);
  for (int v = 0; v < V; ++v) {
    RowSpan rad(M.dim[v]);
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      if (q.arrows[ai].dst != v) continue;
      for (int col = 0; col < M.dim[q.arrows[ai].src]; ++col) {
        QVec img(M.dim[v], Rat(0));
        for (int r = 0; r < M.dim[v]; ++r) img[r] = M.act[ai][r][col];
        rad.insert(std::move(img));
      }
    }
    out[v] = M.dim[v] - rad.dim();
  }
  return out;
}

std::vector<int> socle_dims(const RightModule& M) {
  const Quiver& q = M.A->quiver;
  int V = static_cast<int>(q.vertices.size());
  std::vector<int> out(V);
  for (int v = 0; v < V; ++v) {
    QMat stacked;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      if (q.arrows[ai].src != v) continue;
      for (const auto& row : M.act[ai]) stacked.push_back(row);
    }
    out[v] = static_cast<int>(kernel_basis(stacked, M.dim[v]).size());
  }
  return out;
}

ProjSum projective_sum(const FDAlgebraData& A, const std::vector<int>& gens) {
  const Quiver& q = A.quiver;
  int V = static_cast<int>(q.vertices.size());
  ProjSum P;
  P.gens = gens;
  P.offset.assign(gens.size(), std::vector<int>(V, 0));
  P.words.assign(gens.size(), std::vector<std::vector<Path>>(V));
  std::vector<RightModule> parts;
  for (int g : gens) parts.push_back(projective_module(A, g));
  std::vector<const RightModule*> ptrs;
  for (auto& p : parts) ptrs.push_back(&p);
  P.mod = direct_sum(A, ptrs);
  std::vector<int> running(V, 0);
  for (size_t r = 0; r < gens.size(); ++r) {
    auto words = words_from(A, gens[r]);
    for (int v = 0; v < V; ++v) {
      P.offset[r][v] = running[v];
      P.words[r][v] = words[v];
      running[v] += static_cast<int>(words[v].size());
    }
  }
  return P;
}

namespace {

// action of a word on a module, as a matrix M_{src(w)} -> M_{dst(w)}
QMat word_action(const RightModule& M, const Path& w) {
  const Quiver& q = M.A->quiver;
  int cur = w.src;
  QMat m;  // identity on M_cur
  m.assign(M.dim[cur], QVec(M.dim[cur], Rat(0)));
  for (int i = 0; i < M.dim[cur]; ++i) m[i][i] = 1;
  for (int ai : w.as) {
    const QMat& A = M.act[ai];
    QMat nm(A.size(), QVec(m.empty() ? 0 : m[0].size(), Rat(0)));
    for (size_t r = 0; r < A.size(); ++r)
      for (size_t k = 0; k < m.size(); ++k)
        if (A[r][k] != 0)
          for (size_t c = 0; c < m[k].size(); ++c) nm[r][c] += A[r][k] * m[k][c];
    m = std::move(nm);
    cur = q.arrows[ai].dst;
  }
  return m;
}

// generators of top(M): (vertex, representative vector) pairs
std::vector<std::pair<int, QVec>> top_generators(const RightModule& M) {
  const Quiver& q = M.A->quiver;
  int V = static_cast<int>(q.vertices.size());
  std::vector<std::pair<int, QVec>> gens;
  for (int v = 0; v < V; ++v) {
    RowSpan rad(M.dim[v]);
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      if (q.arrows[ai].dst != v) continue;
      for (int col = 0; col < M.dim[q.arrows[ai].src]; ++col) {
        QVec img(M.dim[v], Rat(0));
        for (int r = 0; r < M.dim[v]; ++r) img[r] = M.act[ai][r][col];
        rad.insert(std::move(img));
      }
    }
    for (int e = 0; e < M.dim[v]; ++e) {
      QVec unit(M.dim[v], Rat(0));
      unit[e] = 1;
      if (rad.insert(unit)) gens.push_back({v, unit});
    }
  }
  return gens;
}

// cover map P -> M for P = projective_sum over top generators
ModuleMap cover_map(const FDAlgebraData& A, const ProjSum& P, const RightModule& M,
                    const std::vector<std::pair<int, QVec>>& gens) {
  const Quiver& q = A.quiver;
  int V = static_cast<int>(q.vertices.size());
  ModuleMap f;
  f.mat.resize(V);
  for (int v = 0; v < V; ++v) f.mat[v].assign(M.dim[v], QVec(P.mod.dim[v], Rat(0)));
  for (size_t r = 0; r < gens.size(); ++r) {
    const auto& [gv, gvec] = gens[r];
    (void)gv;
    for (int v = 0; v < V; ++v) {
      for (size_t k = 0; k < P.words[r][v].size(); ++k) {
        QMat wact = word_action(M, P.words[r][v][k]);
        QVec img = mat_vec(wact, gvec);
        int col = P.offset[r][v] + static_cast<int>(k);
        for (int row = 0; row < M.dim[v]; ++row) f.mat[v][row][col] = img[row];
      }
    }
  }
  f.src = &P.mod;
  f.dst = &M;
  return f;
}

// kernel of a module map as a module, with the kernel row bases returned
RightModule kernel_submodule(const ModuleMap& f, std::vector<QMat>& kernel_rows) {
  const RightModule& P = *f.src;
  const Quiver& q = P.A->quiver;
  int V = static_cast<int>(q.vertices.size());
  kernel_rows.assign(V, QMat{});
  RightModule K;
  K.A = P.A;
  K.dim.assign(V, 0);
  for (int v = 0; v < V; ++v) {
    kernel_rows[v] = kernel_basis(f.mat[v], P.dim[v]);
    K.dim[v] = static_cast<int>(kernel_rows[v].size());
  }
  K.act.resize(q.arrows.size());
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int s = q.arrows[ai].src, d = q.arrows[ai].dst;
    K.act[ai].assign(K.dim[d], QVec(K.dim[s], Rat(0)));
    for (int col = 0; col < K.dim[s]; ++col) {
      QVec img = mat_vec(P.act[ai], kernel_rows[s][col]);
      if (K.dim[d] == 0) {
        for (const auto& x : img)
          if (x != 0) throw std::logic_error("kernel is not a submodule");
        continue;
      }
      QVec coords = express_in_rows(kernel_rows[d], img);
      for (int row = 0; row < K.dim[d]; ++row) K.act[ai][row][col] = coords[row];
    }
  }
  return K;
}

}  // namespace

Resolution minimal_resolution(const FDAlgebraData& A, const RightModule& M, int max_steps) {
  Resolution res;
  const Quiver& q = A.quiver;
  int V = static_cast<int>(q.vertices.size());

  RightModule cur = M;                     // module being covered
  std::vector<QMat> embed_rows;            // rows expressing cur inside prev P (after step 0)
  bool have_embed = false;

  for (int step = 0; step <= max_steps; ++step) {
    if (cur.total() == 0) {
      res.complete = true;
      break;
    }
    auto gens = top_generators(cur);
    std::vector<int> gv;
    for (auto& g : gens) gv.push_back(g.first);
    ProjSum P = projective_sum(A, gv);
    ModuleMap cover = cover_map(A, P, cur, gens);

    // record the composite P -> cur -> previous projective (as a ModuleMap onto P_prev)
    if (!have_embed) {
      res.maps.push_back(cover);  // P^0 -> M
    } else {
      const RightModule& prevP = res.proj.back().mod;
      ModuleMap comp;
      comp.mat.resize(V);
      for (int v = 0; v < V; ++v) {
        comp.mat[v].assign(prevP.dim[v], QVec(P.mod.dim[v], Rat(0)));
        for (int col = 0; col < P.mod.dim[v]; ++col) {
          // image of basis col in cur-coordinates
          QVec inc(cur.dim[v], Rat(0));
          for (int r = 0; r < cur.dim[v]; ++r) inc[r] = cover.mat[v][r][col];
          // cur sits inside prevP via embed_rows
          QVec img(prevP.dim[v], Rat(0));
          for (int r = 0; r < cur.dim[v]; ++r)
            for (int c = 0; c < prevP.dim[v]; ++c) img[c] += inc[r] * embed_rows[v][r][c];
          for (int row = 0; row < prevP.dim[v]; ++row) comp.mat[v][row][col] = img[row];
        }
      }
      res.maps.push_back(std::move(comp));
    }

    std::vector<QMat> kr;
    RightModule K = kernel_submodule(cover, kr);
    res.proj.push_back(std::move(P));
    cur = std::move(K);
    embed_rows = std::move(kr);
    have_embed = true;
  }
  return res;
}

long hom_space_dim(const Resolution& res, const RightModule& N, int level) {
  if (level >= static_cast<int>(res.proj.size())) return 0;
  long d = 0;
  for (int g : res.proj[level].gens) d += N.dim[g];
  return d;
}

QMat hom_differential(const FDAlgebraData& A, const Resolution& res, const RightModule& N,
                      int level) {
  long rows = hom_space_dim(res, N, level + 1);
  long cols = hom_space_dim(res, N, level);
  QMat m(rows, QVec(cols, Rat(0)));
  if (rows == 0 || cols == 0) return m;
  const ProjSum& Pk = res.proj[level];
  const ProjSum& Pk1 = res.proj[level + 1];
  const ModuleMap& d = res.maps[level + 1];  // P^{level+1} -> P^{level}
  std::vector<long> row_off(Pk1.gens.size() + 1, 0);
  for (size_t s = 0; s < Pk1.gens.size(); ++s)
    row_off[s + 1] = row_off[s] + N.dim[Pk1.gens[s]];
  std::vector<long> col_off(Pk.gens.size() + 1, 0);
  for (size_t r = 0; r < Pk.gens.size(); ++r) col_off[r + 1] = col_off[r] + N.dim[Pk.gens[r]];
  for (size_t s = 0; s < Pk1.gens.size(); ++s) {
    int u = Pk1.gens[s];
    int widx = -1;  // the generator is the empty word of its summand
    for (size_t kk = 0; kk < Pk1.words[s][u].size(); ++kk)
      if (Pk1.words[s][u][kk].as.empty()) widx = static_cast<int>(kk);
    if (widx < 0) throw std::logic_error("projective summand lost its generator");
    int col_in_mod = Pk1.offset[s][u] + widx;
    for (size_t r = 0; r < Pk.gens.size(); ++r)
      for (size_t kk = 0; kk < Pk.words[r][u].size(); ++kk) {
        Rat c = d.mat[u][Pk.offset[r][u] + static_cast<int>(kk)][col_in_mod];
        if (c == 0) continue;
        QMat wact = word_action(N, Pk.words[r][u][kk]);
        // phi(gen_r) in N_{gens[r]} maps to phi(gen_r) . w in N_u
        for (size_t rr = 0; rr < wact.size(); ++rr)
          for (size_t cc = 0; cc < wact[rr].size(); ++cc)
            m[row_off[s] + static_cast<long>(rr)][col_off[r] + static_cast<long>(cc)] +=
                c * wact[rr][cc];
      }
  }
  return m;
}

long ext_dim(const FDAlgebraData& A, const Resolution& res, const RightModule& N, int k) {
  if (k >= static_cast<int>(res.proj.size())) {
    if (res.complete) return 0;
    throw std::logic_error("resolution too short for requested Ext");
  }
  QMat dk = hom_differential(A, res, N, k);
  long ker = hom_space_dim(res, N, k) - matrix_rank(dk);
  if (k == 0) return ker;
  QMat dk1 = hom_differential(A, res, N, k - 1);
  return ker - matrix_rank(dk1);
}

long ext_dims(const FDAlgebraData& A, int i, int j, int k) {
  RightModule S = simple_module(A, i);
  Resolution res = minimal_resolution(A, S, k + 1);
  if (k >= static_cast<int>(res.proj.size())) return 0;
  long n = 0;
  for (int g : res.proj[k].gens)
    if (g == j) ++n;
  return n;
}

std::optional<int> gldim(const FDAlgebraData& A, int cap) {
  int best = 0;
  for (size_t v = 0; v < A.quiver.vertices.size(); ++v) {
    RightModule S = simple_module(A, static_cast<int>(v));
    Resolution res = minimal_resolution(A, S, cap + 1);
    if (!res.complete) return std::nullopt;
    best = std::max(best, static_cast<int>(res.proj.size()) - 1);
  }
  return best;
}

bool is_selfinjective(const FDAlgebraData& A) {
  int V = static_cast<int>(A.quiver.vertices.size());
  std::vector<int> pi(V, -1);
  std::vector<bool> used(V, false);
  for (int i = 0; i < V; ++i) {
    RightModule P = projective_module(A, i);
    auto soc = socle_dims(P);
    int total = 0, where = -1;
    for (int v = 0; v < V; ++v) {
      total += soc[v];
      if (soc[v] > 0) where = v;
    }
    if (total != 1) return false;  // socle must be simple
    pi[i] = where;
    if (used[where]) return false;
    used[where] = true;
  }
  // dimension vectors: P_i = I_{pi(i)}, i.e. cartan[i][v] == cartan[v][pi(i)]
  for (int i = 0; i < V; ++i)
    for (int v = 0; v < V; ++v)
      if (A.cartan[i][v] != A.cartan[v][pi[i]]) return false;
  return true;
}

std::vector<int> nakayama_permutation(const FDAlgebraData& A) {
  if (!is_selfinjective(A)) throw std::domain_error("algebra is not selfinjective");
  int V = static_cast<int>(A.quiver.vertices.size());
  std::vector<int> pi(V, -1);
  for (int i = 0; i < V; ++i) {
    RightModule P = projective_module(A, i);
    auto soc = socle_dims(P);
    for (int v = 0; v < V; ++v)
      if (soc[v] > 0) pi[i] = v;
  }
  return pi;
}

AlgebraPresentation minimal_relations(const AlgebraPresentation& a, int cap) {
  a.validate();
  AlgebraPresentation cur = a;
  // drop zero relations defensively (validate refuses them anyway)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cur.relations.size(); ++i) {
      std::vector<PathPoly> others;
      for (size_t j = 0; j < cur.relations.size(); ++j)
        if (j != i) others.push_back(cur.relations[j]);
      Completion comp = groebner_complete(cur.quiver, others, cap);
      if (comp.truncated) continue;  // cannot certify redundancy exactly
      bool drop = false;
      if (comp.system.normal_form(cur.relations[i], &drop).is_zero() && !drop) {
        cur.relations.erase(cur.relations.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return cur;
}

int radical_nilpotency(const FDAlgebraData& A) {
  // rad^k is spanned by normal words of length >= k together with products;
  // with a confluent system, normal words of length >= k already span rad^k.
  int maxlen = 0;
  for (const auto& p : A.basis) maxlen = std::max(maxlen, static_cast<int>(p.length()));
  return maxlen + 1;
}

}  // namespace wpline
