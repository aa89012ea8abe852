#include "wpline/qp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wpline {

Path cycle_normalize(const Quiver& q, const Path& p) {
  if (p.as.empty() || path_dst(q, p) != p.src)
    throw std::domain_error("potential term is not a cycle");
  Path best = p;
  Path cur = p;
  for (size_t r = 1; r < p.as.size(); ++r) {
    std::rotate(cur.as.begin(), cur.as.begin() + 1, cur.as.end());
    cur.src = q.arrows[cur.as.front()].src;
    if (cur.as < best.as) best = cur;
  }
  return best;
}

PathPoly potential_normalize(const Quiver& q, const PathPoly& W) {
  PathPoly out;
  for (const auto& [p, c] : W.terms) out.add_term(cycle_normalize(q, p), c);
  return out;
}

int term_degree(const GradedQP& P, const Path& p) {
  int d = 0;
  for (int a : p.as) d += P.degree[a];
  return d;
}

void GradedQP::validate(bool allow_two_cycles) const {
  if (degree.size() != quiver.arrows.size())
    throw std::domain_error("degree function does not match the arrows");
  if (quiver.has_loop()) throw std::domain_error("quiver has a loop");
  if (!allow_two_cycles && quiver.has_two_cycle())
    throw std::domain_error("quiver has a 2-cycle");
  for (const auto& [p, c] : potential.terms) {
    (void)c;
    if (p.as.empty() || path_dst(quiver, p) != p.src)
      throw std::domain_error("potential term is not a cycle");
    if (term_degree(*this, p) != potential_degree)
      throw std::domain_error("potential is not homogeneous");
  }
}

PathPoly cyclic_derivative(const Quiver& q, const PathPoly& W, int arrow) {
  PathPoly out;
  for (const auto& [p, c] : W.terms) {
    for (size_t i = 0; i < p.as.size(); ++i) {
      if (p.as[i] != arrow) continue;
      Path rem;
      rem.src = q.arrows[arrow].dst;
      rem.as.insert(rem.as.end(), p.as.begin() + i + 1, p.as.end());
      rem.as.insert(rem.as.end(), p.as.begin(), p.as.begin() + i);
      out.add_term(rem, c);
    }
  }
  return out;
}

std::vector<PathPoly> jacobian_relations(const GradedQP& P) {
  std::vector<PathPoly> rels;
  for (size_t a = 0; a < P.quiver.arrows.size(); ++a) {
    PathPoly d = cyclic_derivative(P.quiver, P.potential, static_cast<int>(a));
    if (!d.is_zero()) rels.push_back(std::move(d));
  }
  return rels;
}

JacobianOutcome jacobian(const GradedQP& P, int cap) {
  P.validate();
  FdOutcome out = fd_quotient(P.quiver, jacobian_relations(P), cap);
  if (auto* inf = std::get_if<InfiniteWitness>(&out)) return *inf;
  if (auto* ci = std::get_if<CapInfo>(&out)) return *ci;
  GradedFD g;
  g.fd = std::move(std::get<FDAlgebraData>(out));
  g.word_degree.reserve(g.fd.basis.size());
  for (const auto& p : g.fd.basis) {
    long d = 0;
    for (int a : p.as) d += P.degree[a];
    g.word_degree.push_back(d);
    ++g.dim_by_degree[d];
  }
  return g;
}

AlgebraPresentation truncated_jacobian(const GradedQP& P) {
  P.validate();
  if (P.potential_degree != 1)
    throw std::domain_error("truncation requires a potential of degree 1");
  AlgebraPresentation a;
  a.quiver.vertices = P.quiver.vertices;
  std::vector<int> remap(P.quiver.arrows.size(), -1);
  for (size_t i = 0; i < P.quiver.arrows.size(); ++i) {
    if (P.degree[i] != 0) continue;
    const auto& ar = P.quiver.arrows[i];
    remap[i] = a.quiver.add_arrow(ar.name, ar.src, ar.dst);
  }
  for (size_t i = 0; i < P.quiver.arrows.size(); ++i) {
    if (P.degree[i] != 1) continue;
    PathPoly d = cyclic_derivative(P.quiver, P.potential, static_cast<int>(i));
    PathPoly mapped;
    for (const auto& [p, c] : d.terms) {
      bool pure = true;
      Path np;
      np.src = p.src;
      for (int ai : p.as) {
        if (remap[ai] < 0) {
          pure = false;
          break;
        }
        np.as.push_back(remap[ai]);
      }
      if (pure) mapped.add_term(np, c);
    }
    if (!mapped.is_zero()) a.relations.push_back(std::move(mapped));
  }
  a.validate();
  return a;
}

bool is_algebraic(const GradedQP& P, int cap) {
  AlgebraPresentation t = truncated_jacobian(P);
  // a zero truncation of some defining derivative breaks minimality
  long degree_one = 0;
  for (size_t i = 0; i < P.quiver.arrows.size(); ++i)
    if (P.degree[i] == 1) ++degree_one;
  if (static_cast<long>(t.relations.size()) != degree_one) return false;
  FdOutcome out = fd_quotient(t, cap);
  if (std::holds_alternative<InfiniteWitness>(out)) return false;
  if (std::holds_alternative<CapInfo>(out))
    throw std::runtime_error("algebraicity undecided: completion cap exceeded");
  auto g = gldim(std::get<FDAlgebraData>(out));
  if (!g || *g > 2) return false;
  AlgebraPresentation m = minimal_relations(t, cap);
  return m.relations.size() == t.relations.size();
}

namespace {

std::string star_name(const Quiver& q, const std::set<std::string>& taken,
                      const std::string& base) {
  std::string name = base;
  while (taken.count(name) || q.arrow_id(name) >= 0) name += "'";
  return name;
}

bool term_uses(const Path& p, int u, int v) {
  for (int a : p.as)
    if (a == u || a == v) return true;
  return false;
}

}  // namespace

GradedQP premutate(const GradedQP& P, int k, MutationSide side) {
  P.validate();
  if (k < 0 || k >= static_cast<int>(P.quiver.vertices.size()))
    throw std::domain_error("mutation vertex out of range");
  const Quiver& q = P.quiver;
  int dW = P.potential_degree;

  GradedQP R;
  R.quiver.vertices = q.vertices;
  R.potential_degree = dW;

  std::set<std::string> taken;
  std::map<int, int> keep;                   // old arrow id -> new id
  std::map<std::pair<int, int>, int> comp;   // (a, b) through k -> [b.a] id
  std::map<int, int> star;                   // old arrow id -> its star id

  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& ar = q.arrows[i];
    if (ar.src != k && ar.dst != k) {
      keep[static_cast<int>(i)] =
          R.quiver.add_arrow(ar.name, ar.src, ar.dst);
      R.degree.push_back(P.degree[i]);
      taken.insert(ar.name);
    }
  }
  // composite arrows [b.a] for i -a-> k -b-> j
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    if (q.arrows[ai].dst != k) continue;
    for (size_t bi = 0; bi < q.arrows.size(); ++bi) {
      if (q.arrows[bi].src != k) continue;
      std::string name = star_name(
          R.quiver, taken, "[" + q.arrows[bi].name + "." + q.arrows[ai].name + "]");
      taken.insert(name);
      comp[{static_cast<int>(ai), static_cast<int>(bi)}] =
          R.quiver.add_arrow(name, q.arrows[ai].src, q.arrows[bi].dst);
      R.degree.push_back(P.degree[ai] + P.degree[bi]);
    }
  }
  // reversed arrows
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& ar = q.arrows[i];
    if (ar.dst == k) {  // a: i -> k becomes a*: k -> i
      std::string name = star_name(R.quiver, taken, ar.name + "*");
      taken.insert(name);
      star[static_cast<int>(i)] = R.quiver.add_arrow(name, k, ar.src);
      R.degree.push_back(side == MutationSide::Left ? -P.degree[i] + dW : -P.degree[i]);
    } else if (ar.src == k) {  // b: k -> j becomes b*: j -> k
      std::string name = star_name(R.quiver, taken, ar.name + "*");
      taken.insert(name);
      star[static_cast<int>(i)] = R.quiver.add_arrow(name, ar.dst, k);
      R.degree.push_back(side == MutationSide::Left ? -P.degree[i] : -P.degree[i] + dW);
    }
  }

  // [W]: replace each pass through k by the composite arrow
  PathPoly newW;
  for (const auto& [p, c] : P.potential.terms) {
    Path rot = p;
    // rotate so the cycle does not start right after an incoming arrow of k
    while (rot.src == k) {
      std::rotate(rot.as.begin(), rot.as.begin() + 1, rot.as.end());
      rot.src = q.arrows[rot.as.front()].src;
    }
    Path np;
    np.src = rot.src;
    for (size_t t = 0; t < rot.as.size(); ++t) {
      int a = rot.as[t];
      if (q.arrows[a].dst == k) {
        if (t + 1 >= rot.as.size()) throw std::logic_error("cycle ends at the mutation vertex");
        int b = rot.as[t + 1];
        np.as.push_back(comp.at({a, b}));
        ++t;
      } else {
        np.as.push_back(keep.at(a));
      }
    }
    newW.add_term(np, c);
  }
  // + sum over passes: [b.a] b* a*
  for (const auto& [ab, cid] : comp) {
    Path cyc;
    cyc.src = R.quiver.arrows[cid].src;
    cyc.as = {cid, star.at(ab.second), star.at(ab.first)};
    newW.add_term(cyc, Rat(1));
  }
  R.potential = potential_normalize(R.quiver, newW);
  R.validate(/*allow_two_cycles=*/true);
  return R;
}

GradedQP reduce(const GradedQP& P) {
  GradedQP cur = P;
  cur.validate(/*allow_two_cycles=*/true);
  while (true) {
    // smallest 2-cycle term in the potential
    const Path* found = nullptr;
    Rat coeff;
    for (const auto& [p, c] : cur.potential.terms) {
      if (p.as.size() == 2) {
        found = &p;
        coeff = c;
        break;  // terms are ordered, so the first is the smallest
      }
    }
    if (!found) break;
    int u = found->as[0], v = found->as[1];

    PathPoly rest = cur.potential;
    rest.add_term(*found, -coeff);

    // One elimination step: for W = c uv + uP + vQ + R the change of
    // variables u -> u - Q/c, v -> v - P/c leaves c uv + R - QP/c.
    PathPoly W2 = std::move(rest);
    for (int rounds = 0;; ++rounds) {
      bool uses = false;
      for (const auto& [p, c] : W2.terms) {
        (void)c;
        if (term_uses(p, u, v)) {
          uses = true;
          break;
        }
      }
      if (!uses) break;
      if (rounds > 32) throw std::runtime_error("2-cycle elimination does not stabilize");
      PathPoly P = cyclic_derivative(cur.quiver, W2, u);
      PathPoly Q = cyclic_derivative(cur.quiver, W2, v);
      PathPoly R;
      for (const auto& [p, c] : W2.terms)
        if (!term_uses(p, u, v)) R.add_term(p, c);
      PathPoly corr = pp_scale(pp_mul(cur.quiver, Q, P), -1 / coeff);
      W2 = pp_add(R, potential_normalize(cur.quiver, corr));
    }

    // rebuild the quiver without u and v
    GradedQP next;
    next.potential_degree = cur.potential_degree;
    next.quiver.vertices = cur.quiver.vertices;
    std::vector<int> remap(cur.quiver.arrows.size(), -1);
    for (size_t i = 0; i < cur.quiver.arrows.size(); ++i) {
      if (static_cast<int>(i) == u || static_cast<int>(i) == v) continue;
      const auto& ar = cur.quiver.arrows[i];
      remap[i] = next.quiver.add_arrow(ar.name, ar.src, ar.dst);
      next.degree.push_back(cur.degree[i]);
    }
    PathPoly mapped;
    for (const auto& [p, c] : W2.terms) {
      Path np;
      np.src = p.src;
      for (int a : p.as) {
        if (remap[a] < 0) throw std::logic_error("eliminated arrow survived substitution");
        np.as.push_back(remap[a]);
      }
      mapped.add_term(np, c);
    }
    next.potential = potential_normalize(next.quiver, mapped);
    next.validate(/*allow_two_cycles=*/true);
    cur = std::move(next);
  }
  return cur;
}

GradedQP mutate(const GradedQP& P, int k, MutationSide side) {
  GradedQP out = reduce(premutate(P, k, side));
  out.validate(/*allow_two_cycles=*/false);  // reduction must clear all 2-cycles
  return out;
}

GradedQP mutate_orbit(const GradedQP& P, const std::vector<int>& orbit, MutationSide side) {
  std::set<int> seen(orbit.begin(), orbit.end());
  if (seen.size() != orbit.size()) throw std::domain_error("orbit vertices must be distinct");
  for (int a : orbit)
    for (int b : orbit)
      if (a != b)
        for (const auto& ar : P.quiver.arrows)
          if ((ar.src == a && ar.dst == b) || (ar.src == b && ar.dst == a))
            throw std::domain_error("orbit vertices must be pairwise non-adjacent");
  std::vector<int> sorted(orbit.begin(), orbit.end());
  std::sort(sorted.begin(), sorted.end());
  GradedQP cur = P;
  for (int k : sorted) cur = mutate(cur, k, side);
  return cur;
}

}  // namespace wpline
