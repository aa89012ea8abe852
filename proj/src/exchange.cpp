#include "wpline/exchange.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wpline/quiver_iso.hpp"

namespace wpline {

namespace {

// degree multisets per ordered vertex pair
std::vector<std::vector<std::vector<int>>> pair_degrees(const GradedQP& P) {
  int n = static_cast<int>(P.quiver.vertices.size());
  std::vector<std::vector<std::vector<int>>> m(n, std::vector<std::vector<int>>(n));
  for (size_t a = 0; a < P.quiver.arrows.size(); ++a)
    m[P.quiver.arrows[a].src][P.quiver.arrows[a].dst].push_back(P.degree[a]);
  for (auto& row : m)
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
  return m;
}

// Shifting the i-th summand of a tilting complex by f(i) changes arrow
// degrees by the coboundary f(dst) - f(src); two gradings are equivalent when
// they differ by such a shift along some quiver isomorphism.
bool degrees_match_up_to_shift(const GradedQP& A, const GradedQP& B,
                               const std::vector<int>& perm) {
  auto da = pair_degrees(A);
  auto db = pair_degrees(B);
  int n = static_cast<int>(da.size());
  std::vector<long> f(n, 0);
  std::vector<bool> known(n, false);
  for (int root = 0; root < n; ++root) {
    if (known[root]) continue;
    known[root] = true;
    f[root] = 0;
    std::deque<int> work{root};
    while (!work.empty()) {
      int i = work.front();
      work.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        long shift = 0;
        bool have = false;
        if (!da[i][j].empty()) {
          if (db[perm[i]][perm[j]].size() != da[i][j].size()) return false;
          shift = db[perm[i]][perm[j]].front() - da[i][j].front();  // f(j) - f(i)
          have = true;
        } else if (!da[j][i].empty()) {
          if (db[perm[j]][perm[i]].size() != da[j][i].size()) return false;
          shift = -(db[perm[j]][perm[i]].front() - da[j][i].front());
          have = true;
        }
        if (!have) continue;
        if (!known[j]) {
          known[j] = true;
          f[j] = f[i] + shift;
          work.push_back(j);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (da[i][j].size() != db[perm[i]][perm[j]].size()) return false;
      for (size_t k = 0; k < da[i][j].size(); ++k)
        if (da[i][j][k] + f[j] - f[i] != db[perm[i]][perm[j]][k]) return false;
    }
  return true;
}

bool proxy_equal(const ExchangeNode& a, const ExchangeNode& b) {
  if (a.jacobian_finite != b.jacobian_finite) return false;
  if (a.jacobian_finite && a.total_dim != b.total_dim) return false;
  if (a.qp.quiver.vertices.size() != b.qp.quiver.vertices.size()) return false;
  if (a.qp.quiver.arrows.size() != b.qp.quiver.arrows.size()) return false;
  std::vector<std::vector<std::vector<long>>> ma{arrow_count_matrix(a.qp.quiver)};
  std::vector<std::vector<std::vector<long>>> mb{arrow_count_matrix(b.qp.quiver)};
  if (a.jacobian_finite) {
    ma.push_back(a.cartan);
    mb.push_back(b.cartan);
  }
  return matrices_isomorphic_any(ma, mb, [&](const std::vector<int>& perm) {
    return degrees_match_up_to_shift(a.qp, b.qp, perm);
  });
}

ExchangeNode make_node(const GradedQP& qp, int cap, std::vector<std::string>& warnings,
                       bool nakayama, bool quiet) {
  ExchangeNode node;
  node.qp = qp;
  JacobianOutcome out = jacobian(qp, cap);
  if (auto* g = std::get_if<GradedFD>(&out)) {
    node.jacobian_finite = true;
    node.total_dim = g->fd.total_dim;
    node.dims = g->dim_by_degree;
    node.cartan = g->fd.cartan;
    node.selfinjective = is_selfinjective(g->fd);
    if (node.selfinjective && nakayama) {
      auto pi = nakayama_permutation(g->fd);
      std::vector<bool> used(pi.size(), false);
      for (size_t i = 0; i < pi.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> orbit;
        int cur = static_cast<int>(i);
        while (!used[cur]) {
          used[cur] = true;
          orbit.push_back(cur);
          cur = pi[cur];
        }
        std::sort(orbit.begin(), orbit.end());
        node.orbits.push_back(std::move(orbit));
      }
    }
  } else if (!quiet) {
    warnings.push_back("node with undecided Jacobian; using plain vertex mutation");
  }
  if (node.orbits.empty()) {
    if (!node.selfinjective && !quiet)
      warnings.push_back("node is not a selfinjective Jacobian; exploring classically");
    for (size_t v = 0; v < qp.quiver.vertices.size(); ++v)
      node.orbits.push_back({static_cast<int>(v)});
  }
  return node;
}

}  // namespace

ExchangeResult explore_exchange(const GradedQP& start, const ExchangeOptions& opt) {
  ExchangeResult result;
  result.nodes.push_back(make_node(start, opt.cap, result.warnings, opt.nakayama_orbits, false));
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    for (const auto& orbit : result.nodes[id].orbits) {
      GradedQP next;
      try {
        next = mutate_orbit(result.nodes[id].qp, orbit, MutationSide::Left);
      } catch (const std::domain_error& e) {
        result.warnings.push_back("orbit skipped at node " + std::to_string(id) + ": " +
                                  e.what());
        continue;
      }
      ExchangeNode cand = make_node(next, opt.cap, result.warnings, opt.nakayama_orbits, true);
      int found = -1;
      for (size_t k = 0; k < result.nodes.size(); ++k)
        if (proxy_equal(result.nodes[k], cand)) {
          found = static_cast<int>(k);
          break;
        }
      if (found < 0) {
        if (static_cast<int>(result.nodes.size()) >= opt.max_nodes) {
          result.truncated = true;
          result.warnings.push_back("node budget reached; closure truncated");
          return result;
        }
        result.nodes.push_back(std::move(cand));
        found = static_cast<int>(result.nodes.size()) - 1;
        frontier.push_back(found);
      }
      result.edges.push_back({id, found, orbit});
    }
  }
  return result;
}

}  // namespace wpline
