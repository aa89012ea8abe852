#include "wpline/quiver_iso.hpp"

#include <algorithm>
#include <map>

namespace wpline {

namespace {

// row/column profile used to prune the backtracking
std::vector<long> vertex_signature(const std::vector<std::vector<std::vector<long>>>& mats, int v) {
  std::vector<long> sig;
  int n = static_cast<int>(mats[0].size());
  for (const auto& m : mats) {
    std::vector<long> row, col;
    for (int j = 0; j < n; ++j) {
      row.push_back(m[v][j]);
      col.push_back(m[j][v]);
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    sig.insert(sig.end(), row.begin(), row.end());
    sig.insert(sig.end(), col.begin(), col.end());
    sig.push_back(m[v][v]);
  }
  return sig;
}

bool backtrack(const std::vector<std::vector<std::vector<long>>>& a,
               const std::vector<std::vector<std::vector<long>>>& b, std::vector<int>& perm,
               std::vector<bool>& used, size_t pos,
               const std::vector<std::vector<long>>& siga,
               const std::vector<std::vector<long>>& sigb,
               const std::function<bool(const std::vector<int>&)>& accept) {
  int n = static_cast<int>(a[0].size());
  if (pos == static_cast<size_t>(n)) return accept(perm);
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (siga[pos] != sigb[cand]) continue;
    bool ok = true;
    for (size_t mi = 0; mi < a.size() && ok; ++mi) {
      for (size_t prev = 0; prev < pos && ok; ++prev) {
        if (a[mi][pos][prev] != b[mi][cand][perm[prev]]) ok = false;
        if (a[mi][prev][pos] != b[mi][perm[prev]][cand]) ok = false;
      }
      if (a[mi][pos][pos] != b[mi][cand][cand]) ok = false;
    }
    if (!ok) continue;
    perm[pos] = cand;
    used[cand] = true;
    if (backtrack(a, b, perm, used, pos + 1, siga, sigb, accept)) return true;
    used[cand] = false;
  }
  return false;
}

bool search(const std::vector<std::vector<std::vector<long>>>& a,
            const std::vector<std::vector<std::vector<long>>>& b,
            const std::function<bool(const std::vector<int>&)>& accept,
            std::vector<int>* perm_out) {
  if (a.size() != b.size() || a.empty()) return a.size() == b.size();
  int n = static_cast<int>(a[0].size());
  if (static_cast<int>(b[0].size()) != n) return false;
  std::vector<std::vector<long>> siga(n), sigb(n);
  for (int v = 0; v < n; ++v) {
    siga[v] = vertex_signature(a, v);
    sigb[v] = vertex_signature(b, v);
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> best;
  auto wrapped = [&](const std::vector<int>& p) {
    if (!accept(p)) return false;
    best = p;
    return true;
  };
  if (!backtrack(a, b, perm, used, 0, siga, sigb, wrapped)) return false;
  if (perm_out) *perm_out = best;
  return true;
}

}  // namespace

bool matrices_isomorphic(const std::vector<std::vector<std::vector<long>>>& a,
                         const std::vector<std::vector<std::vector<long>>>& b,
                         std::vector<int>* perm_out) {
  return search(a, b, [](const std::vector<int>&) { return true; }, perm_out);
}

bool matrices_isomorphic_any(const std::vector<std::vector<std::vector<long>>>& a,
                             const std::vector<std::vector<std::vector<long>>>& b,
                             const std::function<bool(const std::vector<int>&)>& accept) {
  return search(a, b, accept, nullptr);
}

std::vector<std::vector<long>> arrow_count_matrix(const Quiver& q) {
  int n = static_cast<int>(q.vertices.size());
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (const auto& a : q.arrows) ++m[a.src][a.dst];
  return m;
}

bool quiver_isomorphic(const Quiver& a, const Quiver& b, std::vector<int>* perm_out) {
  if (a.vertices.size() != b.vertices.size() || a.arrows.size() != b.arrows.size()) return false;
  return matrices_isomorphic({arrow_count_matrix(a)}, {arrow_count_matrix(b)}, perm_out);
}

bool presentation_equivalent(const AlgebraPresentation& a, const AlgebraPresentation& b, int cap) {
  if (a.quiver.vertices.size() != b.quiver.vertices.size()) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  if (a.relations.size() != b.relations.size()) return false;
  auto fa = fd_quotient(a, cap);
  auto fb = fd_quotient(b, cap);
  auto* da = std::get_if<FDAlgebraData>(&fa);
  auto* db = std::get_if<FDAlgebraData>(&fb);
  if (!da || !db) {
    // fall back to the quiver comparison when a quotient is unavailable
    return matrices_isomorphic({arrow_count_matrix(a.quiver)}, {arrow_count_matrix(b.quiver)});
  }
  if (da->total_dim != db->total_dim) return false;
  return matrices_isomorphic({arrow_count_matrix(a.quiver), da->cartan},
                             {arrow_count_matrix(b.quiver), db->cartan});
}

}  // namespace wpline
