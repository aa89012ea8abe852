#include "wpline/survey.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wpline/quiver_iso.hpp"

namespace wpline {

namespace {

// tau^2-orbit of a symbol inside the candidate pool; empty when it escapes
std::vector<int> tau2_orbit(const Weights& w, const std::vector<SheafSymbol>& pool,
                            const std::map<SheafSymbol, int>& index, int start) {
  std::vector<int> orbit;
  std::set<int> seen;
  int cur = start;
  while (true) {
    if (seen.count(cur)) break;
    seen.insert(cur);
    orbit.push_back(cur);
    SheafSymbol next = tau_k(w, pool[cur], 2);
    auto it = index.find(next);
    if (it == index.end()) return {};  // orbit leaves the pool
    cur = it->second;
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

SurveyResult survey_tilting(const Weights& w, const LVec& lo, const LVec& hi,
                            const SurveyOptions& opt) {
  SurveyResult result;
  result.lo = lo;
  result.hi = hi;
  result.require_tau2 = opt.require_tau2;

  std::vector<SheafSymbol> pool;
  for (const LVec& v : window_twists(w, lo, hi)) pool.push_back(line_bundle(v));
  for (int i = 0; i < w.count(); ++i)
    for (int m = 1; m <= w.p(i); ++m)
      if (w.p(i) >= 2) pool.push_back(exc_simple(w, i, m));
  if (static_cast<long>(pool.size()) > opt.candidate_budget)
    throw std::runtime_error("survey window too large: " + std::to_string(pool.size()) +
                             " candidates exceed the budget");
  std::map<SheafSymbol, int> index;
  for (size_t i = 0; i < pool.size(); ++i) index[pool[i]] = static_cast<int>(i);

  // group into units: tau^2-orbits when stability is required, else singletons
  std::vector<std::vector<int>> units;
  {
    std::set<std::vector<int>> seen;
    for (size_t i = 0; i < pool.size(); ++i) {
      std::vector<int> unit;
      if (opt.require_tau2) {
        unit = tau2_orbit(w, pool, index, static_cast<int>(i));
        if (unit.empty()) continue;
      } else {
        unit = {static_cast<int>(i)};
      }
      if (seen.insert(unit).second) units.push_back(std::move(unit));
    }
  }

  // discard internally non-rigid units; build the compatibility graph
  std::vector<std::vector<int>> good;
  for (auto& u : units) {
    bool ok = true;
    for (int a : u)
      for (int b : u)
        if (ext1_dim(w, pool[a], pool[b]) != 0) ok = false;
    if (ok) good.push_back(std::move(u));
  }
  int n = static_cast<int>(good.size());
  std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool ok = true;
      for (int a : good[i])
        for (int b : good[j]) {
          if (ext1_dim(w, pool[a], pool[b]) != 0) ok = false;
          if (ext1_dim(w, pool[b], pool[a]) != 0) ok = false;
        }
      compat[i][j] = compat[j][i] = ok;
    }

  long want = tilting_rank(w);
  std::vector<long> weight(n);
  for (int i = 0; i < n; ++i) weight[i] = static_cast<long>(good[i].size());
  // suffix bound for pruning
  std::vector<long> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + weight[i];

  std::vector<SheafSum> sums;
  std::vector<int> chosen;
  long nodes = 0;
  auto dfs = [&](auto&& self, int idx, long remaining) -> void {
    if (remaining == 0) {
      SheafSum T;
      for (int u : chosen)
        for (int s : good[u]) T.items.push_back(pool[s]);
      T.normalize();
      sums.push_back(std::move(T));
      if (static_cast<long>(sums.size()) > opt.sum_budget)
        throw std::runtime_error("survey found too many tilting sums for the budget");
      return;
    }
    if (idx == n || suffix[idx] < remaining) return;
    if (++nodes > opt.search_budget) throw std::runtime_error("survey search budget exceeded");
    // include idx when it fits and stays compatible
    if (weight[idx] <= remaining) {
      bool ok = true;
      for (int u : chosen)
        if (!compat[u][idx]) ok = false;
      if (ok) {
        chosen.push_back(idx);
        self(self, idx + 1, remaining - weight[idx]);
        chosen.pop_back();
      }
    }
    self(self, idx + 1, remaining);
  };
  dfs(dfs, 0, want);
  result.sums_found = static_cast<long>(sums.size());
  std::sort(sums.begin(), sums.end(), [](const SheafSum& a, const SheafSum& b) {
    return a.items < b.items;
  });

  // pair each sum with its presentation, dedup by the equivalence proxy
  for (auto& T : sums) {
    AlgebraPresentation pres = end_algebra(w, T);
    bool placed = false;
    for (auto& e : result.entries) {
      if (presentation_equivalent(e.end_alg, pres, opt.cap)) {
        e.members.push_back(T);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    SurveyEntry e;
    e.representative = T;
    e.members = {T};
    e.q_per_tube.assign(w.count(), 0);
    for (const auto& s : T.items)
      if (s.kind == SheafSymbol::Kind::Simple) ++e.q_per_tube[s.tube];
    e.tau2_stable = is_tau2_stable(w, T);
    e.end_alg = std::move(pres);
    result.entries.push_back(std::move(e));
  }
  return result;
}

}  // namespace wpline
