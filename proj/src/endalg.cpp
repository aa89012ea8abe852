#include "wpline/endalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wpline/linalg.hpp"

namespace wpline {

namespace {

// Basis morphism between two summands. Line-to-line morphisms are homogeneous
// ring elements; morphisms onto a simple are scalars against the canonical
// quotient of the source twist.
struct Mor {
  bool to_simple = false;
  RElement f;  // line -> line
  Rat scalar;  // line -> simple
};

struct HomSpaces {
  const Weights* w = nullptr;
  std::vector<SheafSymbol> sums;
  std::vector<std::vector<std::vector<Mor>>> hom;
  std::vector<std::vector<std::map<RMonomial, int>>> mono_index;

  int n() const { return static_cast<int>(sums.size()); }
  int dim(int i, int j) const { return static_cast<int>(hom[i][j].size()); }
};

int simple_ref_residue(const Weights& w, int tube, int index) {
  int p = w.p(tube);
  return ((1 - index) % p + p) % p;  // Hom(O(a), S_{i,m}) != 0 iff a_i = 1 - m
}

LVec simple_ref_twist(const Weights& w, int tube, int index) {
  return lv_scale(w, simple_ref_residue(w, tube, index), lv_x(w, tube));
}

HomSpaces build_hom_spaces(const Weights& w, const SheafSum& T) {
  HomSpaces H;
  H.w = &w;
  H.sums = T.items;
  int n = H.n();
  H.hom.assign(n, std::vector<std::vector<Mor>>(n));
  H.mono_index.assign(n, std::vector<std::map<RMonomial, int>>(n));
  for (int i = 0; i < n; ++i) {
    if (hom_dim(w, H.sums[i], H.sums[i]) != 1)
      throw std::logic_error("summand with non-trivial endomorphism ring");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const SheafSymbol& X = H.sums[i];
      const SheafSymbol& Y = H.sums[j];
      long d = hom_dim(w, X, Y);
      if (d == 0) continue;
      using K = SheafSymbol::Kind;
      if (X.kind == K::Line && Y.kind == K::Line) {
        auto basis = r_basis(w, lv_sub(w, Y.twist, X.twist));
        if (static_cast<long>(basis.size()) != d)
          throw std::logic_error("Hom basis construction failure (lines)");
        for (const auto& m : basis) {
          H.mono_index[i][j][m] = static_cast<int>(H.hom[i][j].size());
          Mor mor;
          mor.f = r_monomial(w, m);
          H.hom[i][j].push_back(std::move(mor));
        }
      } else if (X.kind == K::Line && Y.kind == K::Simple) {
        if (d != 1) throw std::logic_error("Hom basis construction failure (simple target)");
        int res = simple_ref_residue(w, Y.tube, Y.index);
        if (X.twist.mi[Y.tube] % w.p(Y.tube) != res)
          throw std::logic_error("Hom dimension and residue rule disagree");
        Mor mor;
        mor.to_simple = true;
        mor.scalar = 1;
        H.hom[i][j].push_back(std::move(mor));
      } else {
        throw std::logic_error("unexpected nonzero Hom out of a torsion summand");
      }
    }
  }
  return H;
}

// composite of basis morphisms x in Hom(i,j), y in Hom(j,l), in the basis of Hom(i,l)
QVec compose(const HomSpaces& H, int i, int j, int l, const Mor& x, const Mor& y) {
  const Weights& w = *H.w;
  QVec out(H.dim(i, l), Rat(0));
  if (H.dim(i, l) == 0) return out;
  if (!x.to_simple && !y.to_simple) {
    RElement prod = r_multiply(w, x.f, y.f);
    for (const auto& [m, c] : prod.terms) {
      auto it = H.mono_index[i][l].find(m);
      if (it == H.mono_index[i][l].end())
        throw std::logic_error("product left the monomial basis");
      out[it->second] += c;
    }
    return out;
  }
  if (!x.to_simple && y.to_simple) {
    // O(a_i) -f-> O(a_j) -q-> S: transport the germ of f along the tube
    const SheafSymbol& S = H.sums[l];
    LVec ref = simple_ref_twist(w, S.tube, S.index);
    LVec v = lv_sub(w, ref, H.sums[j].twist);
    out[0] = y.scalar * transport_scalar(w, S.tube, v, x.f);
    return out;
  }
  return out;  // nothing comes out of a simple
}

// x given in Hom(i,j) coordinates composed with the basis morphisms of Hom(j,l)
QVec compose_coords(const HomSpaces& H, int i, int j, int l, const QVec& x, int k_jl) {
  QVec out(H.dim(i, l), Rat(0));
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    if (x[k] == 0) continue;
    QVec part = compose(H, i, j, l, H.hom[i][j][k], H.hom[j][l][k_jl]);
    for (size_t t = 0; t < part.size(); ++t) out[t] += x[k] * part[t];
  }
  return out;
}

}  // namespace

long end_algebra_dim(const Weights& w, const SheafSum& T) {
  long total = 0;
  for (const auto& X : T.items)
    for (const auto& Y : T.items) total += hom_dim(w, X, Y);
  return total;
}

namespace {

// Same weights with all user parameters translated by a common offset; used
// to flag non-generic specializations by structural comparison.
Weights shifted_parameters(const Weights& w) {
  std::vector<int> p(w.count());
  for (int i = 0; i < w.count(); ++i) p[i] = w.p(i);
  for (long k = 997;; ++k) {
    std::vector<Rat> extra;
    bool ok = true;
    for (int i = 3; i < w.count(); ++i) {
      Rat v = w.lambda(i) + Rat(k);
      if (v == 0 || v == 1) ok = false;
      extra.push_back(v);
    }
    if (ok) return Weights(p, extra);
  }
}

AlgebraPresentation end_algebra_impl(const Weights& w, const SheafSum& T);

}  // namespace

AlgebraPresentation end_algebra(const Weights& w, const SheafSum& T) {
  AlgebraPresentation main = end_algebra_impl(w, T);
  if (w.count() > 3) {
    // the structure must not depend on the chosen generic parameters
    AlgebraPresentation other = end_algebra_impl(shifted_parameters(w), T);
    bool same = main.quiver.vertices.size() == other.quiver.vertices.size() &&
                main.quiver.arrows.size() == other.quiver.arrows.size() &&
                main.relations.size() == other.relations.size();
    for (size_t i = 0; same && i < main.quiver.arrows.size(); ++i)
      same = main.quiver.arrows[i].src == other.quiver.arrows[i].src &&
             main.quiver.arrows[i].dst == other.quiver.arrows[i].dst;
    if (!same)
      throw std::logic_error(
          "endomorphism structure changed under a parameter shift: "
          "non-generic specialization");
  }
  return main;
}

namespace {
AlgebraPresentation end_algebra_impl(const Weights& w, const SheafSum& T) {
  SheafSum sorted = T;
  sorted.normalize();
  if (!sorted.is_basic()) throw std::domain_error("end_algebra requires a basic sum");
  for (const auto& X : sorted.items)
    if (X.kind == SheafSymbol::Kind::Line) check_same_type(w, X.twist);

  HomSpaces H = build_hom_spaces(w, sorted);
  int n = H.n();

  auto fresh_spans = [&]() {
    std::vector<std::vector<RowSpan>> s;
    s.reserve(n);
    for (int i = 0; i < n; ++i) {
      std::vector<RowSpan> row;
      for (int j = 0; j < n; ++j) row.emplace_back(H.dim(i, j));
      s.push_back(std::move(row));
    }
    return s;
  };

  // rad^2 spans per ordered pair
  auto rad2 = fresh_spans();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j || H.dim(j, l) == 0 || H.dim(i, j) == 0 || l == i) continue;
        for (const auto& x : H.hom[i][j])
          for (int km = 0; km < H.dim(j, l); ++km)
            rad2[i][l].insert(compose(H, i, j, l, x, H.hom[j][l][km]));
      }
    }

  // arrows complete rad^2 to rad, chosen among the basis morphisms
  AlgebraPresentation pres;
  Quiver& q = pres.quiver;
  for (int i = 0; i < n; ++i) q.add_vertex(symbol_str(H.sums[i]));
  struct ArrowInfo {
    int i, j, k;
  };
  std::vector<ArrowInfo> arrows;
  std::set<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RowSpan span = rad2[i][j];
      for (int k = 0; k < H.dim(i, j); ++k) {
        QVec unit(H.dim(i, j), Rat(0));
        unit[k] = 1;
        if (!span.insert(std::move(unit))) continue;
        const Mor& m = H.hom[i][j][k];
        std::string base = m.to_simple ? "q" : mono_str(w, m.f.terms.begin()->first);
        std::string name = base;
        while (names.count(name)) name += "'";
        names.insert(name);
        q.add_arrow(name, i, j);
        arrows.push_back({i, j, k});
      }
    }

  // radical nilpotency of the realized algebra: smallest L with rad^L = 0
  int L = 1;
  {
    auto cur = fresh_spans();
    long mass = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int k = 0; k < H.dim(i, j); ++k) {
          QVec u(H.dim(i, j), Rat(0));
          u[k] = 1;
          if (cur[i][j].insert(std::move(u))) ++mass;
        }
      }
    while (mass > 0) {
      auto next = fresh_spans();
      mass = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || cur[i][j].dim() == 0) continue;
          for (const auto& x : cur[i][j].rows())
            for (int l = 0; l < n; ++l) {
              if (l == j || H.dim(j, l) == 0) continue;
              for (int km = 0; km < H.dim(j, l); ++km)
                if (next[i][l].insert(compose_coords(H, i, j, l, x, km))) ++mass;
            }
        }
      ++L;
      cur = std::move(next);
      if (L > 64) throw std::logic_error("radical fails to vanish");
    }
  }

  // enumerate paths of length <= L per ordered pair
  std::vector<std::vector<std::vector<std::vector<int>>>> paths(
      n, std::vector<std::vector<std::vector<int>>>(n));
  {
    std::vector<std::pair<int, std::vector<int>>> frontier;
    for (int v = 0; v < n; ++v) frontier.push_back({v, {}});
    for (int len = 1; len <= L; ++len) {
      std::vector<std::pair<int, std::vector<int>>> next;
      for (const auto& [at, word] : frontier)
        for (size_t a = 0; a < arrows.size(); ++a) {
          if (arrows[a].i != at) continue;
          auto nw = word;
          nw.push_back(static_cast<int>(a));
          int s = arrows[nw.front()].i;
          paths[s][arrows[a].j].push_back(nw);
          next.push_back({arrows[a].j, nw});
        }
      frontier = std::move(next);
      if (frontier.size() > 200000) throw std::runtime_error("path budget exceeded");
    }
  }

  auto eval_path = [&](const std::vector<int>& word) -> QVec {
    int i = arrows[word[0]].i;
    int j = arrows[word[0]].j;
    QVec v(H.dim(i, j), Rat(0));
    v[arrows[word[0]].k] = 1;
    for (size_t t = 1; t < word.size(); ++t) {
      v = compose_coords(H, i, j, arrows[word[t]].j, v, arrows[word[t]].k);
      j = arrows[word[t]].j;
    }
    return v;
  };

  // kernels of the evaluation map per pair
  std::vector<std::vector<QMat>> kern(n, std::vector<QMat>(n));
  std::vector<std::vector<std::map<std::vector<int>, int>>> pindex(
      n, std::vector<std::map<std::vector<int>, int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& plist = paths[i][j];
      if (plist.empty()) continue;
      std::sort(plist.begin(), plist.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });
      for (size_t c = 0; c < plist.size(); ++c) pindex[i][j][plist[c]] = static_cast<int>(c);
      int np = static_cast<int>(plist.size());
      QMat rows(H.dim(i, j), QVec(np, Rat(0)));
      for (int c = 0; c < np; ++c) {
        QVec v = eval_path(plist[c]);
        for (int r = 0; r < H.dim(i, j); ++r) rows[r][c] = v[r];
      }
      kern[i][j] = kernel_basis(rows, np);
    }

  // minimal generators: kernel vectors modulo J*I + I*J (computed in the
  // path algebra truncated above length L, where rad^L = 0)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (kern[i][j].empty()) continue;
      int np = static_cast<int>(paths[i][j].size());
      RowSpan consumed(np);
      for (size_t a = 0; a < arrows.size(); ++a) {
        // a . I(u, j) with a: i -> u
        if (arrows[a].i == i) {
          int u = arrows[a].j;
          for (const auto& kv : kern[u][j]) {
            QVec ext(np, Rat(0));
            for (size_t c = 0; c < paths[u][j].size(); ++c) {
              if (kv[c] == 0) continue;
              std::vector<int> word;
              word.push_back(static_cast<int>(a));
              word.insert(word.end(), paths[u][j][c].begin(), paths[u][j][c].end());
              auto it = pindex[i][j].find(word);
              if (it == pindex[i][j].end()) continue;  // beyond the cap: zero there
              ext[it->second] += kv[c];
            }
            consumed.insert(std::move(ext));
          }
        }
        // I(i, v) . a with a: v -> j
        if (arrows[a].j == j) {
          int v = arrows[a].i;
          for (const auto& kv : kern[i][v]) {
            QVec ext(np, Rat(0));
            for (size_t c = 0; c < paths[i][v].size(); ++c) {
              if (kv[c] == 0) continue;
              std::vector<int> word = paths[i][v][c];
              word.push_back(static_cast<int>(a));
              auto it = pindex[i][j].find(word);
              if (it == pindex[i][j].end()) continue;
              ext[it->second] += kv[c];
            }
            consumed.insert(std::move(ext));
          }
        }
      }
      for (const auto& kv : kern[i][j]) {
        if (consumed.contains(kv)) continue;
        consumed.insert(kv);
        PathPoly rel;
        for (int c = 0; c < np; ++c) {
          if (kv[c] == 0) continue;
          Path p;
          p.src = i;
          p.as = paths[i][j][c];
          rel.add_term(p, kv[c]);
        }
        pres.relations.push_back(std::move(rel));
      }
    }

  pres.validate();
  return pres;
}

}  // namespace

}  // namespace wpline
