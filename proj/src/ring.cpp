#include "wpline/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace wpline {

LVec mono_degree(const Weights& w, const RMonomial& m) {
  std::vector<long> coeffs(m.e.begin(), m.e.end());
  return lv_make(w, 0, coeffs);
}

std::string mono_str(const Weights& w, const RMonomial& m) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < w.count(); ++i) {
    if (m.e[i] == 0) continue;
    if (any) os << '*';
    os << 'x' << (i + 1);
    if (m.e[i] != 1) os << '^' << m.e[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

long dim_R(const Weights& w, const LVec& a) {
  check_same_type(w, a);
  return a.m >= 0 ? a.m + 1 : 0;
}

std::vector<RMonomial> r_basis(const Weights& w, const LVec& a) {
  check_same_type(w, a);
  std::vector<RMonomial> out;
  if (a.m < 0) return out;
  for (long j = 0; j <= a.m; ++j) {
    RMonomial m;
    m.e.assign(w.count(), 0);
    for (int i = 2; i < w.count(); ++i) m.e[i] = a.mi[i];
    m.e[0] = a.mi[0] + w.p(0) * static_cast<int>(j);
    m.e[1] = a.mi[1] + w.p(1) * static_cast<int>(a.m - j);
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void reduce_into(const Weights& w, std::vector<int> expo, Rat coeff,
                 std::map<RMonomial, Rat>& out) {
  if (coeff == 0) return;
  for (int i = 2; i < w.count(); ++i) {
    if (expo[i] >= w.p(i)) {
      // x_i^{p_i} = x_1^{p_1} - lambda_i x_0^{p_0}
      expo[i] -= w.p(i);
      std::vector<int> e1 = expo;
      e1[1] += w.p(1);
      reduce_into(w, std::move(e1), coeff, out);
      std::vector<int> e0 = std::move(expo);
      e0[0] += w.p(0);
      reduce_into(w, std::move(e0), -w.lambda(i) * coeff, out);
      return;
    }
  }
  RMonomial m{std::move(expo)};
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(std::move(m), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) out.erase(it);
  }
}

RElement r_zero(const Weights& w, const LVec& degree) {
  check_same_type(w, degree);
  return RElement{degree, {}};
}

RElement r_monomial(const Weights& w, const RMonomial& m, const Rat& c) {
  RElement r;
  r.degree = mono_degree(w, m);
  if (c != 0) r.terms[m] = c;
  return r;
}

RElement r_add(const Weights& w, const RElement& u, const RElement& v) {
  if (!(u.degree == v.degree)) throw std::domain_error("adding elements of different degree");
  RElement r = u;
  for (const auto& [m, c] : v.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  (void)w;
  return r;
}

RElement r_scale(const RElement& u, const Rat& c) {
  RElement r;
  r.degree = u.degree;
  if (c == 0) return r;
  for (const auto& [m, k] : u.terms) r.terms[m] = k * c;
  return r;
}

RElement r_multiply(const Weights& w, const RElement& u, const RElement& v) {
  RElement r;
  r.degree = lv_add(w, u.degree, v.degree);
  for (const auto& [mu, cu] : u.terms) {
    for (const auto& [mv, cv] : v.terms) {
      std::vector<int> expo(w.count());
      for (int i = 0; i < w.count(); ++i) expo[i] = mu.e[i] + mv.e[i];
      reduce_into(w, std::move(expo), cu * cv, r.terms);
    }
  }
  return r;
}

namespace {

int pivot_var(int tube) { return tube == 0 ? 1 : 0; }

// Normalizes a Laurent monomial of R/(x_tube): bounded exponents are pushed
// into the pivot variable. Single-branch, so the result is one monomial.
void tube_normalize(const Weights& w, int tube, std::vector<int>& e, Rat& coeff) {
  int piv = pivot_var(tube);
  for (int k = 2; k < w.count(); ++k) {
    if (k == tube) continue;
    while (e[k] >= w.p(k)) {
      e[k] -= w.p(k);
      if (tube == 0) {
        e[1] += w.p(1);  // x_k^{p_k} = x_1^{p_1} on x_0 = 0
      } else if (tube == 1) {
        e[0] += w.p(0);
        coeff *= -w.lambda(k);  // x_k^{p_k} = -lambda_k x_0^{p_0} on x_1 = 0
      } else {
        e[0] += w.p(0);
        coeff *= w.lambda(tube) - w.lambda(k);
      }
    }
  }
  if (tube >= 2) {
    while (e[1] >= w.p(1)) {
      e[1] -= w.p(1);
      e[0] += w.p(0);
      coeff *= w.lambda(tube);  // x_1^{p_1} = lambda_tube x_0^{p_0} on x_tube = 0
    }
  }
  (void)piv;
}

}  // namespace

TubeMonomial tube_canonical(const Weights& w, int tube, const LVec& v) {
  check_same_type(w, v);
  if (v.mi[tube] != 0)
    throw std::domain_error("degree has nonzero residue at the marked point");
  int piv = pivot_var(tube);
  TubeMonomial m;
  m.e.assign(w.count(), 0);
  LVec partial = lv_zero(w);
  for (int j = 0; j < w.count(); ++j) {
    if (j == tube || j == piv) continue;
    m.e[j] = v.mi[j];
    partial = lv_add(w, partial, lv_scale(w, v.mi[j], lv_x(w, j)));
  }
  LVec rem = lv_sub(w, v, partial);
  m.e[piv] = rem.mi[piv] + w.p(piv) * static_cast<int>(rem.m);
  return m;
}

Rat transport_scalar(const Weights& w, int tube, const LVec& v, const RElement& f) {
  TubeMonomial mu = tube_canonical(w, tube, v);
  LVec target_deg = lv_add(w, v, f.degree);
  if (target_deg.mi[tube] != 0) return Rat(0);
  TubeMonomial target = tube_canonical(w, tube, target_deg);
  Rat total(0);
  for (const auto& [m, c] : f.terms) {
    if (m.e[tube] > 0) continue;  // x_tube-divisible monomials die in the germ
    std::vector<int> e(w.count());
    for (int i = 0; i < w.count(); ++i) e[i] = mu.e[i] + m.e[i];
    Rat coeff = c;
    tube_normalize(w, tube, e, coeff);
    if (e != target.e)
      throw std::logic_error("tube germ landed outside the canonical line");
    total += coeff;
  }
  return total;
}

}  // namespace wpline
