#include "wpline/sheaf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wpline {

SheafSymbol line_bundle(const LVec& a) {
  SheafSymbol s;
  s.kind = SheafSymbol::Kind::Line;
  s.twist = a;
  return s;
}

SheafSymbol exc_simple(const Weights& w, int tube, int index) {
  if (tube < 0 || tube >= w.count()) throw std::domain_error("tube index out of range");
  if (w.p(tube) < 2) throw std::domain_error("exceptional simples live at weighted points only");
  if (index < 1 || index > w.p(tube)) throw std::domain_error("simple index out of range");
  SheafSymbol s;
  s.kind = SheafSymbol::Kind::Simple;
  s.tube = tube;
  s.index = index;
  s.twist = LVec{};
  return s;
}

std::string symbol_str(const SheafSymbol& s) {
  std::ostringstream os;
  if (s.kind == SheafSymbol::Kind::Line) {
    os << "O(" << lv_str(s.twist) << ")";
  } else {
    os << "S(" << (s.tube + 1) << ',' << s.index << ")";
  }
  return os.str();
}

SheafSymbol symbol_parse(const Weights& w, const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.rfind("O(", 0) == 0 && s.back() == ')')
    return line_bundle(lv_parse(w, s.substr(2, s.size() - 3)));
  if (s.rfind("S(", 0) == 0 && s.back() == ')') {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::domain_error("bad simple: " + text);
    int tube = std::stoi(s.substr(2, comma - 2)) - 1;
    int idx = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
    return exc_simple(w, tube, idx);
  }
  throw std::domain_error("bad sheaf symbol: " + text);
}

K0Class k0_of(const SheafSymbol& s) {
  K0Class x;
  x.coeff[s] = 1;
  return x;
}

K0Class k0_add(const K0Class& a, const K0Class& b) {
  K0Class x = a;
  for (const auto& [s, k] : b.coeff) {
    x.coeff[s] += k;
    if (x.coeff[s] == 0) x.coeff.erase(s);
  }
  return x;
}

K0Class k0_scale(long k, const K0Class& a) {
  K0Class x;
  if (k == 0) return x;
  for (const auto& [s, c] : a.coeff) x.coeff[s] = k * c;
  return x;
}

long k0_rank(const K0Class& x) {
  long r = 0;
  for (const auto& [s, k] : x.coeff)
    if (s.kind == SheafSymbol::Kind::Line) r += k;
  return r;
}

long k0_degree(const Weights& w, const K0Class& x) {
  long d = 0;
  for (const auto& [s, k] : x.coeff) {
    if (s.kind == SheafSymbol::Kind::Line)
      d += k * lv_delta(w, s.twist);
    else
      d += k * (w.lcm() / w.p(s.tube));
  }
  return d;
}

namespace {

// Euler form on line-bundle classes.
long chi_line(const Weights& w, const LVec& a, const LVec& b) {
  LVec omega = lv_omega(w);
  return dim_R(w, lv_sub(w, b, a)) - dim_R(w, lv_add(w, omega, lv_sub(w, a, b)));
}

// [S_{i,m}] = [O((1-m)x_i)] - [O(-m x_i)].
std::vector<std::pair<LVec, long>> line_expansion(const Weights& w, const SheafSymbol& s) {
  if (s.kind == SheafSymbol::Kind::Line) return {{s.twist, 1}};
  LVec xi = lv_x(w, s.tube);
  LVec hi = lv_scale(w, 1 - s.index, xi);
  LVec lo = lv_scale(w, -s.index, xi);
  return {{hi, 1}, {lo, -1}};
}

}  // namespace

long euler_form(const Weights& w, const K0Class& x, const K0Class& y) {
  long total = 0;
  for (const auto& [sx, kx] : x.coeff) {
    auto ex = line_expansion(w, sx);
    for (const auto& [sy, ky] : y.coeff) {
      auto ey = line_expansion(w, sy);
      for (const auto& [a, ca] : ex)
        for (const auto& [b, cb] : ey) total += kx * ky * ca * cb * chi_line(w, a, b);
    }
  }
  return total;
}

// Twisting by v moves S_{i,m} to S_{i, m - v_i}; with omega_i = p_i - 1 this
// gives tau S_{i,m} = S_{i,m+1}, the direction forced by the Euler form.
SheafSymbol tau(const Weights& w, const SheafSymbol& X) { return tau_k(w, X, 1); }

SheafSymbol tau_k(const Weights& w, const SheafSymbol& X, long k) {
  if (X.kind == SheafSymbol::Kind::Line)
    return line_bundle(lv_add(w, X.twist, lv_scale(w, k, lv_omega(w))));
  int p = w.p(X.tube);
  long m = (X.index - 1 + k) % p;
  if (m < 0) m += p;
  return exc_simple(w, X.tube, static_cast<int>(m) + 1);
}

long hom_dim(const Weights& w, const SheafSymbol& X, const SheafSymbol& Y) {
  using K = SheafSymbol::Kind;
  if (X.kind == K::Line && Y.kind == K::Line)
    return dim_R(w, lv_sub(w, Y.twist, X.twist));
  if (X.kind == K::Simple && Y.kind == K::Line) return 0;  // no torsion-to-bundle maps
  if (X.kind == K::Simple && Y.kind == K::Simple)
    return (X.tube == Y.tube && X.index == Y.index) ? 1 : 0;
  // line -> simple: Ext^1 vanishes by Serre duality, so Hom equals the Euler form.
  long chi = euler_form(w, k0_of(X), k0_of(Y));
  if (chi < 0) throw std::logic_error("negative Hom dimension from Euler form");
  return chi;
}

long ext1_dim(const Weights& w, const SheafSymbol& X, const SheafSymbol& Y) {
  return hom_dim(w, Y, tau(w, X));  // Serre duality
}

std::optional<Rat> slope(const Weights& w, const K0Class& x) {
  long rk = k0_rank(x);
  long deg = k0_degree(w, x);
  if (rk == 0 && deg == 0) throw std::domain_error("slope of the zero class");
  if (rk == 0) return std::nullopt;
  return rat_of(deg, rk);
}

void SheafSum::normalize() { std::sort(items.begin(), items.end()); }

bool SheafSum::is_basic() const {
  for (size_t i = 1; i < items.size(); ++i)
    if (items[i] == items[i - 1]) return false;
  return true;
}

long tilting_rank(const Weights& w) {
  long n = 2;
  for (int i = 0; i < w.count(); ++i) n += w.p(i) - 1;
  return n;
}

bool is_rigid(const Weights& w, const SheafSum& T) {
  for (const auto& X : T.items)
    for (const auto& Y : T.items)
      if (ext1_dim(w, X, Y) != 0) return false;
  return true;
}

bool is_tilting(const Weights& w, const SheafSum& T) {
  if (!T.is_basic()) return false;
  if (static_cast<long>(T.items.size()) != tilting_rank(w)) return false;
  return is_rigid(w, T);
}

bool is_tau2_stable(const Weights& w, const SheafSum& T) {
  SheafSum image;
  for (const auto& X : T.items) image.items.push_back(tau_k(w, X, 2));
  image.normalize();
  SheafSum sorted = T;
  sorted.normalize();
  return image == sorted;
}

long cluster_hom_dim(const Weights& w, const SheafSymbol& X, const SheafSymbol& Y) {
  return hom_dim(w, X, Y) + ext1_dim(w, X, tau_k(w, Y, -1));
}

SheafSum canonical_sum(const Weights& w) {
  SheafSum T;
  for (const LVec& v : window_twists(w, lv_zero(w), lv_c(w))) T.items.push_back(line_bundle(v));
  T.normalize();
  return T;
}

std::vector<LVec> window_twists(const Weights& w, const LVec& lo, const LVec& hi) {
  std::vector<LVec> out;
  LVec span = lv_sub(w, hi, lo);
  if (!lv_is_nonneg(span)) return out;
  std::vector<int> mi(w.count(), 0);
  // enumerate u = m*c + sum mi*x_i with 0 <= u <= span, then shift by lo
  while (true) {
    LVec u;
    u.mi = mi;
    for (long m = 0;; ++m) {
      u.m = m;
      if (!lv_leq(w, u, span)) break;
      out.push_back(lv_add(w, lo, u));
    }
    int i = 0;
    for (; i < w.count(); ++i) {
      if (mi[i] + 1 < w.p(i)) {
        ++mi[i];
        break;
      }
      mi[i] = 0;
    }
    if (i == w.count()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wpline
