#include "wpline/lgroup.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wpline {

Weights::Weights(std::vector<int> p, std::vector<Rat> extra_lambda) : p_(std::move(p)) {
  if (p_.size() < 3) throw std::domain_error("weight type needs at least three points");
  for (int w : p_)
    if (w < 1) throw std::domain_error("weights must be >= 1");
  lcm_ = 1;
  for (int w : p_) lcm_ = std::lcm(lcm_, static_cast<long>(w));
  lambda_.resize(p_.size());
  // lambda_1 = infinity (slot 0, unused), lambda_2 = 0, lambda_3 = 1.
  lambda_[1] = 0;
  lambda_[2] = 1;
  for (size_t i = 3; i < p_.size(); ++i) {
    size_t k = i - 3;
    lambda_[i] = k < extra_lambda.size() ? extra_lambda[k] : Rat(static_cast<long>(i) - 1);
  }
  std::set<Rat> seen;
  for (size_t i = 1; i < p_.size(); ++i) {
    if (!seen.insert(lambda_[i]).second)
      throw std::domain_error("parameter values must be pairwise distinct");
  }
}

const Rat& Weights::lambda(int i) const {
  if (i <= 0 || i >= count()) throw std::domain_error("lambda index out of range");
  return lambda_[i];
}

std::string Weights::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) os << ',';
    os << p_[i];
  }
  for (size_t i = 3; i < p_.size(); ++i) {
    if (lambda_[i] != Rat(static_cast<long>(i) - 1))
      os << ";lambda" << (i + 1) << '=' << rat_str(lambda_[i]);
  }
  return os.str();
}

Weights Weights::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  std::vector<int> p;
  {
    std::stringstream ss(parts[0]);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      p.push_back(std::stoi(tok));
    }
  }
  std::vector<Rat> extra(p.size() > 3 ? p.size() - 3 : 0, Rat(0));
  for (size_t i = 3; i < p.size(); ++i) extra[i - 3] = Rat(static_cast<long>(i));
  // re-derive defaults as in the constructor
  for (size_t i = 3; i < p.size(); ++i) extra[i - 3] = Rat(static_cast<long>(i) - 1);
  for (size_t k = 1; k < parts.size(); ++k) {
    const std::string& opt = parts[k];
    auto eq = opt.find('=');
    if (eq == std::string::npos || opt.rfind("lambda", 0) != 0)
      throw std::domain_error("bad weight-type option: " + opt);
    int idx = std::stoi(opt.substr(6, eq - 6));  // 1-based point index
    if (idx < 4 || idx > static_cast<int>(p.size()))
      throw std::domain_error("lambda index out of range in: " + opt);
    extra[idx - 4] = rat_parse(opt.substr(eq + 1));
  }
  return Weights(std::move(p), std::move(extra));
}

void check_same_type(const Weights& w, const LVec& a) {
  if (static_cast<int>(a.mi.size()) != w.count())
    throw std::domain_error("element does not belong to this grading group");
  for (int i = 0; i < w.count(); ++i)
    if (a.mi[i] < 0 || a.mi[i] >= w.p(i))
      throw std::domain_error("element not in normal form for this weight type");
}

LVec lv_zero(const Weights& w) {
  LVec v;
  v.mi.assign(w.count(), 0);
  return v;
}

LVec lv_c(const Weights& w) {
  LVec v = lv_zero(w);
  v.m = 1;
  return v;
}

LVec lv_x(const Weights& w, int i) {
  LVec v = lv_zero(w);
  if (w.p(i) == 1) {
    v.m = 1;  // p_i = 1 makes the generator equal to c
  } else {
    v.mi[i] = 1;
  }
  return v;
}

LVec lv_make(const Weights& w, long m, const std::vector<long>& coeffs) {
  if (static_cast<int>(coeffs.size()) != w.count())
    throw std::domain_error("coefficient count does not match weight type");
  LVec v;
  v.m = m;
  v.mi.assign(w.count(), 0);
  for (int i = 0; i < w.count(); ++i) {
    long p = w.p(i);
    long r = coeffs[i] % p;
    if (r < 0) r += p;
    v.m += (coeffs[i] - r) / p;
    v.mi[i] = static_cast<int>(r);
  }
  return v;
}

LVec lv_add(const Weights& w, const LVec& a, const LVec& b) {
  check_same_type(w, a);
  check_same_type(w, b);
  LVec v;
  v.m = a.m + b.m;
  v.mi.assign(w.count(), 0);
  for (int i = 0; i < w.count(); ++i) {
    int s = a.mi[i] + b.mi[i];
    if (s >= w.p(i)) {
      s -= w.p(i);
      ++v.m;
    }
    v.mi[i] = s;
  }
  return v;
}

LVec lv_neg(const Weights& w, const LVec& a) {
  check_same_type(w, a);
  LVec v;
  v.m = -a.m;
  v.mi.assign(w.count(), 0);
  for (int i = 0; i < w.count(); ++i) {
    if (a.mi[i] == 0) continue;
    v.mi[i] = w.p(i) - a.mi[i];  // -x = (p-1)x - c carried below
    --v.m;
  }
  return v;
}

LVec lv_sub(const Weights& w, const LVec& a, const LVec& b) { return lv_add(w, a, lv_neg(w, b)); }

LVec lv_scale(const Weights& w, long k, const LVec& a) {
  check_same_type(w, a);
  std::vector<long> coeffs(w.count());
  for (int i = 0; i < w.count(); ++i) coeffs[i] = k * static_cast<long>(a.mi[i]);
  return lv_make(w, k * a.m, coeffs);
}

LVec lv_omega(const Weights& w) {
  std::vector<long> coeffs(w.count(), -1);
  return lv_make(w, w.count() - 2, coeffs);
}

long lv_delta(const Weights& w, const LVec& a) {
  check_same_type(w, a);
  long d = a.m * w.lcm();
  for (int i = 0; i < w.count(); ++i) d += static_cast<long>(a.mi[i]) * (w.lcm() / w.p(i));
  return d;
}

Rat euler_char(const Weights& w) { return rat_of(-lv_delta(w, lv_omega(w)), w.lcm()); }

bool lv_is_nonneg(const LVec& a) { return a.m >= 0; }

bool lv_leq(const Weights& w, const LVec& a, const LVec& b) {
  return lv_is_nonneg(lv_sub(w, b, a));
}

std::optional<long> lv_order(const Weights& w, const LVec& a) {
  check_same_type(w, a);
  if (lv_delta(w, a) != 0) return std::nullopt;  // rank-1 group: torsion = ker(delta)
  LVec zero = lv_zero(w);
  LVec acc = a;
  long bound = 1;
  for (int i = 0; i < w.count(); ++i) bound *= w.p(i);
  for (long k = 1; k <= bound; ++k) {
    if (acc == zero) return k;
    acc = lv_add(w, acc, a);
  }
  throw std::logic_error("torsion element of unexpected order");
}

bool is_tubular(const Weights& w) { return euler_char(w) == 0; }

std::string lv_str(const LVec& a) {
  std::ostringstream os;
  os << a.m << '|';
  for (size_t i = 0; i < a.mi.size(); ++i) {
    if (i) os << ',';
    os << a.mi[i];
  }
  return os.str();
}

LVec lv_parse(const Weights& w, const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::domain_error("expected m|m1,...,mt: " + s);
  long m = std::stol(s.substr(0, bar));
  std::vector<long> coeffs;
  std::stringstream ss(s.substr(bar + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(std::stol(tok));
  if (static_cast<int>(coeffs.size()) != w.count())
    throw std::domain_error("coefficient count does not match weight type: " + s);
  return lv_make(w, m, coeffs);
}

}  // namespace wpline
