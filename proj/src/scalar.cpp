#include "liecheck/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace liecheck {

// ----------------------------------------------------------------- registry

namespace {

std::mutex g_param_mutex;
std::vector<std::string>& param_names() {
  static std::vector<std::string> names;
  return names;
}

}  // namespace

Param Param::intern(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_param_mutex);
  auto& names = param_names();
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return Param(static_cast<int>(k));
  if (names.size() >= kMaxParams)
    throw std::length_error("parameter registry is full (max " +
                            std::to_string(kMaxParams) + ")");
  names.push_back(name);
  return Param(static_cast<int>(names.size() - 1));
}

Param Param::lookup(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_param_mutex);
  auto& names = param_names();
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return Param(static_cast<int>(k));
  throw std::out_of_range("unknown parameter: " + name);
}

const std::string& Param::name() const {
  std::lock_guard<std::mutex> lock(g_param_mutex);
  return param_names().at(static_cast<std::size_t>(id_));
}

std::vector<std::string> registered_params() {
  std::lock_guard<std::mutex> lock(g_param_mutex);
  return param_names();
}

// ----------------------------------------------------------------- monomial

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int k = 0; k < kMaxParams; ++k) {
    int e = pexp[static_cast<std::size_t>(k)] + o.pexp[static_cast<std::size_t>(k)];
    if (e > 200) throw overflow_error("parameter exponent overflow");
    r.pexp[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e);
  }
  r.upow = upow + o.upow;
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  auto names = registered_params();
  for (int k = 0; k < kMaxParams; ++k) {
    int e = pexp[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(static_cast<std::size_t>(k));
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (upow != 0) {
    if (!out.empty()) out += "*";
    out += "u^" + std::to_string(upow);
  }
  return out;
}

// ------------------------------------------------------------------- scalar

Scalar Scalar::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Scalar s;
  for (auto& term : t) {
    if (term.coeff.is_zero()) continue;
    if (!s.terms_.empty() && s.terms_.back().mono == term.mono) {
      s.terms_.back().coeff += term.coeff;
      if (s.terms_.back().coeff.is_zero()) s.terms_.pop_back();
    } else {
      s.terms_.push_back(std::move(term));
    }
  }
  return s;
}

Scalar Scalar::param(Param p) {
  Scalar s;
  Monomial m;
  m.pexp[static_cast<std::size_t>(p.id())] = 1;
  s.terms_.push_back(Term{m, BaseNumber(1)});
  return s;
}

Scalar Scalar::u_power(int k) {
  Scalar s;
  Monomial m;
  m.upow = k;
  s.terms_.push_back(Term{m, BaseNumber(1)});
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::vector<Scalar::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Scalar::from_terms(std::move(t));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::vector<Scalar::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      t.push_back(Scalar::Term{x.mono * y.mono, x.coeff * y.coeff});
  return Scalar::from_terms(std::move(t));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1);
  Scalar base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

Scalar Scalar::conjugate() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.coeff = t.coeff.conjugate();
  return s;
}

Scalar Scalar::u_shift(int k) const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.mono.upow += k;
  std::sort(s.terms_.begin(), s.terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return s;
}

Scalar Scalar::substitute(const std::map<Param, Scalar>& values) const {
  Scalar out;
  for (const auto& t : terms_) {
    Scalar piece(t.coeff);
    Monomial rest;
    rest.upow = t.mono.upow;
    for (int k = 0; k < kMaxParams; ++k) {
      int e = t.mono.pexp[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      bool replaced = false;
      for (const auto& [p, v] : values) {
        if (p.id() == k) {
          piece *= v.pow(static_cast<unsigned>(e));
          replaced = true;
          break;
        }
      }
      if (!replaced) rest.pexp[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e);
    }
    Scalar mono_scalar;
    mono_scalar.terms_.push_back(Term{rest, BaseNumber(1)});
    out += piece * mono_scalar;
  }
  return out;
}

Scalar Scalar::part_upow_positive() const {
  Scalar s;
  for (const auto& t : terms_)
    if (t.mono.upow > 0) s.terms_.push_back(t);
  return s;
}

Scalar Scalar::part_upow_zero() const {
  Scalar s;
  for (const auto& t : terms_)
    if (t.mono.upow == 0) s.terms_.push_back(t);
  return s;
}

Scalar Scalar::part_upow_negative() const {
  Scalar s;
  for (const auto& t : terms_)
    if (t.mono.upow < 0) s.terms_.push_back(t);
  return s;
}

int Scalar::max_upow() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.upow > m) m = t.mono.upow;
    first = false;
  }
  return m;
}

Scalar Scalar::limit_u_to_infinity() const {
  Scalar pos = part_upow_positive();
  if (!pos.is_zero())
    throw divergent_limit_error("divergent terms at u->infinity: " +
                                pos.to_string());
  return part_upow_zero();
}

Scalar Scalar::inverse_constant() const {
  auto b = as_base();
  if (!b || b->is_zero())
    throw std::domain_error("inverse of a non-constant or zero scalar");
  return Scalar(b->inverse());
}

std::vector<Param> Scalar::params_used() const {
  std::vector<Param> out;
  for (int k = 0; k < kMaxParams; ++k) {
    for (const auto& t : terms_) {
      if (t.mono.pexp[static_cast<std::size_t>(k)] != 0) {
        out.push_back(Param::lookup(registered_params().at(static_cast<std::size_t>(k))));
        break;
      }
    }
  }
  return out;
}

bool Scalar::contains(Param p) const {
  for (const auto& t : terms_)
    if (t.mono.pexp[static_cast<std::size_t>(p.id())] != 0) return true;
  return false;
}

int Scalar::degree_in(Param p) const {
  int d = 0;
  for (const auto& t : terms_)
    d = std::max(d, static_cast<int>(t.mono.pexp[static_cast<std::size_t>(p.id())]));
  return d;
}

Scalar Scalar::coeff_of_power(Param p, int k) const {
  Scalar s;
  for (const auto& t : terms_) {
    if (t.mono.pexp[static_cast<std::size_t>(p.id())] != k) continue;
    Term stripped = t;
    stripped.mono.pexp[static_cast<std::size_t>(p.id())] = 0;
    s.terms_.push_back(stripped);
  }
  return from_terms(std::move(s.terms_));
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string() + ")";
    std::string m = t.mono.to_string();
    if (!m.empty()) out += "*" + m;
  }
  return out;
}

}  // namespace liecheck
