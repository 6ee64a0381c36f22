#include "nca/poly.hpp"

#include <sstream>

#include "nca/error.hpp"

namespace nca {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (a[i].first > b[j].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  // Walk both sparse vectors over increasing variable ids. A missing
  // variable counts as exponent 0.
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int va = i < a.size() ? a[i].first : INT32_MAX;
    int vb = j < b.size() ? b[j].first : INT32_MAX;
    if (va < vb) return false;  // a has positive exponent where b has 0: a larger
    if (vb < va) return true;
    if (a[i].second != b[j].second) return a[i].second < b[j].second;
    ++i, ++j;
  }
  return false;
}

ExactPoly::ExactPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

ExactPoly ExactPoly::variable(int var) {
  ExactPoly p;
  p.terms_.emplace(Monomial{{var, 1}}, Rational(1));
  return p;
}

ExactPoly ExactPoly::term(const Rational& c, const Monomial& m) {
  ExactPoly p;
  p.add_term(c, m);
  return p;
}

int ExactPoly::degree() const {
  if (terms_.empty()) return -1;
  return monomial_degree(terms_.rbegin()->first);
}

std::pair<Monomial, Rational> ExactPoly::leading_term() const {
  if (terms_.empty()) throw error("zero-polynomial", "leading term of 0");
  return *terms_.rbegin();
}

void ExactPoly::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
  ExactPoly out = *this;
  out += o;
  return out;
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
  ExactPoly out = *this;
  out -= o;
  return out;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  ExactPoly out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add_term(ca * cb, monomial_mul(ma, mb));
  return out;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExactPoly ExactPoly::scaled(const Rational& c) const {
  ExactPoly out;
  if (c == 0) return out;
  for (auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Rational ExactPoly::eval(const std::map<int, Rational>& assignment) const {
  Rational total(0);
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (auto& [v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw error("missing-assignment",
                    "no value assigned to variable " + std::to_string(v));
      t *= pow_rational(it->second, static_cast<unsigned>(e));
    }
    total += t;
  }
  return total;
}

ExactPoly ExactPoly::rename_variables(const std::map<int, int>& var_map) const {
  ExactPoly out;
  for (auto& [m, c] : terms_) {
    Monomial renamed;
    for (auto& [v, e] : m) {
      auto it = var_map.find(v);
      int w = it == var_map.end() ? v : it->second;
      renamed = monomial_mul(renamed, Monomial{{w, e}});
    }
    out.add_term(c, renamed);
  }
  return out;
}

std::string ExactPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print leading terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || it->first.empty()) os << a.get_str();
    for (auto& [v, e] : it->first) {
      os << "x" << v;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

ExactPoly difference_product(const std::vector<std::pair<int, int>>& pairs) {
  ExactPoly out{Rational(1)};
  for (auto& [i, j] : pairs) {
    if (i == j)
      throw error("degenerate-factor",
                  "difference factor with i = j = " + std::to_string(i));
    out = out * (ExactPoly::variable(i) - ExactPoly::variable(j));
  }
  return out;
}

}  // namespace nca
