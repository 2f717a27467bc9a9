#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka/rational.hpp"

namespace tanaka {

using Exponents = std::vector<int>;

inline int exp_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded-lexicographic order on exponent vectors; fixes the canonical term
/// order used everywhere (serialization, monomial bases, golden files).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da < db;
    return a < b;  // lexicographic tie-break
  }
};

/// Multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  MPoly() : nvars_(0) {}
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static MPoly variable(std::size_t nvars, std::size_t idx) {
    if (idx >= nvars) throw std::invalid_argument("MPoly: variable index out of range");
    MPoly p(nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    p.terms_[e] = Rational(1);
    return p;
  }

  static MPoly monomial(std::size_t nvars, const Exponents& e, const Rational& c) {
    if (e.size() != nvars) throw std::invalid_argument("MPoly: exponent size mismatch");
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
      if (exp_degree(e) != d) return false;
    return true;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  MPoly operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_vars(b);
    MPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MPoly scaled(const Rational& c) const {
    MPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }

  MPoly derivative(std::size_t var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      r.add_term(d, c * Rational(e[var]));
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("MPoly: eval arity mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      total += t;
    }
    return total;
  }

  /// Substitutes values[i] (all over a common variable set) for variable i.
  MPoly substitute(const std::vector<MPoly>& values) const {
    if (values.size() != nvars_)
      throw std::invalid_argument("MPoly: substitute arity mismatch");
    const std::size_t m = values.empty() ? 0 : values[0].nvars();
    // Cache powers of each substituted value.
    std::vector<std::vector<MPoly>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
      powers[i].push_back(MPoly::constant(m, Rational(1)));
    MPoly out(m);
    for (const auto& [e, c] : terms_) {
      MPoly term = MPoly::constant(m, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        while (static_cast<int>(powers[i].size()) <= e[i])
          powers[i].push_back(powers[i].back() * values[i]);
        if (e[i] > 0) term = term * powers[i][e[i]];
      }
      out += term;
    }
    return out;
  }

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Diagnostic printing with variables named v0, v1, ...
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        os << "*v" << i;
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check_vars(const MPoly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("MPoly: variable-set mismatch");
  }

  std::size_t nvars_;
  TermMap terms_;
};

/// Poisson bracket on Q[x_1..x_r, p_1..p_r] for the symplectic form
///   dx_1 ^ dp_r - dx_2 ^ dp_{r-1} + ... + (-1)^{r+1} dx_r ^ dp_1,
/// i.e. {f,g} = sum_i (-1)^{i+1} (df/dx_i dg/dp_{r+1-i} - df/dp_{r+1-i} dg/dx_i).
/// Variables are ordered x_1..x_r then p_1..p_r.
inline MPoly poisson(const MPoly& f, const MPoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("poisson: variable-set mismatch");
  if (f.nvars() % 2 != 0) throw std::invalid_argument("poisson: needs 2r variables");
  const std::size_t r = f.nvars() / 2;
  MPoly out(f.nvars());
  for (std::size_t i = 1; i <= r; ++i) {
    const std::size_t xi = i - 1;        // x_i
    const std::size_t pj = 2 * r - i;    // p_{r+1-i}
    const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
    out += (f.derivative(xi) * g.derivative(pj)).scaled(sign);
    out -= (f.derivative(pj) * g.derivative(xi)).scaled(sign);
  }
  return out;
}

/// All exponent vectors of total degree d in n variables, in grlex order.
inline std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  Exponents cur(n, 0);
  auto rec = [&](auto&& self, std::size_t var, int rem) -> void {
    if (var + 1 == n) {
      cur[var] = rem;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      cur[var] = k;
      self(self, var + 1, rem - k);
      cur[var] = 0;
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace tanaka
