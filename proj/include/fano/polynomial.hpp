#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/textexpr.hpp"

namespace fano {

inline bool needs_parens(const Rational&) { return false; }
inline bool needs_parens(const Cyclotomic& c) { return c.is_compound(); }

// Sparse polynomial over a field K in an ordered list of named variables.
// A polynomial with an empty variable list is a constant and adapts to the
// variables of whatever it is combined with.
template <class K>
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, K>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(K(c)) {}
  Polynomial(const K& c) {
    if (!fano::is_zero(c)) terms_.emplace(Exponents{}, c);
  }
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const K& c) {
    Polynomial p(std::move(vars));
    if (!fano::is_zero(c)) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static Polynomial variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw DimensionMismatch("variable index out of range");
    Polynomial p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), K(1));
    return p;
  }

  static Polynomial variable(std::vector<std::string> vars, std::string_view name) {
    return variable(vars, index_in(vars, name));
  }

  static Polynomial monomial(std::vector<std::string> vars, Exponents e, const K& c) {
    if (e.size() != vars.size()) throw DimensionMismatch("exponent length differs from variable count");
    Polynomial p(std::move(vars));
    if (!fano::is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
  }
  // Constant term value (zero when absent).
  K constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? K(0) : it->second;
  }

  K coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }
  int degree_in(std::string_view name) const { return degree_in(index_of(name)); }

  // Lowest total degree among the terms; -1 for zero.
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int k = static_cast<int>(degree_of(e));
      if (d < 0 || k < d) d = k;
    }
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = degree_of(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree_of(t.first) == d; });
  }

  Polynomial homogeneous_part(unsigned d) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  // Terms of total degree < d.
  Polynomial truncated(unsigned d) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) < d) out.terms_.emplace(e, c);
    return out;
  }

  std::size_t index_of(std::string_view name) const { return index_in(vars_, name); }

  // Same polynomial viewed over a larger or permuted variable list.
  Polynomial with_variables(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = index_in(vars, vars_[i]);
    Polynomial out(vars);
    for (const auto& [e, c] : terms_) {
      Exponents ne(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) { return accumulate(o, false); }
  Polynomial& operator-=(const Polynomial& o) { return accumulate(o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(common_vars(a, b));
    if (a.is_constant()) return b.scaled(a.terms_.begin()->second).with_variables(common_vars(a, b));
    if (b.is_constant()) return a.scaled(b.terms_.begin()->second).with_variables(common_vars(a, b));
    std::vector<std::string> vars = common_vars(a, b);
    Polynomial out(vars);
    Exponents e(vars.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (fano::is_zero(it->second)) out.terms_.erase(it);
        }
      }
    return out;
  }

  Polynomial scaled(const K& k) const {
    if (fano::is_zero(k)) return Polynomial(vars_);
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
  }

  friend Polynomial operator*(const K& k, const Polynomial& p) { return p.scaled(k); }
  friend Polynomial operator*(const Polynomial& p, const K& k) { return p.scaled(k); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_ || a.is_constant() || b.is_constant()) {
      if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
      if (a.vars_ != b.vars_) return false;
      return a.terms_ == b.terms_;
    }
    return false;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out = constant(vars_, K(1));
    Polynomial base = *this;
    for (; e; e >>= 1) {
      if (e & 1) out = out * base;
      if (e > 1) base = base * base;
    }
    return out;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents ne = e;
      --ne[var];
      out.add_term(ne, c * K(static_cast<long>(e[var])));
    }
    return out;
  }
  Polynomial derivative(std::string_view name) const { return derivative(index_of(name)); }

  // Coefficient of var^k, as a polynomial in the same variables (var absent).
  Polynomial coefficient_in(std::size_t var, unsigned k) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_)
      if (e[var] == k) {
        Exponents ne = e;
        ne[var] = 0;
        out.terms_.emplace(std::move(ne), c);
      }
    return out;
  }

  K evaluate(const std::vector<K>& point) const {
    if (point.size() != vars_.size() && !is_constant()) throw DimensionMismatch("evaluation point has wrong length");
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t = t * fano::pow(point[i], e[i]);
      acc += t;
    }
    return acc;
  }

  // Set one variable to a constant, keeping the variable list.
  Polynomial specialize(std::size_t var, const K& value) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      ne[var] = 0;
      out.add_term(ne, c * fano::pow(value, e[var]));
    }
    return out;
  }

  // Replace variable i by images[i]; all images share one variable list.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (images.size() != vars_.size()) throw DimensionMismatch("compose: need one image per variable");
    std::vector<std::string> target;
    for (const auto& im : images)
      if (!im.is_constant() || !im.vars_.empty()) {
        if (target.empty())
          target = im.vars_;
        else if (!im.vars_.empty() && im.vars_ != target)
          throw DimensionMismatch("compose: images over different variables");
      }
    Polynomial out(target);
    std::vector<std::vector<Polynomial>> powers(vars_.size());
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(target, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, K(1)));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i].with_variables(target));
        t = t * cache[e[i]];
      }
      out += t;
    }
    return out;
  }

  // Exact quotient self / d, or nullopt when d does not divide self.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero();
    std::vector<std::string> vars = common_vars(*this, d);
    Polynomial r = with_variables(vars);
    Polynomial dd = d.with_variables(vars);
    Polynomial q(vars);
    const auto& [le, lc] = *dd.terms_.rbegin();
    K lcinv = K(1) / lc;
    while (!r.is_zero()) {
      const auto& [re, rc] = *r.terms_.rbegin();
      Exponents qe(vars.size());
      for (std::size_t i = 0; i < qe.size(); ++i) {
        if (re[i] < le[i]) return std::nullopt;
        qe[i] = re[i] - le[i];
      }
      Polynomial t = monomial(vars, qe, rc * lcinv);
      q += t;
      r -= t * dd;
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const typename TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
      unsigned dx = degree_of(x->first), dy = degree_of(y->first);
      if (dx != dy) return dx > dy;
      return x->first > y->first;
    });
    std::string out;
    for (auto* t : order) {
      std::string piece = term_text(t->first, t->second);
      if (!out.empty() && piece[0] != '-') out += '+';
      out += piece;
    }
    return out;
  }

  static Polynomial parse(std::string_view text, const std::vector<std::string>& vars);

  void add_term(const Exponents& e, const K& c) {
    if (fano::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (fano::is_zero(it->second)) terms_.erase(it);
    }
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  static unsigned degree_of(const Exponents& e) {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    return d;
  }

  static std::size_t index_in(const std::vector<std::string>& vars, std::string_view name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw DimensionMismatch("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars.begin());
  }

  static std::vector<std::string> common_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_) return a.vars_;
    if (a.vars_.empty() && a.is_constant()) return b.vars_;
    if (b.vars_.empty() && b.is_constant()) return a.vars_;
    throw DimensionMismatch("polynomials over different variable lists");
  }

  Polynomial& accumulate(const Polynomial& o, bool subtract) {
    std::vector<std::string> vars = common_vars(*this, o);
    if (vars != vars_) *this = with_variables(vars);
    Polynomial rhs = o.with_variables(vars);
    for (const auto& [e, c] : rhs.terms_) add_term(e, subtract ? -c : c);
    return *this;
  }

  std::string term_text(const Exponents& e, const K& c) const {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) return to_text(c);
    if (c == K(1)) return mono;
    if (c == K(-1)) return "-" + mono;
    if (needs_parens(c)) return "(" + to_text(c) + ")*" + mono;
    return to_text(c) + "*" + mono;
  }
};

template <class K>
inline bool is_zero(const Polynomial<K>& p) {
  return p.is_zero();
}
template <class K>
inline std::string to_text(const Polynomial<K>& p) {
  return p.to_string();
}
template <class K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
  return os << p.to_string();
}

namespace detail {
inline Cyclotomic named_scalar(std::string_view id, const Cyclotomic*) {
  if (id == "w") return Cyclotomic::omega();
  throw ParseError("unknown symbol '" + std::string(id) + "'");
}
inline Rational named_scalar(std::string_view id, const Rational*) {
  throw ParseError("unknown symbol '" + std::string(id) + "'");
}
}  // namespace detail

template <class K>
Polynomial<K> Polynomial<K>::parse(std::string_view text, const std::vector<std::string>& vars) {
  TextRing<Polynomial> ring{
      [&](const mpz_class& n) { return constant(vars, K(Rational(n))); },
      [&](std::string_view id) -> Polynomial {
        auto it = std::find(vars.begin(), vars.end(), id);
        if (it != vars.end()) return variable(vars, static_cast<std::size_t>(it - vars.begin()));
        return constant(vars, detail::named_scalar(id, static_cast<const K*>(nullptr)));
      },
      [&](const Polynomial& x, const Polynomial& y) -> Polynomial {
        if (!y.is_constant()) throw ParseError("division by a non-constant polynomial");
        if (y.is_zero()) throw DivisionByZero();
        return x.scaled(K(1) / y.constant_term());
      },
      constant(vars, K(1))};
  return read_expression(text, ring).with_variables(vars);
}

using MultiPoly = Polynomial<Cyclotomic>;

inline std::vector<std::string> numbered_variables(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace fano
