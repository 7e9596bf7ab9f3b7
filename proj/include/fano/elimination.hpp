#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/matrix.hpp"
#include "fano/polynomial.hpp"

namespace fano {

// Dense univariate polynomial over a field; c[i] is the coefficient of t^i.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static UniPoly from_multi(const Polynomial<K>& p, std::size_t var) {
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != var && e[i]) throw DimensionMismatch("polynomial is not univariate in the requested variable");
    std::vector<K> c(p.is_zero() ? 0 : p.degree_in(var) + 1, K(0));
    for (const auto& [e, k] : p.terms()) c[e.empty() ? 0 : e[var]] = k;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K lead() const { return c_.empty() ? K(0) : c_.back(); }
  K operator[](std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

  K evaluate(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<K> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    K inv = K(1) / c_.back();
    std::vector<K> d(c_);
    for (auto& x : d) x = x * inv;
    return UniPoly(std::move(d));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<K> out(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q b + r with deg r < deg b.
  static std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<K> q(a.degree() - b.degree() + 1, K(0));
    K inv = K(1) / b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      std::size_t shift = a.degree() - b.degree();
      K factor = a.lead() * inv;
      q[shift] = factor;
      for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i + shift] -= factor * b.c_[i];
      a.trim();
    }
    return {UniPoly(std::move(q)), a};
  }

  // Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::vector<std::string> names{var};
    Polynomial<K> p(names);
    for (std::size_t i = 0; i < c_.size(); ++i) p.add_term({static_cast<unsigned>(i)}, c_[i]);
    return p.to_string();
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && fano::is_zero(c_.back())) c_.pop_back();
  }
};

using CycUniPoly = UniPoly<Cyclotomic>;

// Sylvester resultant of p and q with respect to one variable.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  const int m = p.degree_in(var), n = q.degree_in(var);
  if (m <= 0 || n <= 0) throw InvariantViolation("resultant needs positive degree in the eliminated variable");
  const std::vector<std::string>& vars = p.variables();
  if (q.variables() != vars) throw DimensionMismatch("resultant operands over different variables");
  std::vector<MultiPoly> pc, qc;
  for (int k = m; k >= 0; --k) pc.push_back(p.coefficient_in(var, k));
  for (int k = n; k >= 0; --k) qc.push_back(q.coefficient_in(var, k));
  const std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) s(i, j) = MultiPoly(vars);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = pc[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = qc[k];
  return bareiss_det(s).with_variables(vars);
}

inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  return resultant(p, q, p.index_of(var));
}

// Outcome of the chart-by-chart smoothness test of a plane curve.
struct SmoothnessCertificate {
  bool smooth = false;
  unsigned attempts = 0;
  // For each chart: degree of gcd of the two eliminants (0 means no common zero).
  std::vector<int> chartGcdDegrees;
  std::string detail;
};

namespace detail {

// No common zero of the three polynomials in two variables (u, v): eliminate u
// against the pivot, then the two eliminants in v must be coprime.
inline std::optional<int> eliminant_gcd_degree(const std::vector<MultiPoly>& polys) {
  std::size_t pivot = polys.size();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    int d = polys[i].degree_in(std::size_t{0});
    if (d > 0 && (pivot == polys.size() || d < polys[pivot].degree_in(std::size_t{0}))) pivot = i;
  }
  if (pivot == polys.size()) return std::nullopt;
  std::vector<CycUniPoly> eliminants;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i == pivot) continue;
    if (polys[i].is_zero()) continue;
    MultiPoly r = polys[i].degree_in(std::size_t{0}) > 0 ? resultant(polys[pivot], polys[i], std::size_t{0}) : polys[i];
    eliminants.push_back(CycUniPoly::from_multi(r, 1));
  }
  if (eliminants.size() < 2) return std::nullopt;
  CycUniPoly g = eliminants[0];
  for (std::size_t i = 1; i < eliminants.size(); ++i) g = CycUniPoly::gcd(g, eliminants[i]);
  if (g.is_zero()) return std::nullopt;
  return g.degree();
}

inline CycMatrix random_unimodular_change(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Cyclotomic(coef(rng), coef(rng));
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace detail

// A homogeneous plane curve F(x0,x1,x2) = 0 is smooth iff its three partial
// derivatives have no common projective zero. Each affine chart is checked by
// resultants; a nonconstant gcd only means the projection was unlucky, so the
// test retries after a seeded random change of coordinates.
inline SmoothnessCertificate plane_curve_smoothness(const MultiPoly& F, unsigned maxAttempts = 8,
                                                    std::uint64_t seed = 20240611) {
  if (F.nvars() != 3 || !F.is_homogeneous() || F.total_degree() < 1)
    throw InvariantViolation("plane_curve_smoothness needs a homogeneous form in three variables");
  std::mt19937_64 rng(seed);
  SmoothnessCertificate cert;
  CycMatrix change = CycMatrix::identity(3);
  for (unsigned attempt = 0; attempt < maxAttempts; ++attempt) {
    cert.attempts = attempt + 1;
    cert.chartGcdDegrees.clear();
    MultiPoly G = substitute_linear(F, change);
    bool ok = true;
    for (std::size_t chart = 0; chart < 3 && ok; ++chart) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < 3; ++i)
        if (i != chart) keep.push_back(i);
      const std::vector<std::string> uv{"u", "v"};
      std::vector<MultiPoly> images(3);
      images[chart] = MultiPoly::constant(uv, Cyclotomic(1));
      images[keep[0]] = MultiPoly::variable(uv, 0);
      images[keep[1]] = MultiPoly::variable(uv, 1);
      std::vector<MultiPoly> partials;
      for (std::size_t i = 0; i < 3; ++i) partials.push_back(G.derivative(i).compose(images));
      auto deg = detail::eliminant_gcd_degree(partials);
      cert.chartGcdDegrees.push_back(deg.value_or(-1));
      ok = deg && *deg == 0;
    }
    if (ok) {
      cert.smooth = true;
      cert.detail = "partials have coprime eliminants on all three charts";
      return cert;
    }
    change = detail::random_unimodular_change(rng, 3);
  }
  cert.detail = "could not certify: eliminants share a factor after all attempts";
  return cert;
}

// Squarefreeness of a binary form given by its dehomogenization p(l) of
// nominal degree d: distinct roots in P^1.
inline bool binary_form_squarefree(const CycUniPoly& p, int nominalDegree) {
  if (p.is_zero()) return false;
  if (p.degree() < nominalDegree - 1) return false;
  return CycUniPoly::gcd(p, p.derivative()).degree() == 0;
}

// Roots of p among the given candidates, with a certificate that p splits
// completely over them (so no other roots exist).
struct RootSearch {
  std::vector<Cyclotomic> roots;
  bool complete = false;
};

inline RootSearch roots_among(const CycUniPoly& p, const std::vector<Cyclotomic>& candidates) {
  RootSearch out;
  if (p.is_zero()) return out;
  CycUniPoly rest = p.monic();
  for (const auto& c : candidates) {
    while (rest.degree() > 0 && rest.evaluate(c).is_zero()) {
      if (std::find(out.roots.begin(), out.roots.end(), c) == out.roots.end()) out.roots.push_back(c);
      rest = CycUniPoly::divmod(rest, CycUniPoly({-c, Cyclotomic(1)})).first;
    }
  }
  out.complete = rest.degree() == 0;
  return out;
}

// Small elements (p + q w)/d of Q(w), used as root and point candidates.
inline std::vector<Cyclotomic> small_cyclotomics(int bound, int maxDen = 1) {
  std::vector<Cyclotomic> out;
  for (int d = 1; d <= maxDen; ++d)
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b) {
        Cyclotomic c(Rational(a, d), Rational(b, d));
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
  return out;
}

}  // namespace fano
