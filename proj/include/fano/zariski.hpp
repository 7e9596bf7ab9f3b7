#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/chow.hpp"
#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/polynomial.hpp"

namespace fano {

inline const std::vector<std::string>& ray_variable() {
  static const std::vector<std::string> x{"x"};
  return x;
}

// Univariate polynomial in x with rational coefficients, as used for volumes.
inline Rational eval_x(const MultiPoly& p, const Rational& x) {
  Cyclotomic v = p.with_variables(ray_variable()).evaluate({Cyclotomic(x)});
  if (!v.is_rational()) throw InvariantViolation("volume polynomial has irrational coefficients");
  return v.re1();
}

// Exact integral of p(x) over [lo, hi].
inline Rational integrate_x(const MultiPoly& p, const Rational& lo, const Rational& hi) {
  MultiPoly q = p.with_variables(ray_variable());
  Rational acc(0);
  for (const auto& [e, c] : q.terms()) {
    if (!c.is_rational()) throw InvariantViolation("integrand has irrational coefficients");
    unsigned k = e[0] + 1;
    acc += c.re1() * (pow(hi, k) - pow(lo, k)) / Rational(static_cast<long>(k));
  }
  return acc;
}

struct NegativeTerm {
  std::string name;
  DivClass cls;
  Rational c0;  // coefficient c0 + c1 x
  Rational c1;
};

struct RayInterval {
  Rational lo;
  Rational hi;
  std::vector<NegativeTerm> neg;
};

// Zariski decompositions of L - xE along [0, tau], interval by interval.
struct RayCertificate {
  const ChowThreefold* ring = nullptr;
  DivClass L;
  DivClass E;
  Rational tau;
  std::vector<RayInterval> intervals;
  Rational A;
  std::vector<std::string> testCurves;
};

inline MultiPoly x_poly(const Rational& c0, const Rational& c1) {
  return MultiPoly::constant(ray_variable(), Cyclotomic(c0)) +
         MultiPoly::variable(ray_variable(), 0).scaled(Cyclotomic(c1));
}

// P(x) = L - x E - sum (c0 + c1 x) N_i on the given interval.
inline DivClass positive_part(const RayCertificate& cert, std::size_t k) {
  const RayInterval& iv = cert.intervals.at(k);
  MultiPoly x = MultiPoly::variable(ray_variable(), 0);
  DivClass P = cert.L - x * cert.E;
  for (const auto& n : iv.neg) P = P - x_poly(n.c0, n.c1) * n.cls;
  return P;
}

inline MultiPoly raw_volume(const RayCertificate& cert, std::size_t k) {
  DivClass P = positive_part(cert, k);
  return cert.ring->triple(P, P, P).with_variables(ray_variable());
}

inline Rational cube(const ChowThreefold& ring, const DivClass& D) { return ring.triple_value(D, D, D); }

// Sign of p' on [lo, hi] is <= 0 everywhere; p has degree <= 3.
inline bool nonincreasing_on(const MultiPoly& p, const Rational& lo, const Rational& hi) {
  MultiPoly d = p.with_variables(ray_variable()).derivative(std::size_t{0});
  if (eval_x(d, lo) > Rational(0) || eval_x(d, hi) > Rational(0)) return false;
  // Quadratic derivative: check its vertex when interior.
  Rational a = d.coefficient({2}).re1(), b = d.coefficient({1}).re1();
  if (!a.is_zero()) {
    Rational v = -b / (Rational(2) * a);
    if (lo < v && v < hi && eval_x(d, v) > Rational(0)) return false;
  }
  return true;
}

// Every checkable consequence of the certificate; empty string when valid.
inline std::string certificate_failure(const RayCertificate& cert) {
  if (!cert.ring) return "certificate has no ring";
  cert.ring->require(cert.L);
  cert.ring->require(cert.E);
  if (cert.tau < Rational(0)) return "tau >= 0";
  if (cert.tau.is_zero()) return cert.intervals.empty() ? "" : "zero-length ray has no intervals";
  if (cert.intervals.empty()) return "intervals cover [0, tau]";
  if (!cert.intervals.front().lo.is_zero()) return "intervals start at 0";
  if (cert.intervals.back().hi != cert.tau) return "intervals end at tau";
  for (std::size_t k = 0; k < cert.intervals.size(); ++k) {
    const auto& iv = cert.intervals[k];
    if (!(iv.lo < iv.hi)) return "interval " + std::to_string(k) + " is nonempty";
    if (k && cert.intervals[k - 1].hi != iv.lo) return "intervals are contiguous";
    for (const auto& n : iv.neg) {
      cert.ring->require(n.cls);
      if (n.c0 + n.c1 * iv.lo < Rational(0) || n.c0 + n.c1 * iv.hi < Rational(0))
        return "negative-part coefficient of " + n.name + " is >= 0 on interval " + std::to_string(k);
    }
    MultiPoly v = raw_volume(cert, k);
    if (v.total_degree() > 3) return "volume has degree <= 3";
    if (!nonincreasing_on(v, iv.lo, iv.hi)) return "volume is nonincreasing on interval " + std::to_string(k);
    if (k && eval_x(raw_volume(cert, k - 1), iv.lo) != eval_x(v, iv.lo))
      return "volume is continuous at x = " + iv.lo.to_string();
  }
  if (eval_x(raw_volume(cert, 0), Rational(0)) != cube(*cert.ring, cert.L)) return "vol(0) = L^3";
  if (!eval_x(raw_volume(cert, cert.intervals.size() - 1), cert.tau).is_zero()) return "vol(tau) = 0";
  return {};
}

inline void require_valid(const RayCertificate& cert) {
  std::string failure = certificate_failure(cert);
  if (!failure.empty()) throw InvariantViolation("certificate invariant violated: " + failure);
}

inline MultiPoly volume_polynomial(const RayCertificate& cert, std::size_t intervalIndex) {
  require_valid(cert);
  if (intervalIndex >= cert.intervals.size()) throw DimensionMismatch("interval index out of range");
  return raw_volume(cert, intervalIndex);
}

inline Rational s_partial(const RayCertificate& cert, const Rational& t) {
  require_valid(cert);
  if (t < Rational(0) || t > cert.tau) throw InvariantViolation("t must lie in [0, tau]");
  Rational acc(0);
  for (std::size_t k = 0; k < cert.intervals.size(); ++k) {
    const auto& iv = cert.intervals[k];
    if (!(iv.lo < t)) break;
    acc += integrate_x(raw_volume(cert, k), iv.lo, t < iv.hi ? t : iv.hi);
  }
  return acc / cube(*cert.ring, cert.L);
}

inline Rational s_value(const RayCertificate& cert) { return s_partial(cert, cert.tau); }

struct SBetaResult {
  Rational S;
  Rational A;
  Rational beta;
};

inline SBetaResult beta(const RayCertificate& cert, const Rational& A) {
  Rational S = s_value(cert);
  return {S, A, A - S};
}

// Same decomposition with the ray reparametrised by x -> x / c.
inline RayCertificate rescaled(const RayCertificate& cert, const Rational& c) {
  if (c <= Rational(0)) throw InvariantViolation("rescaling factor must be positive");
  RayCertificate out = cert;
  out.E = MultiPoly(Cyclotomic(c.inv())) * cert.E;
  out.tau = cert.tau * c;
  for (auto& iv : out.intervals) {
    iv.lo *= c;
    iv.hi *= c;
    for (auto& n : iv.neg) n.c1 /= c;
  }
  return out;
}

// Pairings P(x).curve at both ends of every interval; evidence of nefness only.
struct NefEvidence {
  bool allNonnegative = true;
  std::vector<std::string> lines;
};

inline NefEvidence nef_evidence(const RayCertificate& cert) {
  NefEvidence ev;
  for (const auto& name : cert.testCurves) {
    const CurveRecord& z = cert.ring->curve(name);
    for (std::size_t k = 0; k < cert.intervals.size(); ++k) {
      MultiPoly p = cert.ring->pair_with_curve(positive_part(cert, k), z);
      for (const Rational& x : {cert.intervals[k].lo, cert.intervals[k].hi}) {
        Rational v = eval_x(p, x);
        if (v < Rational(0)) ev.allNonnegative = false;
        ev.lines.push_back(name + " @ x=" + x.to_string() + ": " + v.to_string());
      }
    }
  }
  return ev;
}

// Affine inequality sum coef[i] * v_i + c >= 0 (or > 0 when strict).
struct LinearConstraint {
  std::vector<Rational> coef;
  Rational c;
  bool strict = false;

  Rational value(const std::vector<Rational>& pt) const {
    Rational acc = c;
    for (std::size_t i = 0; i < coef.size(); ++i) acc += coef[i] * pt[i];
    return acc;
  }
  bool holds(const std::vector<Rational>& pt) const {
    Rational v = value(pt);
    return strict ? v > Rational(0) : v >= Rational(0);
  }
};

struct PositivityVerdict {
  bool positive = false;
  std::optional<std::vector<Rational>> witness;  // point of the region where form <= 0
};

namespace detail {

// Fourier-Motzkin feasibility with strictness, returning a feasible point.
inline std::optional<std::vector<Rational>> fm_feasible_point(std::vector<LinearConstraint> cons, std::size_t nvars) {
  std::vector<std::vector<LinearConstraint>> stages{cons};
  for (std::size_t v = 0; v < nvars; ++v) {
    const auto& cur = stages.back();
    std::vector<LinearConstraint> next, pos, neg;
    for (const auto& k : cur) {
      int s = k.coef[v].sign();
      (s > 0 ? pos : s < 0 ? neg : next).push_back(k);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational mp = -n.coef[v], mn = p.coef[v];
        LinearConstraint k{std::vector<Rational>(nvars), p.c * mp + n.c * mn, p.strict || n.strict};
        for (std::size_t i = 0; i < nvars; ++i) k.coef[i] = p.coef[i] * mp + n.coef[i] * mn;
        k.coef[v] = Rational(0);
        next.push_back(std::move(k));
      }
    stages.push_back(std::move(next));
  }
  for (const auto& k : stages.back())
    if (!k.holds(std::vector<Rational>(nvars))) return std::nullopt;
  // Back-substitute, last eliminated variable first.
  std::vector<Rational> pt(nvars);
  for (std::size_t v = nvars; v-- > 0;) {
    std::optional<Rational> lower, upper;
    bool lowerStrict = false, upperStrict = false;
    for (const auto& k : stages[v]) {
      if (k.coef[v].is_zero()) continue;
      Rational saved = pt[v];
      pt[v] = Rational(0);
      Rational bound = -k.value(pt) / k.coef[v];
      pt[v] = saved;
      if (k.coef[v] > Rational(0)) {
        if (!lower || bound > *lower || (bound == *lower && k.strict)) {
          lower = bound;
          lowerStrict = k.strict;
        }
      } else if (!upper || bound < *upper || (bound == *upper && k.strict)) {
        upper = bound;
        upperStrict = k.strict;
      }
    }
    if (lower && upper)
      pt[v] = (*lower == *upper && !lowerStrict && !upperStrict) ? *lower : (*lower + *upper) / Rational(2);
    else if (lower)
      pt[v] = *lower + Rational(1);
    else if (upper)
      pt[v] = *upper - Rational(1);
    else
      pt[v] = Rational(0);
  }
  return pt;
}

}  // namespace detail

// form > 0 on the whole region, decided exactly: the region together with
// {form <= 0} must be empty. A witness is returned otherwise.
inline PositivityVerdict cone_positive(const LinearConstraint& form, const std::vector<LinearConstraint>& region) {
  std::size_t nvars = form.coef.size();
  for (const auto& k : region)
    if (k.coef.size() != nvars) throw DimensionMismatch("constraint dimension mismatch");
  std::vector<LinearConstraint> cons = region;
  LinearConstraint negated{form.coef, -form.c, false};
  for (auto& c : negated.coef) c = -c;
  cons.push_back(negated);
  auto pt = detail::fm_feasible_point(cons, nvars);
  if (!pt) return {true, std::nullopt};
  return {false, pt};
}

// Parse "7*b-2*a" style affine forms in the given variables.
inline LinearConstraint affine_form(const std::string& text, const std::vector<std::string>& vars, bool strict = false) {
  MultiPoly p = MultiPoly::parse(text, vars);
  if (p.total_degree() > 1) throw ParseError("form is not affine: '" + text + "'");
  LinearConstraint k{std::vector<Rational>(vars.size()), Rational(0), strict};
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw ParseError("form has irrational coefficients: '" + text + "'");
    bool found = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) {
        k.coef[i] = c.re1();
        found = true;
      }
    if (!found) k.c = c.re1();
  }
  return k;
}

}  // namespace fano
