#pragma once

#include <string>
#include <vector>

#include "fano/elimination.hpp"
#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/matrix.hpp"
#include "fano/polynomial.hpp"

namespace fano {

inline const std::vector<std::string>& slice_variables() {
  static const std::vector<std::string> ab{"a", "b"};
  return ab;
}

// Germ of a two-dimensional slice of the cone {f = g = 0} through P that is
// transversal to the cone over a curve with tangent dP. The slice is
// P + a N1 + b N2 + c1 W1 + c2 W2 with N1, N2 tangent and c1, c2 power series
// in (a, b) solved from f = g = 0, exact up to total degree below `precision`.
struct NormalSlice {
  std::vector<MultiPoly> coords;
  unsigned precision = 0;
};

inline NormalSlice normal_slice(const MultiPoly& f, const MultiPoly& g, const std::vector<Cyclotomic>& P,
                                const std::vector<Cyclotomic>& dP, unsigned precision) {
  const std::size_t n = P.size();
  if (f.nvars() != n || g.nvars() != n || dP.size() != n) throw DimensionMismatch("slice point has wrong length");
  if (!f.evaluate(P).is_zero() || !g.evaluate(P).is_zero()) throw InvariantViolation("slice point is not on f = g = 0");
  CycMatrix A(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    A(0, j) = f.derivative(j).evaluate(P);
    A(1, j) = g.derivative(j).evaluate(P);
  }
  if (A.rank() != 2) throw InvariantViolation("f = g = 0 is singular at the slice point");

  const auto tangent = A.nullspace();
  std::vector<std::vector<Cyclotomic>> span{P, dP}, N;
  for (const auto& v : tangent) {
    if (N.size() == 2) break;
    auto trial = span;
    trial.push_back(v);
    if (CycMatrix::from_rows(trial).rank() == trial.size()) {
      span = trial;
      N.push_back(v);
    }
  }
  if (N.size() != 2 || CycMatrix::from_rows({P, dP}).rank() != 2)
    throw InvariantViolation("curve tangent is degenerate at the slice point");

  std::vector<std::vector<Cyclotomic>> W, cover = tangent;
  for (std::size_t i = 0; i < n && W.size() < 2; ++i) {
    std::vector<Cyclotomic> e(n, Cyclotomic(0));
    e[i] = Cyclotomic(1);
    auto trial = cover;
    trial.push_back(e);
    if (CycMatrix::from_rows(trial).rank() == trial.size()) {
      cover = trial;
      W.push_back(e);
    }
  }
  CycMatrix J(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t j = 0; j < n; ++j) J(r, c) += A(r, j) * W[c][j];
  const CycMatrix Ji = *J.inverse();

  const auto& ab = slice_variables();
  const MultiPoly a = MultiPoly::variable(ab, std::size_t{0}), b = MultiPoly::variable(ab, 1);
  MultiPoly c1(ab), c2(ab);
  auto point = [&] {
    std::vector<MultiPoly> x;
    for (std::size_t j = 0; j < n; ++j)
      x.push_back(MultiPoly::constant(ab, P[j]) + a.scaled(N[0][j]) + b.scaled(N[1][j]) + c1.scaled(W[0][j]) +
                  c2.scaled(W[1][j]));
    return x;
  };
  // Chord iteration with the constant Jacobian: each pass fixes one more degree.
  for (unsigned it = 0; it <= precision; ++it) {
    auto x = point();
    MultiPoly rf = f.compose(x).truncated(precision), rg = g.compose(x).truncated(precision);
    c1 = (c1 - rf.scaled(Ji(0, 0)) - rg.scaled(Ji(0, 1))).truncated(precision);
    c2 = (c2 - rf.scaled(Ji(1, 0)) - rg.scaled(Ji(1, 1))).truncated(precision);
  }
  NormalSlice out;
  out.coords = point();
  out.precision = precision;
  if (!f.compose(out.coords).truncated(precision).is_zero() || !g.compose(out.coords).truncated(precision).is_zero())
    throw InvariantViolation("slice series did not converge to the requested precision");
  return out;
}

inline MultiPoly restrict_to_slice(const MultiPoly& h, const NormalSlice& s) {
  return h.compose(s.coords).truncated(s.precision);
}

namespace detail {

// b = 0 or a = r b: the tangent lines shared by two binary forms of degrees m1, m2.
struct TangentLines {
  bool atInfinity = false;  // the line b = 0
  std::vector<Cyclotomic> slopes;
};

inline TangentLines common_tangents(const MultiPoly& L1, int m1, const MultiPoly& L2, int m2) {
  TangentLines out;
  auto dehom = [](const MultiPoly& L) { return CycUniPoly::from_multi(L.specialize(1, Cyclotomic(1)), 0); };
  const CycUniPoly u1 = dehom(L1), u2 = dehom(L2);
  out.atInfinity = u1.degree() < m1 && u2.degree() < m2;
  const CycUniPoly g = CycUniPoly::gcd(u1, u2);
  if (g.degree() <= 0) return out;
  if (g.degree() == 1) {
    out.slopes.push_back(-g[0] / g[1]);
    return out;
  }
  RootSearch rs = roots_among(g, small_cyclotomics(6, 6));
  if (!rs.complete) throw InvariantViolation("common tangent cone does not split over small elements of Q(w)");
  out.slopes = rs.roots;
  return out;
}

}  // namespace detail

// Intersection multiplicity at the origin of two plane curve germs known modulo
// terms of total degree >= precision, by Noether's formula: the product of the
// orders plus the multiplicities at the common points of the first blow-up.
inline long local_intersection(const MultiPoly& p1, const MultiPoly& p2, unsigned precision, std::string* trace = nullptr,
                               int depth = 0) {
  const int m1 = p1.order(), m2 = p2.order();
  if (m1 < 0 || m2 < 0 || m1 >= static_cast<int>(precision) || m2 >= static_cast<int>(precision))
    throw InvariantViolation("series precision exhausted while resolving the intersection");
  long total = static_cast<long>(m1) * m2;
  if (trace) *trace += std::string(2 * depth, ' ') + "orders " + std::to_string(m1) + "," + std::to_string(m2) + "\n";
  if (m1 == 0 || m2 == 0) return total;

  const MultiPoly L1 = p1.homogeneous_part(m1), L2 = p2.homogeneous_part(m2);
  const auto shared = detail::common_tangents(L1, m1, L2, m2);
  const unsigned next = precision - static_cast<unsigned>(std::max(m1, m2));
  const auto& ab = slice_variables();
  const MultiPoly a = MultiPoly::variable(ab, std::size_t{0}), b = MultiPoly::variable(ab, 1);

  auto recurse = [&](const std::vector<MultiPoly>& chart, const MultiPoly& divisor) {
    auto strict = [&](const MultiPoly& p, int m) {
      MultiPoly q = p.compose(chart);
      for (int k = 0; k < m; ++k) q = *q.divide_exact(divisor);
      return q.truncated(next);
    };
    return local_intersection(strict(p1, m1), strict(p2, m2), next, trace, depth + 1);
  };
  for (const auto& r : shared.slopes)
    total += recurse({b * (a + MultiPoly::constant(ab, r)), b}, b);
  if (shared.atInfinity) total += recurse({a, a * b}, a);
  return total;
}

}  // namespace fano
