#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/elimination.hpp"
#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/matrix.hpp"
#include "fano/polynomial.hpp"

namespace fano {

// Same polynomial over a sublist of its variables; the dropped ones must not occur.
inline MultiPoly drop_variables(const MultiPoly& p, const std::vector<std::string>& keep) {
  std::vector<std::size_t> where;
  for (const auto& v : keep) where.push_back(p.index_of(v));
  MultiPoly out(keep);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly::Exponents ne(keep.size(), 0);
    unsigned used = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) used += ne[i] = e[where[i]];
    unsigned total = 0;
    for (unsigned k : e) total += k;
    if (used != total) throw DimensionMismatch("drop_variables: a dropped variable occurs");
    out.add_term(ne, c);
  }
  return out;
}

// Plane {lambda x_k + mu x_{3+k} = 0, k = 0,1,2} in P^5.
struct PencilPlane {
  Cyclotomic lambda;
  Cyclotomic mu;

  // Projective equality of parameters.
  bool same_as(const PencilPlane& o) const { return (lambda * o.mu - mu * o.lambda).is_zero(); }
  std::string to_string() const { return "(" + lambda.to_string() + ":" + mu.to_string() + ")"; }
};

// 6x3 matrix B with x = B u spanning the plane.
inline CycMatrix plane_embedding(const PencilPlane& p) {
  if (p.lambda.is_zero() && p.mu.is_zero()) throw InvariantViolation("plane parameter (0:0)");
  CycMatrix B(6, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    if (!p.mu.is_zero()) {
      B(k, k) = p.mu;
      B(3 + k, k) = -p.lambda;
    } else {
      B(3 + k, k) = Cyclotomic(1);
    }
  }
  return B;
}

inline CycMatrix plane_equations(const PencilPlane& p) {
  CycMatrix A(3, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    A(k, k) = p.lambda;
    A(k, 3 + k) = p.mu;
  }
  return A;
}

inline const std::vector<std::string>& plane_variables() {
  static const std::vector<std::string> u{"u0", "u1", "u2"};
  return u;
}

inline MultiPoly restrict_to_plane(const MultiPoly& p, const PencilPlane& plane) {
  return restrict_to_subspace(p, plane_embedding(plane), plane_variables());
}

struct PencilSearch {
  std::vector<PencilPlane> planes;
  bool complete = false;
  CycUniPoly gcd;
};

// Planes of the pencil on which the restrictions of f and g are proportional
// (one of them may vanish). In the chart mu = 1 this is the common zero set of
// the 2x2 minors of the coefficient matrix, a univariate gcd in lambda; the
// search is complete when that gcd splits over the candidates.
inline PencilSearch invariant_planes(const MultiPoly& f, const MultiPoly& g, const std::vector<Cyclotomic>& candidates) {
  const std::vector<std::string> vars{"lam", "u0", "u1", "u2"};
  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < 3; ++k) images.push_back(MultiPoly::variable(vars, 1 + k));
  for (std::size_t k = 0; k < 3; ++k)
    images.push_back(-MultiPoly::variable(vars, std::size_t{0}) * MultiPoly::variable(vars, 1 + k));
  const MultiPoly fr = f.compose(images), gr = g.compose(images);

  auto columns = [](const MultiPoly& p) {
    std::map<MultiPoly::Exponents, std::vector<Cyclotomic>> out;
    for (const auto& [e, c] : p.terms()) {
      MultiPoly::Exponents u(e.begin() + 1, e.end());
      auto& v = out[u];
      if (v.size() <= e[0]) v.resize(e[0] + 1, Cyclotomic(0));
      v[e[0]] = c;
    }
    return out;
  };
  auto cf = columns(fr), cg = columns(gr);
  std::vector<MultiPoly::Exponents> keys;
  for (const auto& [k, v] : cf) keys.push_back(k);
  for (const auto& [k, v] : cg)
    if (!cf.count(k)) keys.push_back(k);
  auto get = [](const auto& m, const MultiPoly::Exponents& k) {
    auto it = m.find(k);
    return it == m.end() ? CycUniPoly() : CycUniPoly(it->second);
  };

  PencilSearch out;
  CycUniPoly acc;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      CycUniPoly minor = get(cf, keys[i]) * get(cg, keys[j]) - get(cf, keys[j]) * get(cg, keys[i]);
      acc = acc.is_zero() ? minor.monic() : CycUniPoly::gcd(acc, minor);
    }
  if (acc.is_zero()) throw InvariantViolation("restrictions are proportional on every plane of the pencil");
  out.gcd = acc;
  RootSearch rs = roots_among(acc, candidates);
  out.complete = rs.complete;

  PencilPlane atInfinity{Cyclotomic(1), Cyclotomic(0)};
  if (proportionality(restrict_to_plane(f, atInfinity), restrict_to_plane(g, atInfinity)).proportional() ||
      proportionality(restrict_to_plane(g, atInfinity), restrict_to_plane(f, atInfinity)).proportional())
    out.planes.push_back(atInfinity);
  for (const auto& r : rs.roots) out.planes.push_back({r, Cyclotomic(1)});
  return out;
}

// Two planes meet only at the origin of C^6 iff their six equations are independent.
inline bool planes_disjoint(const PencilPlane& a, const PencilPlane& b) {
  return CycMatrix::vstack(plane_equations(a), plane_equations(b)).rank() == 6;
}

// A smooth conic on a pencil plane with a rational parametrization of degree 2.
struct ParametrizedConic {
  std::string name;
  PencilPlane plane;
  MultiPoly equation;                // in u0, u1, u2
  std::vector<Cyclotomic> basePoint; // in plane coordinates
  std::vector<MultiPoly> point;      // P(t) in the six ambient coordinates
  std::vector<MultiPoly> velocity;   // dP/dt
};

inline const std::vector<std::string>& conic_parameter() {
  static const std::vector<std::string> t{"t"};
  return t;
}

// The conic cut on the plane by f and g: whichever restriction is nonzero.
inline MultiPoly conic_on_plane(const MultiPoly& f, const MultiPoly& g, const PencilPlane& plane) {
  MultiPoly fr = restrict_to_plane(f, plane);
  if (!fr.is_zero()) return fr;
  MultiPoly gr = restrict_to_plane(g, plane);
  if (gr.is_zero()) throw InvariantViolation("plane " + plane.to_string() + " lies in both quadrics");
  return gr;
}

// Points of q with coordinates in {0, +-1, +-w, +-w^2}, pairwise non-proportional.
inline std::vector<std::vector<Cyclotomic>> small_conic_points(const MultiPoly& q, std::size_t limit) {
  const Cyclotomic w = Cyclotomic::omega(), w2 = Cyclotomic::omega2();
  const std::vector<Cyclotomic> vals{0, 1, -1, w, -w, w2, -w2};
  std::vector<std::vector<Cyclotomic>> found;
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals) {
        if (found.size() >= limit) return found;
        std::vector<Cyclotomic> p{a, b, c};
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        if (!q.evaluate(p).is_zero()) continue;
        bool fresh = true;
        for (const auto& o : found)
          if (CycMatrix::from_rows({o, p}).rank() < 2) fresh = false;
        if (fresh) found.push_back(p);
      }
  return found;
}

// Lines through the base point P0 with direction D(t) meet the conic again at
// q(D) P0 - 2 B(P0, D) D.
inline ParametrizedConic parametrize_conic(std::string name, const MultiPoly& f, const MultiPoly& g,
                                           const PencilPlane& plane, std::size_t pointIndex = 0) {
  ParametrizedConic out;
  out.name = std::move(name);
  out.plane = plane;
  out.equation = conic_on_plane(f, g, plane);
  auto pts = small_conic_points(out.equation, pointIndex + 1);
  if (pts.size() <= pointIndex) throw InvariantViolation("no small rational point on conic " + out.name);
  out.basePoint = pts[pointIndex];

  const auto& tv = conic_parameter();
  const MultiPoly t = MultiPoly::variable(tv, std::size_t{0});
  std::vector<MultiPoly> D;
  if (!out.basePoint[0].is_zero())
    D = {MultiPoly(tv), MultiPoly::constant(tv, 1), t};
  else
    D = {MultiPoly::constant(tv, 1), MultiPoly(tv), t};
  const CycMatrix A = gram_matrix(out.equation);
  MultiPoly qD(tv), bPD(tv);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      qD += D[i] * D[j] * MultiPoly(A(i, j));
      bPD += D[j] * MultiPoly(out.basePoint[i] * A(i, j));
    }
  std::vector<MultiPoly> P;
  for (std::size_t i = 0; i < 3; ++i) P.push_back(qD * MultiPoly(out.basePoint[i]) - MultiPoly(2) * bPD * D[i]);
  if (!out.equation.compose(P).is_zero()) throw InvariantViolation("conic parametrization left the conic");

  const CycMatrix B = plane_embedding(plane);
  for (std::size_t r = 0; r < 6; ++r) {
    MultiPoly x(tv);
    for (std::size_t c = 0; c < 3; ++c) x += P[c] * MultiPoly(B(r, c));
    out.velocity.push_back(x.derivative(0));
    out.point.push_back(std::move(x));
  }
  return out;
}

enum class Incidence { No, Yes, Node, Cusp, Degenerate };

inline std::string to_string(Incidence v) {
  switch (v) {
    case Incidence::No: return "No";
    case Incidence::Yes: return "Yes";
    case Incidence::Node: return "Node";
    case Incidence::Cusp: return "Cusp";
    case Incidence::Degenerate: return "Degenerate";
  }
  return "?";
}

inline std::vector<MultiPoly> gradient_along(const MultiPoly& h, const std::vector<MultiPoly>& point) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < h.nvars(); ++i) out.push_back(h.derivative(i).compose(point));
  return out;
}

inline CycMatrix hessian(const MultiPoly& quadric) { return Cyclotomic(2) * gram_matrix(quadric); }

// Behaviour of the surface {h = 0} of the threefold {f = g = 0} along the
// conic, at its generic point. Everything is computed over Q(w)(t), with t the
// conic parameter, so no special point is involved.
inline Incidence classify_incidence(const MultiPoly& h, const MultiPoly& f, const MultiPoly& g,
                                    const ParametrizedConic& conic) {
  if (!proportionality(restrict_to_plane(h, conic.plane), conic.equation).proportional()) return Incidence::No;

  const auto gf = gradient_along(f, conic.point), gg = gradient_along(g, conic.point),
             gh = gradient_along(h, conic.point);
  PolyMatrix grads = PolyMatrix::from_rows({gf, gg, gh});
  const std::size_t r = bareiss_rank(grads);
  if (r == 3) return Incidence::Yes;
  if (r < 2) throw InvariantViolation("the threefold is singular along conic " + conic.name);

  std::optional<std::pair<std::size_t, std::size_t>> cols;
  for (std::size_t j = 0; j < 6 && !cols; ++j)
    for (std::size_t k = j + 1; k < 6 && !cols; ++k)
      if (!(gf[j] * gg[k] - gf[k] * gg[j]).is_zero()) cols = std::make_pair(j, k);
  const auto [j, k] = *cols;
  // d grad h = alpha grad f + beta grad g by Cramer's rule.
  const MultiPoly d = gf[j] * gg[k] - gf[k] * gg[j];
  const MultiPoly alpha = gh[j] * gg[k] - gh[k] * gg[j];
  const MultiPoly beta = gf[j] * gh[k] - gf[k] * gh[j];
  for (std::size_t c = 0; c < 6; ++c)
    if (!(d * gh[c] - alpha * gf[c] - beta * gg[c]).is_zero())
      throw InvariantViolation("gradient of h is not in the span of those of f and g");

  // Second-order part of h on the tangent space of the threefold, through the
  // bordered matrix [[H, A^T], [A, 0]] whose rank is 4 + rank(H on ker A).
  const CycMatrix Hf = hessian(f), Hg = hessian(g), Hh = hessian(h);
  PolyMatrix bordered(8, 8);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      bordered(a, b) = d * MultiPoly(Hh(a, b)) - alpha * MultiPoly(Hf(a, b)) - beta * MultiPoly(Hg(a, b));
  for (std::size_t a = 0; a < 6; ++a) {
    bordered(a, 6) = bordered(6, a) = gf[a];
    bordered(a, 7) = bordered(7, a) = gg[a];
  }
  const std::size_t normalRank = bareiss_rank(bordered) - 4;
  if (normalRank == 2) return Incidence::Node;
  if (normalRank == 1) return Incidence::Cusp;
  return Incidence::Degenerate;
}

// Discriminant of the conic bundle obtained by projecting {f = g = 0} from a
// pencil plane to the plane of x0, x1, x2. The fibre over p is the 3-space
// spanned by the plane and (p, 0); one of f, g restricts to s * L with L
// linear, and the residual conic is the other one restricted to {L = 0}.
struct ConicBundleDiscriminant {
  MultiPoly quartic;      // in x0, x1, x2
  MultiPoly eliminated;   // coefficient stripped from the raw determinant
  unsigned strippedPowers = 0;
  std::string splitForm;  // "f" or "g"
};

inline ConicBundleDiscriminant conic_bundle_discriminant(const MultiPoly& f, const MultiPoly& g,
                                                         const PencilPlane& plane) {
  const std::vector<std::string> base{"x0", "x1", "x2"};
  const std::vector<std::string> vars{"x0", "x1", "x2", "s", "y0", "y1", "y2"};
  auto V = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
  const CycMatrix B = plane_embedding(plane);
  std::vector<MultiPoly> images;
  for (std::size_t r = 0; r < 6; ++r) {
    MultiPoly x(vars);
    if (r < 3) x += V(3) * V(r);
    for (std::size_t c = 0; c < 3; ++c) x += V(4 + c) * MultiPoly(B(r, c));
    images.push_back(std::move(x));
  }
  const MultiPoly fr = f.compose(images), gr = g.compose(images);
  auto qf = fr.divide_exact(V(3)), qg = gr.divide_exact(V(3));
  if (qf.has_value() == qg.has_value()) throw InvariantViolation("exactly one quadric must contain the plane");
  ConicBundleDiscriminant out;
  out.splitForm = qf ? "f" : "g";
  const MultiPoly L = qf ? *qf : *qg;
  const MultiPoly other = qf ? gr : fr;
  std::vector<MultiPoly> coef;
  for (std::size_t i = 3; i < 7; ++i) coef.push_back(L.coefficient_in(i, 1));
  MultiPoly check(vars);
  for (std::size_t i = 0; i < 4; ++i) check += coef[i] * V(3 + i);
  if (!(check - L).is_zero()) throw InvariantViolation("residual factor is not linear in the fibre");
  std::size_t z = 0;
  while (z < 4 && coef[z].is_zero()) ++z;
  if (z == 4) throw InvariantViolation("residual factor has no fibre variable");

  // Scaled elimination: the eliminated variable is -sum c_j v_j, the others c v_j.
  const std::vector<std::string> nv{"x0", "x1", "x2", "v0", "v1", "v2"};
  auto lift = [&](const MultiPoly& p) { return drop_variables(p, base).with_variables(nv); };
  const MultiPoly c = lift(coef[z]);
  std::vector<MultiPoly> full;
  for (std::size_t i = 0; i < 3; ++i) full.push_back(MultiPoly::variable(nv, i));
  std::vector<MultiPoly> fibre(4, MultiPoly(nv));
  std::size_t slot = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == z) continue;
    const MultiPoly v = MultiPoly::variable(nv, 3 + slot++);
    fibre[i] = c * v;
    fibre[z] -= lift(coef[i]) * v;
  }
  for (auto& p : fibre) full.push_back(p);
  const MultiPoly Q = other.compose(full);

  PolyMatrix G(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      MultiPoly e = a == b ? Q.coefficient_in(3 + a, 2) : Q.coefficient_in(3 + a, 1).coefficient_in(3 + b, 1);
      G(a, b) = a == b ? e : e.scaled(Cyclotomic(Rational(1, 2)));
    }
  MultiPoly det = drop_variables(bareiss_det(G).with_variables(nv), base);
  out.eliminated = drop_variables(c, base);
  while (!out.eliminated.is_constant()) {
    auto q = det.divide_exact(out.eliminated);
    if (!q) break;
    det = *q;
    ++out.strippedPowers;
  }
  out.quartic = det;
  return out;
}

}  // namespace fano
