#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/polynomial.hpp"

namespace fano {

// Divisor class: one coordinate per basis divisor, each a polynomial in formal
// parameters (constants allowed).
struct DivClass {
  std::vector<MultiPoly> coords;

  static DivClass zero(std::size_t n) { return {std::vector<MultiPoly>(n, MultiPoly(0))}; }
  static DivClass constant(const std::vector<Rational>& c) {
    DivClass d;
    for (const auto& x : c) d.coords.emplace_back(Cyclotomic(x));
    return d;
  }

  std::size_t size() const { return coords.size(); }

  friend DivClass operator+(DivClass a, const DivClass& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend DivClass operator-(DivClass a, const DivClass& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend DivClass operator*(const MultiPoly& k, DivClass a) {
    for (auto& c : a.coords) c = k * c;
    return a;
  }
  DivClass operator-() const { return MultiPoly(-1) * *this; }
  friend bool operator==(const DivClass& a, const DivClass& b) {
    if (a.coords.size() != b.coords.size()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (!(a.coords[i] - b.coords[i]).is_zero()) return false;
    return true;
  }

  // Rational coordinates; throws if a coordinate still depends on parameters.
  std::vector<Rational> rational_coords() const {
    std::vector<Rational> out;
    for (const auto& c : coords) {
      if (!c.is_constant() || !c.constant_term().is_rational())
        throw InvariantViolation("divisor class has non-rational coordinates");
      out.push_back(c.constant_term().re1());
    }
    return out;
  }

  static void require_same(const DivClass& a, const DivClass& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("divisor classes over different bases");
  }
};

struct CurveRecord {
  std::string name;
  unsigned genus = 0;
  std::vector<Rational> pairings;  // D_i . Z for each basis divisor
};

// Intersection ring of a smooth projective threefold in a divisor basis.
class ChowThreefold {
 public:
  ChowThreefold() = default;
  explicit ChowThreefold(std::vector<std::string> basis) : basis_(std::move(basis)), canonical_(basis_.size()) {}

  const std::vector<std::string>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Rational>& canonical_coords() const { return canonical_; }
  DivClass canonical() const { return DivClass::constant(canonical_); }
  DivClass anticanonical() const { return -canonical(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(basis_.begin(), basis_.end(), name);
    if (it == basis_.end()) throw DimensionMismatch("unknown basis divisor '" + name + "'");
    return static_cast<std::size_t>(it - basis_.begin());
  }

  DivClass basis_class(std::size_t i) const {
    std::vector<Rational> c(rank(), Rational(0));
    c.at(i) = 1;
    return DivClass::constant(c);
  }
  DivClass basis_class(const std::string& name) const { return basis_class(index_of(name)); }

  Rational tensor(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = tensor_.find(key(i, j, k));
    return it == tensor_.end() ? Rational(0) : it->second;
  }
  void set_tensor(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (i >= rank() || j >= rank() || k >= rank()) throw DimensionMismatch("tensor index out of range");
    if (v.is_zero())
      tensor_.erase(key(i, j, k));
    else
      tensor_[key(i, j, k)] = v;
  }
  void set_canonical(std::vector<Rational> k) {
    if (k.size() != rank()) throw DimensionMismatch("canonical class has wrong length");
    canonical_ = std::move(k);
  }

  MultiPoly triple(const DivClass& a, const DivClass& b, const DivClass& c) const {
    require(a);
    require(b);
    require(c);
    MultiPoly acc(0);
    for (const auto& [idx, v] : tensor_) {
      auto [i, j, k] = idx;
      // Sum over the distinct permutations of the sorted index triple.
      std::array<std::size_t, 3> p{i, j, k};
      MultiPoly term(0);
      do {
        term += a.coords[p[0]] * b.coords[p[1]] * c.coords[p[2]];
      } while (std::next_permutation(p.begin(), p.end()));
      acc += term.scaled(Cyclotomic(v));
    }
    return acc;
  }

  Rational triple_value(const DivClass& a, const DivClass& b, const DivClass& c) const {
    MultiPoly v = triple(a, b, c);
    if (!v.is_constant() || !v.constant_term().is_rational())
      throw InvariantViolation("triple product depends on parameters");
    return v.constant_term().re1();
  }

  // Named classes: basis divisors plus derived definitions.
  void define(const std::string& name, DivClass cls) {
    require(cls);
    named_[name] = std::move(cls);
  }
  bool has_class(const std::string& name) const {
    return named_.count(name) || std::find(basis_.begin(), basis_.end(), name) != basis_.end();
  }
  DivClass named(const std::string& name) const {
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    return basis_class(name);
  }
  const std::map<std::string, DivClass>& definitions() const { return named_; }

  // Linear class expression over basis names, defined names and parameters,
  // e.g. "2*H - E - m*F".
  DivClass parse_class(const std::string& text, const std::vector<std::string>& params = {}) const {
    std::vector<std::string> names;
    std::vector<DivClass> values;
    for (const auto& b : basis_) {
      names.push_back(b);
      values.push_back(basis_class(b));
    }
    for (const auto& [n, c] : named_) {
      names.push_back(n);
      values.push_back(c);
    }
    std::vector<std::string> vars = names;
    vars.insert(vars.end(), params.begin(), params.end());
    MultiPoly expr = MultiPoly::parse(text, vars);
    DivClass out = DivClass::zero(rank());
    for (auto& c : out.coords) c = MultiPoly(params);
    for (const auto& [e, coef] : expr.terms()) {
      std::size_t classVar = names.size();
      unsigned classDeg = 0;
      typename MultiPoly::Exponents pe(params.size(), 0);
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (v < names.size()) {
          classDeg += e[v];
          if (e[v]) classVar = v;
        } else {
          pe[v - names.size()] = e[v];
        }
      }
      if (classDeg != 1) throw ParseError("class expression is not linear in divisors: '" + text + "'");
      MultiPoly c = MultiPoly::monomial(params, pe, coef);
      out = out + c * values[classVar];
    }
    return out;
  }

  // Pairing of a divisor with a recorded curve.
  MultiPoly pair_with_curve(const DivClass& d, const CurveRecord& z) const {
    require(d);
    if (z.pairings.size() != rank()) throw DimensionMismatch("curve pairings have wrong length");
    MultiPoly acc(0);
    for (std::size_t i = 0; i < rank(); ++i) acc += d.coords[i].scaled(Cyclotomic(z.pairings[i]));
    return acc;
  }
  Rational canonical_degree(const CurveRecord& z) const {
    return pair_with_curve(canonical(), z).constant_term().re1();
  }

  void add_curve(CurveRecord z) {
    if (z.pairings.size() != rank()) throw DimensionMismatch("curve pairings have wrong length");
    curves_[z.name] = std::move(z);
  }
  const CurveRecord& curve(const std::string& name) const {
    auto it = curves_.find(name);
    if (it == curves_.end()) throw DimensionMismatch("unknown curve '" + name + "'");
    return it->second;
  }
  const std::map<std::string, CurveRecord>& curves() const { return curves_; }

  // Curve cut out by two divisors: D . Z = D . A . B.
  CurveRecord intersection_curve(const std::string& name, const DivClass& a, const DivClass& b, unsigned genus) const {
    CurveRecord z{name, genus, {}};
    for (std::size_t i = 0; i < rank(); ++i) z.pairings.push_back(triple_value(basis_class(i), a, b));
    return z;
  }

  // Pullback to a blow-up whose basis extends this one by new divisors.
  DivClass pullback_to(const DivClass& d, const ChowThreefold& up) const {
    require(d);
    DivClass out = d;
    while (out.coords.size() < up.rank()) out.coords.emplace_back(0);
    return out;
  }

  void require(const DivClass& d) const {
    if (d.size() != rank()) throw DimensionMismatch("divisor class does not match the ring basis");
  }

  const std::map<std::array<std::size_t, 3>, Rational>& tensor_entries() const { return tensor_; }

 private:
  std::vector<std::string> basis_;
  std::map<std::array<std::size_t, 3>, Rational> tensor_;
  std::vector<Rational> canonical_;
  std::map<std::string, DivClass> named_;
  std::map<std::string, CurveRecord> curves_;

  static std::array<std::size_t, 3> key(std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> a{i, j, k};
    std::sort(a.begin(), a.end());
    return a;
  }
};

// Threefold cut out in a product of projective spaces by hypersurfaces of the
// given multidegrees; the basis is the pulled back hyperplane classes.
inline ChowThreefold complete_intersection(const std::vector<unsigned>& factorDims,
                                           const std::vector<std::vector<int>>& multidegrees,
                                           std::vector<std::string> names = {}) {
  unsigned total = 0;
  for (unsigned d : factorDims) total += d;
  if (factorDims.empty() || total != 3 + multidegrees.size())
    throw DimensionMismatch("ambient dimension minus number of equations must be 3");
  for (const auto& md : multidegrees)
    if (md.size() != factorDims.size()) throw DimensionMismatch("multidegree length differs from factor count");
  const std::size_t r = factorDims.size();
  if (names.empty())
    for (std::size_t i = 0; i < r; ++i) names.push_back("h" + std::to_string(i + 1));
  if (names.size() != r) throw DimensionMismatch("need one name per factor");

  using RPoly = Polynomial<Rational>;
  std::vector<std::string> vars = numbered_variables("h", r);
  RPoly cut = RPoly::constant(vars, Rational(1));
  for (const auto& md : multidegrees) {
    RPoly form(vars);
    for (std::size_t l = 0; l < r; ++l) form += RPoly::variable(vars, l).scaled(Rational(md[l]));
    cut = cut * form;
  }
  RPoly::Exponents top(factorDims.begin(), factorDims.end());

  ChowThreefold ring(names);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      for (std::size_t k = j; k < r; ++k) {
        RPoly m = RPoly::variable(vars, i) * RPoly::variable(vars, j) * RPoly::variable(vars, k) * cut;
        ring.set_tensor(i, j, k, m.coefficient(top));
      }
  std::vector<Rational> K(r);
  for (std::size_t l = 0; l < r; ++l) {
    long c = -static_cast<long>(factorDims[l]) - 1;
    for (const auto& md : multidegrees) c += md[l];
    K[l] = Rational(c);
  }
  ring.set_canonical(K);
  return ring;
}

inline ChowThreefold product_hypersurface(const std::vector<unsigned>& factorDims, const std::vector<int>& multidegree,
                                          std::vector<std::string> names = {}) {
  unsigned total = 0;
  for (unsigned d : factorDims) total += d;
  if (total != 4) throw DimensionMismatch("factor dimensions must sum to 4 for a hypersurface threefold");
  return complete_intersection(factorDims, {multidegree}, std::move(names));
}

// Blow-up along a smooth curve Z. The normal bundle degree is -K.Z + 2g - 2.
inline ChowThreefold blowup_curve(const ChowThreefold& base, const CurveRecord& z, const std::string& exceptionalName,
                                  std::optional<Rational> KdotZ = std::nullopt) {
  if (z.pairings.size() != base.rank()) throw DimensionMismatch("curve pairings must cover every basis divisor");
  Rational kz = base.canonical_degree(z);
  if (KdotZ && *KdotZ != kz) throw InvariantViolation("stated K.Z disagrees with the canonical class pairing");
  std::vector<std::string> names = base.basis();
  if (std::find(names.begin(), names.end(), exceptionalName) != names.end())
    throw InvariantViolation("exceptional divisor name already in use");
  names.push_back(exceptionalName);
  ChowThreefold up(names);
  const std::size_t e = base.rank();
  for (const auto& [idx, v] : base.tensor_entries()) up.set_tensor(idx[0], idx[1], idx[2], v);
  for (std::size_t i = 0; i < e; ++i) up.set_tensor(i, e, e, -z.pairings[i]);
  up.set_tensor(e, e, e, Rational(2) - Rational(2 * static_cast<long>(z.genus)) + kz);
  std::vector<Rational> K = base.canonical_coords();
  K.push_back(Rational(1));
  up.set_canonical(K);
  for (const auto& [name, cls] : base.definitions()) up.define(name, base.pullback_to(cls, up));
  // A fibre of E over Z: pullbacks are trivial on it and E.fibre = -1.
  std::vector<Rational> fibre(up.rank(), Rational(0));
  fibre[e] = Rational(-1);
  up.add_curve({exceptionalName + "-fibre", 0, fibre});
  return up;
}

inline Rational normal_bundle_degree(const ChowThreefold& base, const CurveRecord& z) {
  return -base.canonical_degree(z) + Rational(2 * static_cast<long>(z.genus)) - Rational(2);
}

// Log discrepancy of the weighted blow-up of A n B with weights (wA, wB).
inline Rational weighted_log_discrepancy(long wA, long wB, const Rational& AA, const Rational& AB) {
  if (wA < 1 || wB < 1) throw InvariantViolation("weights must be positive");
  if (AA < Rational(1) || AB < Rational(1)) throw InvariantViolation("log discrepancies of divisors are at least 1");
  return Rational(wA) * AA + Rational(wB) * AB;
}

// Same with symbolic weights.
inline MultiPoly weighted_log_discrepancy(const MultiPoly& wA, const MultiPoly& wB, const Rational& AA,
                                          const Rational& AB) {
  return wA.scaled(Cyclotomic(AA)) + wB.scaled(Cyclotomic(AB));
}

// h^0(-K) = (-K)^3 / 2 + 3 on a smooth threefold with -K nef and big.
inline long riemann_roch_anticanonical(const Rational& minusKcube) {
  Rational v = minusKcube / Rational(2) + Rational(3);
  if (!v.is_integer()) throw InvariantViolation("Riemann-Roch count is not an integer: " + v.to_string());
  return v.numerator().get_si();
}

}  // namespace fano
