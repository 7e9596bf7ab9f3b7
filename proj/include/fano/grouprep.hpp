#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/matrix.hpp"
#include "fano/polynomial.hpp"

namespace fano {

// Finite group generated by invertible matrices, enumerated by BFS.
// Every element except the identity is recorded as gens[via] * elements[parent],
// which gives a spanning tree of words used to evaluate representations.
class MatrixGroup {
 public:
  static constexpr std::size_t kDefaultCap = 256;

  static MatrixGroup enumerate(std::vector<CycMatrix> generators, std::string name = {},
                               std::size_t cap = kDefaultCap) {
    if (generators.empty()) throw InvariantViolation("group needs at least one generator");
    const std::size_t n = generators[0].rows();
    for (const auto& g : generators) {
      if (!g.is_square() || g.rows() != n) throw DimensionMismatch("generators must be square of equal size");
      if (g.det().is_zero()) throw InvariantViolation("generator is not invertible");
    }
    MatrixGroup G;
    G.name_ = std::move(name);
    G.gens_ = std::move(generators);
    G.add(CycMatrix::identity(n), kNone, kNone);
    for (std::size_t head = 0; head < G.elements_.size(); ++head)
      for (std::size_t gi = 0; gi < G.gens_.size(); ++gi) {
        CycMatrix next = G.gens_[gi] * G.elements_[head];
        if (G.index_.count(next.to_string())) continue;
        if (G.elements_.size() >= cap)
          throw InvariantViolation("group closure exceeds cap of " + std::to_string(cap) + " elements");
        G.add(std::move(next), head, gi);
      }
    return G;
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return gens_[0].rows(); }
  const std::vector<CycMatrix>& generators() const { return gens_; }
  const std::vector<CycMatrix>& elements() const { return elements_; }

  std::optional<std::size_t> find(const CycMatrix& m) const {
    auto it = index_.find(m.to_string());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Closure sanity: identity present, closed under products and inverses.
  bool is_closed() const {
    for (const auto& a : elements_) {
      auto inv = a.inverse();
      if (!inv || !find(*inv)) return false;
      for (const auto& b : elements_)
        if (!find(a * b)) return false;
    }
    return find(CycMatrix::identity(degree())).has_value();
  }

  // Values of a homomorphism given on generators, extended along the BFS tree.
  template <class V, class Mul>
  std::vector<V> extend(const std::vector<V>& onGenerators, const V& identity, Mul mul) const {
    if (onGenerators.size() != gens_.size()) throw DimensionMismatch("need one value per generator");
    std::vector<V> out(elements_.size(), identity);
    for (std::size_t i = 1; i < elements_.size(); ++i) out[i] = mul(onGenerators[via_[i]], out[parent_[i]]);
    return out;
  }

  // True when the generator values respect every relation of the group:
  // value(g * e) = value(g) * value(e) for all generators g and elements e.
  template <class V, class Mul>
  bool is_homomorphism(const std::vector<V>& onGenerators, const V& identity, Mul mul) const {
    std::vector<V> vals = extend(onGenerators, identity, mul);
    for (std::size_t e = 0; e < elements_.size(); ++e)
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        std::size_t target = *find(gens_[gi] * elements_[e]);
        if (!(mul(onGenerators[gi], vals[e]) == vals[target])) return false;
      }
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::string name_;
  std::vector<CycMatrix> gens_;
  std::vector<CycMatrix> elements_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::map<std::string, std::size_t> index_;

  void add(CycMatrix m, std::size_t parent, std::size_t via) {
    index_.emplace(m.to_string(), elements_.size());
    elements_.push_back(std::move(m));
    parent_.push_back(parent);
    via_.push_back(via);
  }
};

// Linear character given by its values on the generators of a group.
struct LinearCharacter {
  std::vector<Cyclotomic> values;

  bool is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); });
  }
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].to_string();
    return out + ")";
  }
  friend bool operator==(const LinearCharacter& a, const LinearCharacter& b) { return a.values == b.values; }
};

inline LinearCharacter make_character(const MatrixGroup& G, std::vector<Cyclotomic> values) {
  auto mul = [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; };
  if (!G.is_homomorphism(values, Cyclotomic(1), mul))
    throw InvariantViolation("generator values do not extend to a character");
  return {std::move(values)};
}

// All linear characters with values in the sixth roots of unity.
inline std::vector<LinearCharacter> linear_characters(const MatrixGroup& G) {
  const Cyclotomic w = Cyclotomic::omega();
  const std::vector<Cyclotomic> roots{1, -1, w, -w, w * w, -(w * w)};
  const std::size_t k = G.generators().size();
  std::vector<LinearCharacter> out;
  std::vector<std::size_t> pick(k, 0);
  auto mul = [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; };
  for (;;) {
    std::vector<Cyclotomic> vals;
    for (auto i : pick) vals.push_back(roots[i]);
    if (G.is_homomorphism(vals, Cyclotomic(1), mul)) out.push_back({vals});
    std::size_t pos = 0;
    while (pos < k && ++pick[pos] == roots.size()) pick[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

// chi with p(g x) = chi(g) p(x) for every generator, if p is a semi-invariant.
inline std::optional<LinearCharacter> semi_invariant_character(const MultiPoly& p, const MatrixGroup& G) {
  if (p.is_zero()) throw InvariantViolation("semi_invariant_character needs a nonzero polynomial");
  if (p.nvars() != G.degree()) throw DimensionMismatch("polynomial variable count differs from matrix size");
  std::vector<Cyclotomic> values;
  for (const auto& g : G.generators()) {
    Proportionality r = proportionality(substitute_linear(p, g), p);
    if (r.kind != Proportionality::Kind::Scalar) return std::nullopt;
    values.push_back(r.scalar);
  }
  auto mul = [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; };
  if (!G.is_homomorphism(values, Cyclotomic(1), mul)) return std::nullopt;
  return LinearCharacter{std::move(values)};
}

// A representation of G given by one matrix per generator.
struct Representation {
  std::vector<CycMatrix> images;
  std::size_t dim() const { return images.empty() ? 0 : images[0].rows(); }
};

inline void require_representation(const MatrixGroup& G, const Representation& rep) {
  if (rep.images.size() != G.generators().size()) throw DimensionMismatch("need one matrix per generator");
  auto mul = [](const CycMatrix& a, const CycMatrix& b) { return a * b; };
  if (!G.is_homomorphism(rep.images, CycMatrix::identity(rep.dim()), mul))
    throw InvariantViolation("matrices do not define a representation of the group");
}

// dim {v : rho(g) v = chi(g) v for all generators g}.
inline std::size_t character_eigenspace_dim(const MatrixGroup& G, const Representation& rep,
                                            const LinearCharacter& chi) {
  require_representation(G, rep);
  const std::size_t d = rep.dim();
  CycMatrix stacked(0, d);
  for (std::size_t i = 0; i < rep.images.size(); ++i)
    stacked = CycMatrix::vstack(stacked, rep.images[i] - chi.values[i] * CycMatrix::identity(d));
  return d - stacked.rank();
}

// Exponent vectors of degree k in d variables, in a fixed order.
inline std::vector<std::vector<unsigned>> monomial_basis(std::size_t d, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(d, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == d) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  if (d == 0) return out;
  rec(rec, 0, k);
  return out;
}

// Action of M on Sym^k of its space, on the monomial basis: e_j -> sum_i M_ij e_i.
inline CycMatrix sym_power_matrix(const CycMatrix& M, unsigned k) {
  const std::size_t d = M.rows();
  auto basis = monomial_basis(d, k);
  std::vector<std::string> vars = numbered_variables("e", d);
  std::map<std::vector<unsigned>, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
  CycMatrix Mt = M.transpose();
  CycMatrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    MultiPoly image = substitute_linear(MultiPoly::monomial(vars, basis[col], Cyclotomic(1)), Mt);
    for (const auto& [e, c] : image.terms()) out(where.at(e), col) = c;
  }
  return out;
}

inline Representation sym_power_rep(const Representation& rep, unsigned k) {
  Representation out;
  for (const auto& m : rep.images) out.images.push_back(sym_power_matrix(m, k));
  return out;
}

inline Representation tensor_rep(const Representation& a, const Representation& b) {
  if (a.images.size() != b.images.size()) throw DimensionMismatch("tensor of representations of different groups");
  Representation out;
  for (std::size_t i = 0; i < a.images.size(); ++i) out.images.push_back(CycMatrix::kronecker(a.images[i], b.images[i]));
  return out;
}

// Smallest k >= 1 with M^k = 1 (projective: M^k scalar).
inline unsigned element_order(const CycMatrix& M, bool projective = false, unsigned cap = 1000) {
  const std::size_t n = M.rows();
  CycMatrix P = M;
  for (unsigned k = 1; k <= cap; ++k) {
    bool scalar = true;
    for (std::size_t i = 0; i < n && scalar; ++i)
      for (std::size_t j = 0; j < n && scalar; ++j) {
        const Cyclotomic& v = P(i, j);
        scalar = i == j ? (projective ? v == P(0, 0) : v == Cyclotomic(1)) : v.is_zero();
      }
    if (scalar) return k;
    P = P * M;
  }
  throw InvariantViolation("element order exceeds cap");
}

// A finite group acting faithfully on P^1 has cyclic point stabilisers, so
// the shortest orbit has length |G| / (largest element order).
inline std::size_t min_orbit_length_on_P1(std::size_t groupOrder, const std::vector<unsigned>& elementOrders) {
  unsigned top = 1;
  for (unsigned o : elementOrders) top = std::max(top, o);
  if (groupOrder % top != 0) throw InvariantViolation("element order does not divide the group order");
  return groupOrder / top;
}

}  // namespace fano
