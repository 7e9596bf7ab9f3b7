#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fano/chow.hpp"
#include "fano/elimination.hpp"
#include "fano/grouprep.hpp"
#include "fano/matrix.hpp"
#include "fano/polynomial.hpp"
#include "fano/ruled.hpp"

namespace props {

using namespace fano;

inline constexpr int kCases = 1000;

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string firstFailure;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long bound = 9, long den = 5) { return Rational(integer(-bound, bound), integer(1, den)); }
  Cyclotomic cyclotomic(long bound = 9, long den = 5) { return {rational(bound, den), rational(bound, den)}; }
  Cyclotomic nonzero() {
    for (;;)
      if (Cyclotomic c = cyclotomic(); !c.is_zero()) return c;
  }
  CycMatrix matrix(std::size_t r, std::size_t c, long bound = 3) {
    CycMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = cyclotomic(bound, 2);
    return m;
  }
  CycMatrix invertible(std::size_t n) {
    for (;;)
      if (CycMatrix m = matrix(n, n); !m.det().is_zero()) return m;
  }
  // Sparse polynomial with at most `terms` terms of degree <= maxDeg.
  MultiPoly poly(const std::vector<std::string>& vars, unsigned maxDeg, int terms) {
    MultiPoly p(vars);
    for (int k = 0; k < terms; ++k) {
      MultiPoly::Exponents e(vars.size(), 0);
      unsigned left = static_cast<unsigned>(integer(0, maxDeg));
      for (auto& x : e) {
        x = static_cast<unsigned>(integer(0, left));
        left -= x;
      }
      p += MultiPoly::monomial(vars, e, cyclotomic(6, 3));
    }
    return p;
  }
  // Product of elementary integer matrices: determinant 1 and an inverse with
  // small integer entries.
  CycMatrix unimodular(std::size_t n, int steps = 6) {
    CycMatrix m = CycMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      CycMatrix e = CycMatrix::identity(n);
      e(i, j) = Cyclotomic(integer(-2, 2), integer(-1, 1));
      m = m * e;
    }
    return m;
  }
  DivClass divisor(std::size_t rank, long bound = 4) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < rank; ++i) c.push_back(Rational(integer(-bound, bound)));
    return DivClass::constant(c);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Result run(const std::string& name, std::uint64_t seed, const std::function<std::string(Gen&)>& one) {
  Result r{name, 0, 0, {}};
  Gen gen(seed);
  for (int i = 0; i < kCases; ++i) {
    ++r.cases;
    std::string failure;
    try {
      failure = one(gen);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty() && !r.failures++) r.firstFailure = "case " + std::to_string(i) + ": " + failure;
  }
  return r;
}

// Field axioms in Q(w), plus conjugation being a field automorphism.
inline Result field_axioms() {
  return run("field axioms and conjugation", 1, [](Gen& g) -> std::string {
    Cyclotomic a = g.cyclotomic(), b = g.cyclotomic(), c = g.cyclotomic();
    if (!((a + b) + c == a + (b + c))) return "additive associativity";
    if (!((a * b) * c == a * (b * c))) return "multiplicative associativity";
    if (!(a + b == b + a) || !(a * b == b * a)) return "commutativity";
    if (!(a * (b + c) == a * b + a * c)) return "distributivity";
    if (!(a + Cyclotomic(0) == a) || !(a * Cyclotomic(1) == a)) return "identities";
    if (!(a + (-a)).is_zero()) return "additive inverse";
    if (!a.is_zero() && !(a * a.inv() == Cyclotomic(1))) return "multiplicative inverse of " + a.to_string();
    if (!((a * b).conj() == a.conj() * b.conj()) || !((a + b).conj() == a.conj() + b.conj())) return "conj is not a homomorphism";
    if (!(a.conj().conj() == a)) return "conj is not an involution";
    if (!(a * a.conj()).is_rational() || (a * a.conj()).re1() != a.norm()) return "norm";
    return {};
  });
}

// (p o M) o N = p o (M N) under p(M x).
inline Result substitution_composition() {
  return run("substitute_linear composition", 2, [](Gen& g) -> std::string {
    const std::vector<std::string> v{"x", "y", "z"};
    MultiPoly p = g.poly(v, 3, 4);
    CycMatrix M = g.matrix(3, 3, 2), N = g.matrix(3, 3, 2);
    if (!(substitute_linear(substitute_linear(p, M), N) == substitute_linear(p, M * N))) return "composition for " + p.to_string();
    if (!(substitute_linear(p, CycMatrix::identity(3)) == p)) return "identity substitution";
    return {};
  });
}

// Euclid on coefficient vectors, written independently of the library.
inline int oracle_gcd_degree(std::vector<Cyclotomic> a, std::vector<Cyclotomic> b) {
  auto trim = [](std::vector<Cyclotomic>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      Cyclotomic f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// resultant(p, q, x) = 0 exactly when p and q share a factor.
inline Result resultant_vs_gcd() {
  return run("resultant vanishes iff common factor", 3, [](Gen& g) -> std::string {
    const std::vector<std::string> x{"x"};
    auto random_uni = [&](int deg) {
      std::vector<Cyclotomic> c;
      for (int i = 0; i < deg; ++i) c.push_back(g.cyclotomic(3, 2));
      c.push_back(g.nonzero());
      return c;
    };
    auto mul = [](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
      std::vector<Cyclotomic> out(a.size() + b.size() - 1, Cyclotomic(0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      return out;
    };
    auto to_poly = [&](const std::vector<Cyclotomic>& c) {
      MultiPoly p(x);
      for (std::size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<unsigned>(i)}, c[i]);
      return p;
    };
    std::vector<Cyclotomic> a = random_uni(static_cast<int>(g.integer(1, 3)));
    std::vector<Cyclotomic> b = random_uni(static_cast<int>(g.integer(1, 3)));
    if (g.integer(0, 1)) {
      // Common root chosen among small values so that it actually occurs.
      std::vector<Cyclotomic> lin{-Cyclotomic(Rational(g.integer(-2, 2)), Rational(g.integer(-1, 1))), Cyclotomic(1)};
      a = mul(a, lin);
      b = mul(b, lin);
    }
    bool zero = resultant(to_poly(a), to_poly(b), std::size_t{0}).is_zero();
    bool shared = oracle_gcd_degree(a, b) > 0;
    if (zero != shared) return "resultant " + std::string(zero ? "zero" : "nonzero") + " but gcd degree disagrees";
    return {};
  });
}

// rank + dim nullspace = columns, and the basis lies in the kernel.
inline Result rank_nullity() {
  return run("rank-nullity", 4, [](Gen& g) -> std::string {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 5));
    std::size_t inner = static_cast<std::size_t>(g.integer(1, 5));
    // Products of thin factors give rank-deficient matrices often.
    CycMatrix m = g.matrix(r, inner) * g.matrix(inner, c);
    auto ns = m.nullspace();
    if (m.rank() + ns.size() != c) return "rank " + std::to_string(m.rank()) + " + nullity " + std::to_string(ns.size());
    for (const auto& v : ns)
      for (const auto& x : m.apply(v))
        if (!x.is_zero()) return "nullspace vector not in kernel";
    if (!ns.empty() && CycMatrix::from_rows(ns).rank() != ns.size()) return "nullspace basis dependent";
    if (m.rank() != m.transpose().rank()) return "row rank differs from column rank";
    return {};
  });
}

inline Result round_trips() {
  return run("printer/parser round-trip", 5, [](Gen& g) -> std::string {
    Rational q = g.rational(1000000, 999);
    if (Rational::parse(q.to_string()) != q) return "rational " + q.to_string();
    Cyclotomic c = g.cyclotomic(1000, 97);
    if (!(Cyclotomic::parse(c.to_string()) == c)) return "cyclotomic " + c.to_string();
    const std::vector<std::string> v{"x0", "x1", "x2", "t"};
    MultiPoly p = g.poly(v, 4, 6);
    if (!(MultiPoly::parse(p.to_string(), v) == p)) return "polynomial " + p.to_string();
    return {};
  });
}

inline ChowThreefold sample_blowup() {
  auto X = product_hypersurface({1, 1, 2}, {1, 1, 1}, {"H1", "H2", "HL"});
  DivClass E1 = X.parse_class("H1+HL-H2"), E2 = X.parse_class("2*HL-H1-HL+H2");
  return blowup_curve(X, X.intersection_curve("C", E1, E2, 0), "E");
}

inline Result tensor_symmetry() {
  static const ChowThreefold ring = sample_blowup();
  return run("triple product symmetry", 6, [](Gen& g) -> std::string {
    std::array<DivClass, 3> d{g.divisor(ring.rank()), g.divisor(ring.rank()), g.divisor(ring.rank())};
    std::array<int, 3> perm{0, 1, 2};
    Rational ref = ring.triple_value(d[0], d[1], d[2]);
    do {
      if (ring.triple_value(d[perm[0]], d[perm[1]], d[perm[2]]) != ref) return "permutation changes the triple product";
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Trilinearity in the first slot.
    DivClass e = g.divisor(ring.rank());
    if (ring.triple_value(d[0] + e, d[1], d[2]) != ref + ring.triple_value(e, d[1], d[2])) return "not additive";
    return {};
  });
}

inline Result projection_formula() {
  static const auto base = product_hypersurface({1, 1, 2}, {1, 1, 1});
  return run("projection formula on blow-ups", 7, [](Gen& g) -> std::string {
    CurveRecord z{"Z", static_cast<unsigned>(g.integer(0, 3)), {}};
    for (std::size_t i = 0; i < base.rank(); ++i) z.pairings.push_back(Rational(g.integer(-3, 6)));
    auto up = blowup_curve(base, z, "E");
    DivClass a = g.divisor(base.rank()), b = g.divisor(base.rank()), c = g.divisor(base.rank());
    DivClass pa = base.pullback_to(a, up), pb = base.pullback_to(b, up), pc = base.pullback_to(c, up);
    if (up.triple_value(pa, pb, pc) != base.triple_value(a, b, c)) return "f*A.f*B.f*C differs from A.B.C";
    DivClass E = up.basis_class("E");
    if (up.triple_value(pa, pb, E) != Rational(0)) return "f*A.f*B.E is not zero";
    if (up.triple_value(pa, E, E) != -base.pair_with_curve(a, z).constant_term().re1()) return "f*A.E.E is not -A.Z";
    return {};
  });
}

inline std::vector<CycMatrix> sl23_generators() {
  const Cyclotomic w = Cyclotomic::omega();
  CycMatrix I{{0, -1}, {1, 0}};
  CycMatrix J{{w, w * w}, {w * w, -w}};
  CycMatrix C = Cyclotomic(Rational(1, 2)) * (Cyclotomic(-1) * CycMatrix::identity(2) + I + J + I * J);
  return {I, J, C};
}

// Conjugating a representation leaves every character eigenspace dimension unchanged.
inline Result eigenspace_invariance() {
  static const auto G = MatrixGroup::enumerate(sl23_generators());
  static const Representation W{sl23_generators()};
  static const std::vector<Representation> reps{W, sym_power_rep(W, 2), sym_power_rep(W, 3), tensor_rep(W, sym_power_rep(W, 3))};
  static const auto chars = linear_characters(G);
  static const auto reference = [] {
    std::vector<std::vector<std::size_t>> dims;
    for (const auto& rep : reps) {
      dims.emplace_back();
      for (const auto& chi : chars) dims.back().push_back(character_eigenspace_dim(G, rep, chi));
    }
    return dims;
  }();
  return run("eigenspace dimensions under conjugation", 8, [](Gen& g) -> std::string {
    std::size_t r = static_cast<std::size_t>(g.integer(0, static_cast<long>(reps.size()) - 1));
    CycMatrix P = g.unimodular(reps[r].dim());
    CycMatrix Pi = *P.inverse();
    Representation conj;
    for (const auto& m : reps[r].images) conj.images.push_back(P * m * Pi);
    std::size_t c = static_cast<std::size_t>(g.integer(0, static_cast<long>(chars.size()) - 1));
    if (character_eigenspace_dim(G, conj, chars[c]) != reference[r][c]) return "dimension changed";
    return {};
  });
}

// From any state obeying the invariants, both steps give n' = n + |gamma| and
// keep the invariants.
inline Result chain_step_law() {
  return run("chain step law", 9, [](Gen& g) -> std::string {
    long n = g.integer(1, 1000);
    long plusPartner = -g.integer(0, 1000);
    long minusPartner = g.integer(1, 1000);
    ChainState st;
    st.n = n;
    st.depth = static_cast<int>(g.integer(1, 50));
    st.curves[0] = {n, -1, plusPartner};
    st.curves[1] = {-n, -2, minusPartner};
    if (g.integer(0, 1)) std::swap(st.curves[0], st.curves[1]);
    if (!chain_invariant_failure(st).empty()) return "generator produced an invalid state";
    for (std::size_t i = 0; i < 2; ++i) {
      ChainState next = chain_step(st, i);
      long gamma = st.curves[i].selfOnPartner;
      if (next.n != n + (gamma < 0 ? -gamma : gamma)) return "n' != n + |gamma|";
      std::string f = chain_invariant_failure(next);
      if (!f.empty()) return f;
    }
    return {};
  });
}

inline std::vector<Result> all() {
  return {field_axioms(),      substitution_composition(), resultant_vs_gcd(), rank_nullity(),   round_trips(),
          tensor_symmetry(),   projection_formula(),       eigenspace_invariance(), chain_step_law()};
}

}  // namespace props
