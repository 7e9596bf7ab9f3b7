#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/polynomial.hpp"

namespace fano {

// Class s_coef * s + f_coef * f on the Hirzebruch surface F_n, where s is the
// negative section (s^2 = -n) and f a fibre.
template <class T>
struct RuledClass {
  int n = 0;
  T s{};
  T f{};
};

template <class T>
T ruled_pair(int n, const RuledClass<T>& A, const RuledClass<T>& B) {
  if (A.n != n || B.n != n) throw DimensionMismatch("ruled classes live on different Hirzebruch surfaces");
  return A.s * B.f + A.f * B.s - T(n) * A.s * B.s;
}

template <class T>
T ruled_pair(const RuledClass<T>& A, const RuledClass<T>& B) {
  return ruled_pair(A.n, A, B);
}

// h^0(F_n, a s + b f) for a >= 0: sum over i of h^0(P^1, O(b - i n)).
inline long ruled_section_count(int n, long a, long b) {
  if (a < 0) return 0;
  long total = 0;
  for (long i = 0; i <= a; ++i) total += std::max(0L, b - i * n + 1);
  return total;
}

// One of the two invariant curves on the newest exceptional surface F:
// its self-intersection on F and on the other surface containing it.
struct ChainCurve {
  long selfOnF = 0;
  int partnerId = 0;
  long selfOnPartner = 0;

  friend bool operator==(const ChainCurve&, const ChainCurve&) = default;
};

struct ChainState {
  long n = 0;
  std::array<ChainCurve, 2> curves{};
  int depth = 0;

  friend bool operator==(const ChainState&, const ChainState&) = default;

  // Numeric shape without surface identities, used to merge equivalent states.
  std::tuple<long, long, long, long, long> signature() const {
    auto a = std::make_pair(curves[0].selfOnF, curves[0].selfOnPartner);
    auto b = std::make_pair(curves[1].selfOnF, curves[1].selfOnPartner);
    if (b < a) std::swap(a, b);
    return {n, a.first, a.second, b.first, b.second};
  }

  std::string to_string() const {
    std::string out = "F_" + std::to_string(n) + " depth " + std::to_string(depth) + " {";
    for (std::size_t i = 0; i < 2; ++i)
      out += (i ? ", " : "") + std::string("(") + std::to_string(curves[i].selfOnF) + " on F, " +
             std::to_string(curves[i].selfOnPartner) + " on #" + std::to_string(curves[i].partnerId) + ")";
    return out + "}";
  }
};

// First blow-up of Z = A n B with Z^2 = alpha on A and beta on B.
inline ChainState chain_base(long alpha, int idA, long beta, int idB) {
  ChainState st;
  st.n = std::labs(alpha - beta);
  st.curves[0] = {beta - alpha, idA, alpha};
  st.curves[1] = {alpha - beta, idB, beta};
  st.depth = 1;
  return st;
}

// Blow up the chosen invariant curve of the newest surface F_m. The new
// surface is F_s with s = |selfOnF - selfOnPartner| and its two curves lie on
// the proper transforms of F_m and of the chosen curve's partner.
inline ChainState chain_step(const ChainState& st, std::size_t curveIndex) {
  if (curveIndex > 1) throw InvariantViolation("curve index must be 0 or 1");
  const ChainCurve& c = st.curves[curveIndex];
  const long a = c.selfOnF, g = c.selfOnPartner;
  ChainState next;
  next.n = std::labs(a - g);
  next.depth = st.depth + 1;
  next.curves[0] = {g - a, st.depth, a};
  next.curves[1] = {a - g, c.partnerId, g};
  return next;
}

// Which invariant of the chain failed, empty when all hold.
inline std::string chain_invariant_failure(const ChainState& st) {
  if (st.n <= 0) return "n > 0";
  std::multiset<long> squares{st.curves[0].selfOnF, st.curves[1].selfOnF};
  if (squares != std::multiset<long>{st.n, -st.n}) return "curve squares on F are {+n, -n}";
  for (const auto& c : st.curves) {
    if (c.selfOnF == st.n && c.selfOnPartner > 0) return "sign rule: +n curve has non-positive partner square";
    if (c.selfOnF == -st.n && c.selfOnPartner <= 0) return "sign rule: -n curve has positive partner square";
  }
  if (st.curves[0].partnerId == st.curves[1].partnerId) return "the two curves lie on distinct partner surfaces";
  return {};
}

struct ChainExploration {
  std::size_t paths = 0;
  std::size_t distinctStates = 0;
  std::size_t violations = 0;
  std::string firstViolation;
  long maxN = 0;
};

// Every sequence of choices up to the given depth, starting from the base state.
inline ChainExploration explore_chain(const ChainState& base, int maxDepth) {
  ChainExploration out;
  std::set<std::tuple<long, long, long, long, long>> seen;
  std::vector<ChainState> frontier{base};
  auto record = [&](const ChainState& s) {
    seen.insert(s.signature());
    out.maxN = std::max(out.maxN, s.n);
    std::string failure = chain_invariant_failure(s);
    if (!failure.empty()) {
      ++out.violations;
      if (out.firstViolation.empty()) out.firstViolation = s.to_string() + ": " + failure;
    }
  };
  record(base);
  for (int d = base.depth; d < maxDepth; ++d) {
    std::vector<ChainState> next;
    for (const auto& s : frontier)
      for (std::size_t i = 0; i < 2; ++i) {
        ChainState t = chain_step(s, i);
        long expected = s.n + std::labs(s.curves[i].selfOnPartner);
        if (t.n != expected) {
          ++out.violations;
          if (out.firstViolation.empty()) out.firstViolation = "step law n' = n + |gamma| failed at " + s.to_string();
        }
        record(t);
        next.push_back(t);
      }
    frontier = std::move(next);
  }
  out.paths = frontier.size();
  out.distinctStates = seen.size();
  return out;
}

}  // namespace fano
