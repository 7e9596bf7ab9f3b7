#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/chow.hpp"
#include "fano/report.hpp"
#include "fano/ruled.hpp"
#include "fano/scenario.hpp"
#include "fano/zariski.hpp"

namespace fano {

// Family 3.17: a (1,1,1) divisor in P1 x P1 x P2, its invariant divisors
// E1, E2, R and the blow-up of the curve E1 n E2.
class Scenario317 {
 public:
  explicit Scenario317(nlohmann::json asset) : asset_(std::move(asset)) {
    for (const auto& step : asset_.at("ring")) {
      const std::string op = step.at("op");
      if (op == "product_hypersurface") {
        base_ = product_hypersurface(step.at("dims").get<std::vector<unsigned>>(),
                                     step.at("degree").get<std::vector<int>>(),
                                     step.at("names").get<std::vector<std::string>>());
      } else if (op == "define") {
        base_.define(step.at("name"), base_.parse_class(step.at("class")));
      } else {
        throw ParseError("unknown ring step '" + op + "'");
      }
    }
    base_.define("antiK", base_.anticanonical());
    if (!(base_.parse_class(asset_.at("anticanonicalAsSum")) == base_.anticanonical()))
      throw InvariantViolation("-K is not " + asset_.at("anticanonicalAsSum").get<std::string>());

    const auto& bl = asset_.at("blowup");
    const auto cut = strings_of(bl.at("cutBy"));
    if (cut.size() != 2) throw DimensionMismatch("blown-up curve is cut by two divisors");
    curve_ = base_.intersection_curve(bl.at("curve"), base_.named(cut[0]), base_.named(cut[1]), bl.at("genus"));
    up_ = blowup_curve(base_, curve_, bl.at("exceptional"));
    for (const auto& [name, cls] : bl.at("properTransforms").items()) up_.define(name, up_.parse_class(cls));
  }

  static std::shared_ptr<const Scenario317> load() { return std::make_shared<const Scenario317>(load_asset("3-17")); }

  const nlohmann::json& asset() const { return asset_; }
  const nlohmann::json& expected() const { return asset_.at("expected"); }
  const ChowThreefold& base() const { return base_; }
  const ChowThreefold& blowup() const { return up_; }
  const CurveRecord& blown_up_curve() const { return curve_; }

  const ChowThreefold& ring_named(const std::string& which) const {
    if (which == "base") return base_;
    if (which == "blowup") return up_;
    throw ParseError("unknown ring '" + which + "'");
  }

  // Certificate from the asset; `lastInterval` replaces the negative part of
  // the final interval when given.
  RayCertificate certificate(const std::string& which, const nlohmann::json* lastInterval = nullptr) const {
    const auto& c = asset_.at("certificates").at(which);
    RayCertificate cert;
    cert.ring = &ring_named(c.at("ring"));
    cert.L = cert.ring->named("antiK");
    cert.E = cert.ring->named(c.at("divisor"));
    cert.tau = rational_of(c.at("tau"));
    cert.A = rational_of(c.at("A"));
    if (c.contains("testCurves")) cert.testCurves = strings_of(c.at("testCurves"));
    const auto& ivs = c.at("intervals");
    for (std::size_t k = 0; k < ivs.size(); ++k) {
      RayInterval iv{rational_of(ivs[k].at("lo")), rational_of(ivs[k].at("hi")), {}};
      const auto& neg = (lastInterval && k + 1 == ivs.size()) ? *lastInterval : ivs[k].at("neg");
      for (const auto& n : neg)
        iv.neg.push_back({n.at("class"), cert.ring->named(n.at("class")), rational_of(n.at("c0")), rational_of(n.at("c1"))});
      cert.intervals.push_back(std::move(iv));
    }
    return cert;
  }

  // Class as a linear form in the basis names.
  std::string class_text(const ChowThreefold& ring, const DivClass& d) const {
    MultiPoly acc(ring.basis());
    for (std::size_t i = 0; i < ring.rank(); ++i) acc += MultiPoly::variable(ring.basis(), i) * d.coords[i];
    return acc.to_string();
  }

 private:
  nlohmann::json asset_;
  ChowThreefold base_;
  ChowThreefold up_;
  CurveRecord curve_;
};

namespace detail317 {

inline const std::vector<std::string>& ab() {
  static const std::vector<std::string> v{"a", "b"};
  return v;
}

inline MultiPoly poly_ab(const std::string& text) { return MultiPoly::parse(text, ab()).with_variables(ab()); }

inline MultiPoly rational_poly(const Rational& r) { return MultiPoly::constant(ab(), Cyclotomic(r)); }

// form > 0 on {a >= 1, b >= 1} intersected with the extra constraints.
inline std::string cone_verdict(const MultiPoly& form, std::vector<LinearConstraint> extra) {
  extra.push_back(affine_form("a-1", ab()));
  extra.push_back(affine_form("b-1", ab()));
  PositivityVerdict v = cone_positive(affine_form(form.to_string(), ab(), true), extra);
  if (v.positive) return "positive";
  return "witness (" + (*v.witness)[0].to_string() + "," + (*v.witness)[1].to_string() + ")";
}

// Closed form of (1/L^3) * integral_0^t vol(x) dx for the first interval.
inline MultiPoly s_partial_closed_form(const RayCertificate& cert) {
  const std::vector<std::string> tv{"t"};
  MultiPoly out(tv);
  const Rational L3 = cube(*cert.ring, cert.L);
  const MultiPoly vol = volume_polynomial(cert, 0).with_variables(ray_variable());
  for (const auto& [e, c] : vol.terms())
    out += MultiPoly::monomial(tv, {e[0] + 1}, c * Cyclotomic(Rational(1) / (L3 * Rational(static_cast<long>(e[0] + 1)))));
  return out;
}

inline std::string sb(const Rational& S, const Rational& beta) {
  return "S=" + S.to_string() + ", beta=" + beta.to_string();
}

// S(E, 2b/(a+b)) + S(R) < 1 gives beta > b off the first branch.
struct Branch2 {
  Rational t;
  Rational bound;
  bool belowSBound = false;
};

inline Branch2 branch2_at(const RayCertificate& certE, const Rational& SR, const Rational& sBound, long a, long b) {
  Branch2 out;
  out.t = Rational(2 * b) / Rational(a + b);
  Rational sE = s_partial(certE, out.t);
  out.belowSBound = sE < sBound;
  out.bound = Rational(a + 2 * b) - Rational(a + b) * (sE + SR);
  return out;
}

}  // namespace detail317

inline std::vector<CheckSpec> scenario317_checks(std::shared_ptr<const Scenario317> sc, RunOptions opt = {}) {
  using namespace detail317;
  std::vector<CheckSpec> out;
  const auto& ex = sc->expected();

  out.push_back({"anticanonical-cube", "(-K)^3 of the (1,1,1) divisor", "anticanonical degree of the threefold",
                 [sc, ex] {
                   return compare(ex.at("anticanonicalCube"), cube(sc->base(), sc->base().anticanonical()).to_string());
                 }});

  out.push_back({"class-identity", "E1+E2+R equals -K and the displayed class", "anticanonical class as a sum of invariant divisors",
                 [sc] {
                   const auto& a = sc->asset();
                   const std::string sum = a.at("anticanonicalAsSum"), disp = a.at("anticanonicalDisplayed");
                   const auto K = sc->base().anticanonical();
                   auto txt = [&](const std::string& t) { return sc->class_text(sc->base(), sc->base().parse_class(t)); };
                   return compare(txt(sum) + " = " + txt(disp), sc->class_text(sc->base(), K) + " = " + sc->class_text(sc->base(), K),
                                  "H2 enters through E1 = H1+HL-H2");
                 }});

  out.push_back({"beta-R", "S and beta of R from its Zariski certificate", "S and beta of the divisor R", [sc, ex] {
                   auto cert = sc->certificate("R");
                   auto r = beta(cert, cert.A);
                   return compare(sb(rational_of(ex.at("S_R")), rational_of(ex.at("beta_R"))), sb(r.S, r.beta));
                 }});

  out.push_back({"volume-E", "volume of -K - xE on each interval", "piecewise volume of the ray towards E", [sc, ex] {
                   auto cert = sc->certificate("E");
                   std::vector<std::string> want, got;
                   for (std::size_t k = 0; k < cert.intervals.size(); ++k) {
                     want.push_back(canonical_text(ex.at("volumesE").at(k), ray_variable()));
                     got.push_back(volume_polynomial(cert, k).to_string());
                   }
                   return compare(join(want, " | "), join(got, " | "));
                 }});

  out.push_back({"beta-E", "S and beta of the exceptional divisor E", "S and beta of E over the curve E1 n E2", [sc, ex] {
                   auto cert = sc->certificate("E");
                   auto r = beta(cert, cert.A);
                   return compare(sb(rational_of(ex.at("S_E")), rational_of(ex.at("beta_E"))), sb(r.S, r.beta));
                 }});

  out.push_back({"beta-Rprime", "lower bound for beta of R' from A = 3 and S <= 2 S(E)", "beta bound for the divisor R'",
                 [sc, ex] {
                   const auto& rp = sc->asset().at("Rprime");
                   Rational bound = rational_of(rp.at("A")) - rational_of(rp.at("multipleOfSE")) * s_value(sc->certificate("E"));
                   return compare("beta >= " + rational_of(ex.at("beta_Rprime_bound")).to_string(), "beta >= " + bound.to_string());
                 }});

  out.push_back({"beta-family-E-R", "divisors over E n R with weights (b, a), both branches and the integer grid",
                 "(a,b) blow-ups between E and the proper transform of R", [sc, ex, opt] {
                   const auto& fam = sc->asset().at("families").at("E-R");
                   const auto& b1 = fam.at("branch1");
                   const auto& b2 = fam.at("branch2");
                   auto certE = sc->certificate("E");
                   const Rational SE = s_value(certE), SR = s_value(sc->certificate("R"));
                   const Rational tMax = rational_of(b2.at("tMax")), sBound = rational_of(b2.at("sBound"));
                   const long N = opt.grid;
                   const std::string ratio = b1.at("ratio");

                   MultiPoly A = weighted_log_discrepancy(poly_ab(fam.at("weights").at("R")), poly_ab(fam.at("weights").at("E")),
                                                          rational_of(fam.at("logDiscrepancies").at("R")),
                                                          rational_of(fam.at("logDiscrepancies").at("E")));
                   MultiPoly bound1 = A - poly_ab(b1.at("multiplierOfSE")) * rational_poly(SE);
                   std::string v1 = cone_verdict(bound1, {affine_form(ratio, ab(), true)});

                   // Off the first branch t = 2b/(a+b) <= tMax: (a+b) tMax - 2b >= 0 whenever ratio <= 0.
                   MultiPoly tGap = poly_ab("a+b") * rational_poly(tMax) - poly_ab("2*b");
                   LinearConstraint notBranch1 = affine_form(ratio, ab());
                   for (auto& c : notBranch1.coef) c = -c;
                   notBranch1.c = -notBranch1.c;
                   LinearConstraint tBelow = affine_form(tGap.to_string(), ab());
                   for (auto& c : tBelow.coef) c = -c;
                   tBelow.c = -tBelow.c;
                   tBelow.strict = true;
                   std::vector<LinearConstraint> probe{notBranch1, tBelow, affine_form("a-1", ab()), affine_form("b-1", ab())};
                   bool tOk = !detail::fm_feasible_point(probe, 2);
                   Rational sAtMax = s_partial(certE, tMax);
                   bool sOk = sAtMax < sBound && SR + sBound <= Rational(1);

                   long good = 0;
                   std::string firstBad;
                   for (long a = 1; a <= N; ++a)
                     for (long b = 1; b <= N; ++b) {
                       bool ok;
                       if (7 * b > 2 * a) {
                         ok = Rational(a + 2 * b) - Rational(a + b) * SE > Rational(0);
                       } else {
                         auto r = branch2_at(certE, SR, sBound, a, b);
                         ok = r.belowSBound && r.t <= tMax && r.bound > Rational(b);
                       }
                       if (ok) ++good;
                       else if (firstBad.empty()) firstBad = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                     }
                   auto bnd = branch2_at(certE, SR, sBound, 7, 2);
                   bool boundaryOk = !(7 * 2 > 2 * 7) && bnd.bound > Rational(2);

                   auto render = [&](const std::string& b1form, const std::string& verdict, bool t, bool s, long count, bool bd) {
                     std::ostringstream os;
                     os << "beta >= " << b1form << " on " << ratio << " > 0: " << verdict << "; "
                        << "t <= " << tMax << (t ? "" : " fails") << " and S(E," << tMax << ") < " << sBound
                        << (s ? "" : " fails") << " give beta > b on " << ratio << " <= 0; "
                        << "boundary (7,2) in branch 2 with beta > 2" << (bd ? "" : " fails") << "; "
                        << "grid " << N << "x" << N << ": " << count << "/" << N * N << " positive";
                     return os.str();
                   };
                   return compare(render(canonical_text(ex.at("familyBranch1"), ab()), "positive", true, true, N * N, true),
                                  render(bound1.to_string(), v1, tOk, sOk, good, boundaryOk),
                                  "S(E," + tMax.to_string() + ") = " + sAtMax.to_string() +
                                      (firstBad.empty() ? "" : "; first failing grid point " + firstBad));
                 }});

  out.push_back({"beta-family-Ehat-Rprime", "divisors over the exceptional curve of E n R' with weights (b, a)",
                 "(a,b) blow-ups between E and R'", [sc, ex, opt] {
                   const auto& fam = sc->asset().at("families").at("Ehat-Rprime");
                   const Rational SE = s_value(sc->certificate("E"));
                   MultiPoly A = weighted_log_discrepancy(poly_ab(fam.at("weights").at("Rprime")),
                                                          poly_ab(fam.at("weights").at("E")),
                                                          rational_of(fam.at("logDiscrepancies").at("Rprime")),
                                                          rational_of(fam.at("logDiscrepancies").at("E")));
                   MultiPoly bound = A - poly_ab(fam.at("multiplierOfSE")) * rational_poly(SE);
                   const long N = opt.grid;
                   long good = 0;
                   for (long a = 1; a <= N; ++a)
                     for (long b = 1; b <= N; ++b)
                       if (bound.evaluate({Cyclotomic(a), Cyclotomic(b)}).re1() > Rational(0)) ++good;
                   auto render = [&](const std::string& form, const std::string& verdict, long count) {
                     return "beta >= " + form + ": " + verdict + "; grid " + std::to_string(N) + "x" + std::to_string(N) + ": " +
                            std::to_string(count) + "/" + std::to_string(N * N) + " positive";
                   };
                   return compare(render(canonical_text(ex.at("familyEhatRprime"), ab()), "positive", N * N),
                                  render(bound.to_string(), cone_verdict(bound, {}), good));
                 }});

  out.push_back({"log-discrepancies", "log discrepancies of the weighted blow-ups", "A of the (a,b) blow-ups", [sc, ex] {
                   const auto& fams = sc->asset().at("families");
                   std::vector<std::string> want, got;
                   for (const auto& [key, exKey] : {std::pair{"E-R", "logDiscrepancyER"}, {"Ehat-Rprime", "logDiscrepancyEhatRprime"}}) {
                     const auto& f = fams.at(key);
                     std::vector<std::string> names;
                     for (const auto& [n, w] : f.at("weights").items()) names.push_back(n);
                     MultiPoly A(ab());
                     for (const auto& n : names)
                       A += poly_ab(f.at("weights").at(n)) * rational_poly(rational_of(f.at("logDiscrepancies").at(n)));
                     want.push_back(canonical_text(ex.at(exKey), ab()));
                     got.push_back(A.to_string());
                   }
                   return compare(join(want, ", "), join(got, ", "));
                 }});

  out.push_back({"s-partial-E", "closed form of S(E,t) on [0,1] and the branch-2 grid bound", "partial S-integral of E",
                 [sc, ex, opt] {
                   auto cert = sc->certificate("E");
                   MultiPoly closed = s_partial_closed_form(cert);
                   bool agrees = true;
                   for (long k = 0; k <= 12; ++k) {
                     Rational t = Rational(k) / Rational(12);
                     if (closed.evaluate({Cyclotomic(t)}).re1() != s_partial(cert, t)) agrees = false;
                   }
                   const Rational sBound = rational_of(sc->asset().at("families").at("E-R").at("branch2").at("sBound"));
                   const long N = opt.grid;
                   long total = 0, below = 0;
                   for (long a = 1; a <= N; ++a)
                     for (long b = 1; b <= N; ++b)
                       if (7 * b <= 2 * a) {
                         ++total;
                         if (s_partial(cert, Rational(2 * b) / Rational(a + b)) < sBound) ++below;
                       }
                   auto render = [&](const std::string& form, bool ag, long n) {
                     return "S(E,t) = " + form + (ag ? "" : " (disagrees with the interval integral)") + "; S(E,2b/(a+b)) < " +
                            sBound.to_string() + " at " + std::to_string(n) + "/" + std::to_string(total) + " grid points with 7b <= 2a";
                   };
                   return compare(render(canonical_text(ex.at("sPartialE"), {"t"}), true, total), render(closed.to_string(), agrees, below),
                                  "S(E,1) = " + s_partial(cert, Rational(1)).to_string());
                 }});

  out.push_back({"chain-depth-" + std::to_string(opt.depth), "toric blow-up chain starting from F_2, explored exhaustively",
                 "chain of invariant curve blow-ups", [sc, ex, opt] {
                   const auto& c = sc->asset().at("chain");
                   ChainState base = chain_base(c.at("alpha"), c.at("idA"), c.at("beta"), c.at("idB"));
                   std::string baseText = "F_" + std::to_string(base.n) + " {";
                   for (std::size_t i = 0; i < 2; ++i)
                     baseText += std::string(i ? ", " : "") + "(" + std::to_string(base.curves[i].selfOnF) + " on F, " +
                                 std::to_string(base.curves[i].selfOnPartner) + " on partner)";
                   baseText += "}";
                   auto run = explore_chain(base, opt.depth + 1);
                   auto render = [&](const std::string& b, std::size_t paths, std::size_t violations) {
                     return b + "; " + std::to_string(paths) + " paths of length " + std::to_string(opt.depth) + "; " +
                            std::to_string(violations) + " invariant violations";
                   };
                   return compare(render(ex.at("chainBase"), std::size_t{1} << opt.depth, 0),
                                  render(baseText, run.paths, run.violations),
                                  std::to_string(run.distinctStates) + " distinct states, largest n " + std::to_string(run.maxN) +
                                      (run.firstViolation.empty() ? "" : "; " + run.firstViolation));
                 }});

  out.push_back({"certificate-R-rescale", "rescaling the ray of R leaves beta unchanged once A is rescaled",
                 "S is homogeneous in the divisor", [sc] {
                   auto cert = sc->certificate("R");
                   auto r = beta(cert, cert.A);
                   std::vector<std::string> want, got;
                   for (long k : {2L, 3L, 7L}) {
                     auto sc2 = rescaled(cert, Rational(k));
                     auto r2 = beta(sc2, cert.A * Rational(k));
                     want.push_back(sb(r.S * Rational(k), r.beta * Rational(k)));
                     got.push_back(sb(r2.S, r2.beta));
                   }
                   return compare(join(want, "; "), join(got, "; "));
                 }});

  out.push_back({"nef-evidence-E", "positive parts pair nonnegatively with the fibre of E", "positive part of the decomposition",
                 [sc] {
                   auto ev = nef_evidence(sc->certificate("E"));
                   CheckOutcome o;
                   o.status = ev.allNonnegative ? Status::EvidenceOnly : Status::Fail;
                   o.expected = "all pairings >= 0";
                   o.computed = ev.allNonnegative ? "all pairings >= 0" : "negative pairing found";
                   o.note = join(ev.lines, "; ") + "; nefness needs more test curves than are recorded";
                   return o;
                 }});

  out.push_back({"typo-s-partial-E", "the displayed closed form of S(E,t) against the integrated volume",
                 "closed form of the partial S-integral", [sc, ex] {
                   std::string printed = canonical_text(ex.at("sPartialEPrinted"), {"t"});
                   std::string derived = s_partial_closed_form(sc->certificate("E")).to_string();
                   bool consistent = derived == canonical_text(ex.at("sPartialE"), {"t"});
                   CheckOutcome o{printed != derived && consistent ? Status::FlaggedDiscrepancy : Status::Fail, printed, derived,
                                  "the displayed form disagrees with the volume 36-18x^2+4x^3 on [0,1]"};
                   return o;
                 }});

  out.push_back({"typo-nef-part-sign", "the displayed negative part on [2,3] against the volume it must produce",
                 "Zariski decomposition on the last interval", [sc, ex] {
                   const auto& printedNeg = sc->asset().at("certificates").at("E").at("printedLastInterval");
                   auto bad = sc->certificate("E", &printedNeg);
                   std::string failure = certificate_failure(bad);
                   std::string printedVol = raw_volume(bad, bad.intervals.size() - 1).to_string();
                   std::string want = canonical_text(ex.at("volumesE").back(), ray_variable());
                   auto good = sc->certificate("E");
                   bool consistent = volume_polynomial(good, good.intervals.size() - 1).to_string() == want;
                   CheckOutcome o{printedVol != want && consistent ? Status::FlaggedDiscrepancy : Status::Fail,
                                  want, printedVol,
                                  "with coefficient +(x-2) on Rt the volume on [2,3] is not 4(3-x)^3" +
                                      (failure.empty() ? std::string() : "; certificate fails: " + failure)};
                   return o;
                 }});

  out.push_back({"typo-E2-transform", "the displayed proper transform of E2", "proper transforms in the blow-up", [sc] {
                   const auto& up = sc->blowup();
                   DivClass printed = up.parse_class(sc->asset().at("blowup").at("printedE2Transform"));
                   std::string claimed = "E2t = " + sc->class_text(up, printed);
                   std::string derived = "E2t = " + sc->class_text(up, up.named("E2t"));
                   bool isE1 = printed == up.named("E1t");
                   CheckOutcome o{!(printed == up.named("E2t")) && isE1 ? Status::FlaggedDiscrepancy : Status::Fail, claimed, derived,
                                  isE1 ? "the displayed class is the proper transform of E1" : ""};
                   return o;
                 }});

  out.push_back({"typo-Ehat-Rprime-multiplier", "the displayed multiplier of S(E) for the E-R' family",
                 "bound for the (a,b) blow-ups between E and R'", [sc, ex] {
                   const auto& fam = sc->asset().at("families").at("Ehat-Rprime");
                   const Rational SE = s_value(sc->certificate("E"));
                   MultiPoly A = poly_ab("3*a+2*b");
                   MultiPoly printed = A - poly_ab(fam.at("printedMultiplier")) * rational_poly(SE);
                   MultiPoly fixed = A - poly_ab(fam.at("multiplierOfSE")) * rational_poly(SE);
                   std::string concl = canonical_text(ex.at("familyEhatRprime"), ab());
                   CheckOutcome o{printed.to_string() != concl && fixed.to_string() == concl ? Status::FlaggedDiscrepancy : Status::Fail,
                                  concl, printed.to_string(),
                                  "multiplier " + fam.at("multiplierOfSE").get<std::string>() + " gives " + fixed.to_string()};
                   return o;
                 }});

  return out;
}

}  // namespace fano
