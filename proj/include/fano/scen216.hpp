#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/chow.hpp"
#include "fano/conics.hpp"
#include "fano/elimination.hpp"
#include "fano/grouprep.hpp"
#include "fano/localint.hpp"
#include "fano/report.hpp"
#include "fano/ruled.hpp"
#include "fano/scenario.hpp"

namespace fano {

// Family 2.16: the intersection of two quadrics in P^5 with an action of a
// group of order 12, its four invariant conics and the nets of quadrics
// through pairs of them.
class Scenario216 {
 public:
  explicit Scenario216(nlohmann::json asset) : asset_(std::move(asset)) {
    vars_ = strings_of(asset_.at("variables"));
    for (const auto& [name, text] : asset_.at("forms").items()) forms_[name] = parse(text);
    tau_ = matrix_of(asset_.at("tau"));
    for (const auto& [name, src] : asset_.at("tauImages").items()) forms_[name] = substitute_linear(forms_.at(src), tau_);
    std::vector<CycMatrix> gens;
    for (const auto& name : strings_of(asset_.at("generatorOrder"))) gens.push_back(matrix_of(asset_.at("generators").at(name)));
    group_ = MatrixGroup::enumerate(std::move(gens), "G");
    for (const auto& [name, c] : asset_.at("conics").items()) {
      PencilPlane plane{cyclotomic_of(c.at("lambda")), cyclotomic_of(c.at("mu"))};
      conicNames_.push_back(name);
      conics_.emplace(name, parametrize_conic(name, f(), g(), plane));
    }
    std::sort(conicNames_.begin(), conicNames_.end());
  }

  static std::shared_ptr<const Scenario216> load() { return std::make_shared<const Scenario216>(load_asset("2-16")); }

  const nlohmann::json& asset() const { return asset_; }
  const nlohmann::json& expected() const { return asset_.at("expected"); }
  const std::vector<std::string>& variables() const { return vars_; }
  MultiPoly parse(const std::string& text) const { return MultiPoly::parse(text, vars_).with_variables(vars_); }
  const MultiPoly& form(const std::string& name) const {
    auto it = forms_.find(name);
    if (it == forms_.end()) throw ParseError("unknown form '" + name + "'");
    return it->second;
  }
  const std::map<std::string, MultiPoly>& forms() const { return forms_; }
  const MultiPoly& f() const { return form("f"); }
  const MultiPoly& g() const { return form("g"); }
  const CycMatrix& tau() const { return tau_; }
  const MatrixGroup& group() const { return group_; }
  const std::vector<std::string>& conic_names() const { return conicNames_; }
  const ParametrizedConic& conic(const std::string& name) const {
    auto it = conics_.find(name);
    if (it == conics_.end()) throw ParseError("unknown conic '" + name + "'");
    return it->second;
  }

  // Generators of a net with repeated entries removed, in their printed order.
  std::vector<MultiPoly> net_generators(const std::string& net) const {
    std::vector<MultiPoly> out;
    for (const auto& text : strings_of(asset_.at("nets").at(net).at("generators"))) {
      MultiPoly p = parse(text);
      if (std::none_of(out.begin(), out.end(), [&](const MultiPoly& q) { return q == p; })) out.push_back(std::move(p));
    }
    return out;
  }

  // Parametrized line of the asset, in the parameters l and m.
  std::vector<MultiPoly> line(const std::string& name) const {
    static const std::vector<std::string> lm{"l", "m"};
    std::vector<MultiPoly> out;
    for (const auto& text : strings_of(asset_.at("lines").at(name))) out.push_back(MultiPoly::parse(text, lm).with_variables(lm));
    return out;
  }

 private:
  nlohmann::json asset_;
  std::vector<std::string> vars_;
  std::map<std::string, MultiPoly> forms_;
  CycMatrix tau_;
  MatrixGroup group_;
  std::vector<std::string> conicNames_;
  std::map<std::string, ParametrizedConic> conics_;
};

namespace detail216 {

inline Rational value_of(const nlohmann::json& j) { return rational_of(j); }

// Curve with pairings given by basis name; missing names pair to zero.
inline CurveRecord curve_from(const ChowThreefold& ring, const std::string& name, const nlohmann::json& spec) {
  CurveRecord z{name, spec.at("genus").get<unsigned>(), std::vector<Rational>(ring.rank(), Rational(0))};
  for (std::size_t i = 0; i < ring.rank(); ++i)
    if (spec.contains(ring.basis()[i])) z.pairings[i] = value_of(spec.at(ring.basis()[i]));
  return z;
}

inline ChowThreefold base_ring(const nlohmann::json& chain) {
  const auto& b = chain.at("base");
  return complete_intersection(b.at("dims").get<std::vector<unsigned>>(),
                               b.at("degrees").get<std::vector<std::vector<int>>>(),
                               b.at("names").get<std::vector<std::string>>());
}

// X: the blow-up of the base along the invariant conic.
inline ChowThreefold ring_X(const nlohmann::json& chain) {
  ChowThreefold V4 = base_ring(chain);
  const auto& c = chain.at("conic");
  return blowup_curve(V4, curve_from(V4, c.at("name"), c), c.at("exceptional"));
}

inline RuledClass<Rational> ruled_of(int n, const nlohmann::json& pair) {
  return {n, value_of(pair.at(0)), value_of(pair.at(1))};
}

inline std::string cube_text(const ChowThreefold& r, const DivClass& d) { return r.triple_value(d, d, d).to_string(); }

inline std::string table_text(const std::vector<std::string>& rows, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(rows[i] + ": " + join(cells[i], " "));
  return join(out, "; ");
}

inline std::vector<std::vector<std::string>> incidence_cells(const Scenario216& sc, std::size_t pointIndex) {
  const auto cols = strings_of(sc.asset().at("incidence").at("columns"));
  std::vector<std::vector<std::string>> cells;
  for (const auto& cname : sc.conic_names()) {
    const auto& base = sc.conic(cname);
    ParametrizedConic c = pointIndex ? parametrize_conic(cname, sc.f(), sc.g(), base.plane, pointIndex) : base;
    cells.emplace_back();
    for (const auto& col : cols) cells.back().push_back(to_string(classify_incidence(sc.form(col), sc.f(), sc.g(), c)));
  }
  return cells;
}

inline std::string incidence_expected(const Scenario216& sc) {
  const auto& rows = sc.asset().at("incidence").at("rows");
  std::vector<std::vector<std::string>> cells;
  for (const auto& cname : sc.conic_names()) cells.push_back(strings_of(rows.at(cname)));
  return table_text(sc.conic_names(), cells);
}

// Intersection multiplicity along the conic of two members of the net,
// computed on a transversal slice at one point of the conic.
inline long net_self_multiplicity(const Scenario216& sc, const std::string& net, const std::string& conicName,
                                  std::string* trace = nullptr) {
  const auto& m = sc.asset().at("multiplicity");
  const auto& c = sc.conic(conicName);
  const Rational t0 = rational_of(m.at("slicePoint"));
  std::vector<Cyclotomic> P, dP;
  for (std::size_t i = 0; i < 6; ++i) {
    P.push_back(c.point[i].evaluate({Cyclotomic(t0)}));
    dP.push_back(c.velocity[i].evaluate({Cyclotomic(t0)}));
  }
  const unsigned precision = m.at("precision").get<unsigned>();
  NormalSlice s = normal_slice(sc.f(), sc.g(), P, dP, precision);
  std::vector<MultiPoly> phis;
  for (const auto& gen : sc.net_generators(net)) phis.push_back(restrict_to_slice(gen, s));
  MultiPoly h1(slice_variables()), h2(slice_variables());
  if (phis.size() == 2) {
    h1 = phis[0];
    h2 = phis[1];
  } else {
    const auto& combos = m.at("combinations");
    for (std::size_t i = 0; i < phis.size(); ++i) {
      h1 += phis[i].scaled(Cyclotomic(combos.at(0).at(i).get<long>()));
      h2 += phis[i].scaled(Cyclotomic(combos.at(1).at(i).get<long>()));
    }
  }
  return local_intersection(h1.truncated(precision), h2.truncated(precision), precision, trace);
}

}  // namespace detail216

inline std::vector<CheckSpec> scenario216_checks(std::shared_ptr<const Scenario216> sc, RunOptions = {}) {
  using namespace detail216;
  std::vector<CheckSpec> out;
  const auto& ex = sc->expected();

  out.push_back({"group-order", "order of the group generated by the cyclic shift and the two sign changes",
                 "order of the symmetry group", [sc, ex] {
                   return compare(ex.at("groupOrder"), std::to_string(sc->group().order()),
                                  std::to_string(linear_characters(sc->group()).size()) + " linear characters");
                 }});

  out.push_back({"characters", "the fourteen quadrics sorted by their character", "characters of the invariant quadrics",
                 [sc] {
                   const auto& a = sc->asset();
                   std::vector<std::string> chiNames, want, got;
                   for (const auto& [chi, members] : a.at("characterGroups").items()) {
                     chiNames.push_back(chi);
                     auto m = strings_of(members);
                     std::sort(m.begin(), m.end());
                     want.push_back(chi + ": " + join(m, " "));
                   }
                   std::map<std::string, std::vector<std::string>> found;
                   std::vector<std::string> unmatched;
                   for (const auto& [name, p] : sc->forms()) {
                     auto chi = semi_invariant_character(p, sc->group());
                     std::string label;
                     for (const auto& cn : chiNames) {
                       std::vector<Cyclotomic> vals;
                       for (const auto& v : a.at("characters").at(cn)) vals.push_back(cyclotomic_of(v));
                       if (chi && chi->values == vals) label = cn;
                     }
                     if (label.empty()) unmatched.push_back(name);
                     else found[label].push_back(name);
                   }
                   for (const auto& cn : chiNames) got.push_back(cn + ": " + join(found[cn], " "));
                   return compare(join(want, "; "), join(got, "; "),
                                  unmatched.empty() ? "" : "not semi-invariant for a listed character: " + join(unmatched, " "));
                 }});

  out.push_back({"tau-symmetry", "the coordinate swap preserves f, g and normalises the group", "the extra involution",
                 [sc] {
                   const auto& G = sc->group();
                   const CycMatrix& T = sc->tau();
                   bool normal = true;
                   for (const auto& h : G.generators())
                     if (!G.find(T * h * T)) normal = false;
                   bool fixes = substitute_linear(sc->f(), T) == sc->f() && substitute_linear(sc->g(), T) == sc->g();
                   bool invol = T * T == CycMatrix::identity(T.rows());
                   auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
                   return compare("involution: yes; fixes f and g: yes; normalises G: yes",
                                  "involution: " + yn(invol) + "; fixes f and g: " + yn(fixes) + "; normalises G: " + yn(normal));
                 }});

  out.push_back({"invariant-conics", "planes of the pencil on which f and g are proportional", "the four invariant conics",
                 [sc, ex] {
                   auto search = invariant_planes(sc->f(), sc->g(), small_cyclotomics(3, 2));
                   std::vector<std::string> matched, ranks;
                   for (const auto& name : sc->conic_names()) {
                     const auto& c = sc->conic(name);
                     bool hit = std::any_of(search.planes.begin(), search.planes.end(),
                                            [&](const PencilPlane& p) { return p.same_as(c.plane); });
                     matched.push_back(name + (hit ? "" : " (missing)"));
                     ranks.push_back(std::to_string(gram_matrix(c.equation).rank()));
                   }
                   std::string wantRanks(sc->conic_names().size() * 2 - 1, ' ');
                   for (std::size_t i = 0; i < wantRanks.size(); i += 2) wantRanks[i] = '3';
                   return compare(ex.at("conicCount").get<std::string>() + " planes, search complete: " + join(sc->conic_names(), " ") +
                                      "; Gram ranks " + wantRanks,
                                  std::to_string(search.planes.size()) + " planes, search " +
                                      (search.complete ? "complete" : "incomplete") + ": " + join(matched, " ") +
                                      "; Gram ranks " + join(ranks, " "),
                                  "minor gcd " + search.gcd.to_string("lam"));
                 }});

  out.push_back({"plane-disjointness", "the invariant planes pairwise meet only at the origin", "the invariant conics are disjoint",
                 [sc] {
                   const auto& names = sc->conic_names();
                   std::vector<std::string> want, got;
                   for (std::size_t i = 0; i < names.size(); ++i)
                     for (std::size_t j = i + 1; j < names.size(); ++j) {
                       const auto& a = sc->conic(names[i]).plane;
                       const auto& b = sc->conic(names[j]).plane;
                       want.push_back(names[i] + names[j] + " 6");
                       got.push_back(names[i] + names[j] + " " +
                                     std::to_string(CycMatrix::vstack(plane_equations(a), plane_equations(b)).rank()));
                     }
                   return compare(join(want, ", "), join(got, ", "));
                 }});

  out.push_back({"pencil-relations", "linear relations among the quadrics", "relations between f, g and the quadrics f_ij",
                 [sc] {
                   std::vector<std::string> names;
                   std::vector<MultiPoly> images;
                   for (const auto& [n, p] : sc->forms()) {
                     names.push_back(n);
                     images.push_back(p);
                   }
                   std::vector<std::string> want, got;
                   for (const auto& rel : strings_of(sc->asset().at("pencilRelations"))) {
                     MultiPoly r = MultiPoly::parse(rel, names).with_variables(names);
                     if (r.total_degree() > 1 || !r.constant_term().is_zero()) throw ParseError("relation is not linear: " + rel);
                     want.push_back("0");
                     got.push_back(r.compose(images).to_string());
                   }
                   return compare("residuals " + join(want, ", "), "residuals " + join(got, ", "));
                 }});

  for (const auto& [key, d] : sc->asset().at("discriminants").items()) {
    const std::string k = key;
    out.push_back({"discriminant-" + k, "discriminant quartic of the projection from conic plane " + d.at("plane").get<std::string>(),
                   "discriminant curve of the conic bundle", [sc, k] {
                     const auto& d = sc->asset().at("discriminants").at(k);
                     const std::vector<std::string> base{"x0", "x1", "x2"};
                     MultiPoly want = MultiPoly::parse(d.at("quartic").get<std::string>(), base).with_variables(base);
                     auto disc = conic_bundle_discriminant(sc->f(), sc->g(), sc->conic(d.at("plane")).plane);
                     Proportionality pr = proportionality(disc.quartic, want);
                     auto cert = plane_curve_smoothness(disc.quartic);
                     std::string smooth = cert.smooth ? "smooth" : "not certified smooth";
                     return compare("proportional to " + want.to_string() + "; smooth",
                                    (pr.kind == Proportionality::Kind::Scalar ? "proportional to " + want.to_string()
                                                                              : "computed " + disc.quartic.to_string()) +
                                        "; " + smooth,
                                    "scalar " + pr.to_string() + ", residual from " + disc.splitForm + ", stripped " +
                                        std::to_string(disc.strippedPowers) + " factors of " + disc.eliminated.to_string() +
                                        ", smoothness attempts " + std::to_string(cert.attempts));
                   }});
  }

  out.push_back({"incidence-table", "how each quadric f_ij meets each conic on the threefold", "incidence of quadrics and conics",
                 [sc] { return compare(incidence_expected(*sc), table_text(sc->conic_names(), incidence_cells(*sc, 0))); }});

  out.push_back({"incidence-second-point", "incidence table recomputed with a different conic parametrization",
                 "incidence of quadrics and conics", [sc] {
                   return compare(incidence_expected(*sc), table_text(sc->conic_names(), incidence_cells(*sc, 1)),
                                  "classification is over Q(w)(t) and must not depend on the chosen base point");
                 }});

  out.push_back({"chain-X", "blow-up of the complete intersection along an invariant conic", "the threefold X as a blow-up",
                 [sc, ex] {
                   const auto& chain = sc->asset().at("chain");
                   ChowThreefold V4 = base_ring(chain);
                   ChowThreefold X = ring_X(chain);
                   const auto E = X.named(chain.at("conic").at("exceptional"));
                   CurveRecord C = curve_from(V4, "C", chain.at("conic"));
                   return compare("(-K_V4)^3=32, K.C=-4, E^3=" + ex.at("EcubeX").get<std::string>() +
                                      ", (-K_X)^3=" + ex.at("minusKcubeX").get<std::string>(),
                                  "(-K_V4)^3=" + cube_text(V4, V4.anticanonical()) + ", K.C=" + V4.canonical_degree(C).to_string() +
                                      ", E^3=" + cube_text(X, E) + ", (-K_X)^3=" + cube_text(X, X.anticanonical()));
                 }});

  out.push_back({"chain-Z", "blow-up of X along a curve Z with E.Z = -2; the exceptional surface is F_8", "the F_8 case",
                 [sc, ex] {
                   const auto& vz = sc->asset().at("chain").at("variantZ");
                   ChowThreefold X = ring_X(sc->asset().at("chain"));
                   CurveRecord Z = curve_from(X, "Z", vz.at("Z"));
                   ChowThreefold W = blowup_curve(X, Z, vz.at("Z").at("exceptional"));
                   const auto F = W.named(vz.at("Z").at("exceptional"));
                   const auto& r = vz.at("ruled");
                   const int n = r.at("n");
                   auto minusF = ruled_of(n, r.at("minusFonF"));
                   const std::vector<std::string> mv{"m"};
                   RuledClass<MultiPoly> D{n, MultiPoly::parse(r.at("Dtilde").at(0).get<std::string>(), mv),
                                           MultiPoly::parse(r.at("Dtilde").at(1).get<std::string>(), mv)};
                   RuledClass<MultiPoly> s{n, MultiPoly(r.at("section").at(0).get<int>()), MultiPoly(r.at("section").at(1).get<int>())};
                   Rational normalDeg = normal_bundle_degree(X, Z);
                   return compare("-K.Z=6, deg N=4, F^3=" + ex.at("FcubeZ").get<std::string>() + ", (-F|F)^2=" +
                                      ex.at("FcubeZ").get<std::string>() + ", D.s=" + canonical_text(ex.at("ruledZ"), mv),
                                  "-K.Z=" + (-X.canonical_degree(Z)).to_string() + ", deg N=" + normalDeg.to_string() +
                                      ", F^3=" + cube_text(W, F) + ", (-F|F)^2=" + ruled_pair(minusF, minusF).to_string() +
                                      ", D.s=" + ruled_pair(D, s).with_variables(mv).to_string(),
                                  "F is F_" + std::to_string(n) + " by input; only the class arithmetic is checked");
                 }});

  out.push_back({"chain-C", "blow-up of X along a curve with E.Z = 0, then along the curve Z~ in F_2", "the F_2 case",
                 [sc, ex] {
                   const auto& vc = sc->asset().at("chain").at("variantC");
                   ChowThreefold X = ring_X(sc->asset().at("chain"));
                   CurveRecord Z = curve_from(X, "Z", vc.at("Z"));
                   const std::string Fn = vc.at("Z").at("exceptional");
                   ChowThreefold V = blowup_curve(X, Z, Fn);
                   const auto F = V.named(Fn);
                   const auto antiKV = V.anticanonical();

                   const auto& r = vc.at("ruled");
                   const int n = r.at("n");
                   auto kF = ruled_of(n, r.at("antiKonF")), zt = ruled_of(n, r.at("Ztilde")), fF = ruled_of(n, r.at("FonF"));
                   // Restrictions to F must reproduce the ring's numbers on F.
                   Rational ringK2F = V.triple_value(antiKV, antiKV, F), ringKF2 = V.triple_value(antiKV, F, F);
                   bool restrictionOk = ruled_pair(kF, kF) == ringK2F && ruled_pair(kF, fF) == ringKF2 &&
                                        ruled_pair(fF, fF) == V.triple_value(F, F, F);

                   CurveRecord Zt = curve_from(V, "Ztilde", vc.at("Ztilde"));
                   bool pairingOk = V.pair_with_curve(antiKV, Zt).constant_term().re1() == ruled_pair(kF, zt) &&
                                    V.pair_with_curve(F, Zt).constant_term().re1() == ruled_pair(fF, zt);
                   const std::string Rn = vc.at("Ztilde").at("exceptional");
                   ChowThreefold Y = blowup_curve(V, Zt, Rn);
                   const auto params = strings_of(vc.at("DhatParameters"));
                   DivClass Dhat = Y.parse_class(vc.at("Dhat"), params);
                   const auto antiKY = Y.anticanonical();
                   MultiPoly k2d = Y.triple(antiKY, antiKY, Dhat).with_variables(params);
                   auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
                   return compare("F^3=" + ex.at("FcubeC").get<std::string>() + ", (-K_V)^3=" + ex.at("minusKcubeV").get<std::string>() +
                                      ", -K_V.Z~=" + ex.at("minusKVdotZtilde").get<std::string>() +
                                      ", restrictions to F agree: yes, Z~ pairings agree: yes, (-K_Y)^3=" +
                                      ex.at("minusKcubeY").get<std::string>() +
                                      ", (-K_Y)^2.D=" + canonical_text(ex.at("minusKY2Dhat"), params),
                                  "F^3=" + cube_text(V, F) + ", (-K_V)^3=" + cube_text(V, antiKV) +
                                      ", -K_V.Z~=" + ruled_pair(kF, zt).to_string() + ", restrictions to F agree: " +
                                      yn(restrictionOk) + ", Z~ pairings agree: " + yn(pairingOk) +
                                      ", (-K_Y)^3=" + cube_text(Y, antiKY) + ", (-K_Y)^2.D=" + k2d.to_string(),
                                  "(-K_V|F)^2 = " + ruled_pair(kF, kF).to_string() + " = (-K_V)^2.F = " + ringK2F.to_string());
                 }});

  out.push_back({"h0-ladder", "sections of -K_V against sections on F_2", "dimension count for the anticanonical system",
                 [sc, ex] {
                   const auto& vc = sc->asset().at("chain").at("variantC");
                   const auto& kF = vc.at("ruled").at("antiKonF");
                   long hV = riemann_roch_anticanonical(rational_of(ex.at("minusKcubeV")));
                   long hF = ruled_section_count(vc.at("ruled").at("n"), kF.at(0).get<long>(), kF.at(1).get<long>());
                   return compare("h0(-K_V)=" + ex.at("h0V").get<std::string>() + " = 1 + h0(F,-K_V|F)=" + ex.at("h0F").get<std::string>(),
                                  "h0(-K_V)=" + std::to_string(hV) + " = " + std::to_string(hV - hF) + " + h0(F,-K_V|F)=" +
                                      std::to_string(hF));
                 }});

  out.push_back({"net-containment", "every net vanishes on its base conics and lines", "base loci of the nets", [sc] {
                   std::vector<std::string> want, got;
                   std::vector<std::string> lineNames;
                   for (const auto& [n, v] : sc->asset().at("lines").items()) lineNames.push_back(n);
                   long linesOnV4 = 0;
                   for (const auto& ln : lineNames) {
                     auto L = sc->line(ln);
                     if (sc->f().compose(L).is_zero() && sc->g().compose(L).is_zero()) ++linesOnV4;
                   }
                   want.push_back("lines on V4 " + std::to_string(lineNames.size()) + "/" + std::to_string(lineNames.size()));
                   got.push_back("lines on V4 " + std::to_string(linesOnV4) + "/" + std::to_string(lineNames.size()));
                   for (const auto& [net, spec] : sc->asset().at("nets").items()) {
                     auto gens = sc->net_generators(net);
                     std::vector<std::string> base = strings_of(spec.at("baseConics"));
                     auto lines = strings_of(spec.at("baseLines"));
                     base.insert(base.end(), lines.begin(), lines.end());
                     std::vector<std::string> hits;
                     for (const auto& b : base) {
                       bool zero = true;
                       for (const auto& h : gens) {
                         const bool isConic = b.size() == 2 && b[0] == 'C';
                         MultiPoly r = isConic ? h.compose(sc->conic(b).point) : h.compose(sc->line(b));
                         if (!r.is_zero()) zero = false;
                       }
                       if (zero) hits.push_back(b);
                     }
                     want.push_back(net + " on " + join(base, " "));
                     got.push_back(net + " on " + join(hits, " "));
                   }
                   return compare(join(want, "; "), join(got, "; "));
                 }});

  out.push_back({"net-multiplicity", "multiplicity along the conic of the intersection of two members of each net",
                 "local intersection multiplicity of the nets", [sc] {
                   const long threshold = sc->asset().at("multiplicity").at("threshold").get<long>();
                   std::vector<std::string> want, got, notes;
                   for (const auto& pair : sc->asset().at("multiplicityPairs")) {
                     const std::string conic = pair.at("conic");
                     for (const char* role : {"first", "second"}) {
                       const std::string net = pair.at(role);
                       long m = net_self_multiplicity(*sc, net, conic);
                       want.push_back(net + "@" + conic + " < " + std::to_string(threshold));
                       got.push_back(net + "@" + conic + (m < threshold ? " < " : " >= ") + std::to_string(threshold));
                       notes.push_back(net + "@" + conic + " = " + std::to_string(m));
                     }
                   }
                   return compare(join(want, ", "), join(got, ", "),
                                  join(notes, ", ") + "; values at one point of the conic bound the generic value from above");
                 }});

  out.push_back({"sl23-summands", "binary tetrahedral group and the one-dimensional summands of W2 x Sym^3 W2",
                 "the curves Z1 and Z1'", [sc, ex] {
                   const auto& s = sc->asset().at("sl23");
                   CycMatrix I = matrix_of(s.at("I")), J = matrix_of(s.at("J"));
                   CycMatrix C = Cyclotomic(Rational(1, 2)) * (I + J + I * J - CycMatrix::identity(2));
                   MatrixGroup G = MatrixGroup::enumerate({I, J, C}, "SL(2,3)");
                   Representation W{G.generators()};
                   Representation T = tensor_rep(W, sym_power_rep(W, 3));
                   std::size_t total = 0;
                   std::vector<std::string> split;
                   for (const auto& chi : linear_characters(G)) {
                     std::size_t d = character_eigenspace_dim(G, T, chi);
                     total += d;
                     split.push_back(chi.to_string() + ":" + std::to_string(d));
                   }
                   return compare("order " + ex.at("sl23Order").get<std::string>() + ", one-dimensional summands " +
                                      ex.at("oneDimSummands").get<std::string>(),
                                  "order " + std::to_string(G.order()) + ", one-dimensional summands " + std::to_string(total),
                                  "split by character " + join(split, " "));
                 }});

  out.push_back({"orbit-min-length", "shortest orbit of the binary tetrahedral group on P^1", "orbits on the conic", [sc, ex] {
                   const auto& s = sc->asset().at("sl23");
                   CycMatrix I = matrix_of(s.at("I")), J = matrix_of(s.at("J"));
                   CycMatrix C = Cyclotomic(Rational(1, 2)) * (I + J + I * J - CycMatrix::identity(2));
                   MatrixGroup G = MatrixGroup::enumerate({I, J, C});
                   std::size_t scalars = 0;
                   std::vector<unsigned> orders;
                   for (const auto& e : G.elements()) {
                     if (element_order(e, true) == 1) ++scalars;
                     orders.push_back(element_order(e, true));
                   }
                   std::size_t image = G.order() / scalars;
                   return compare("image order 12, shortest orbit " + ex.at("minOrbit").get<std::string>(),
                                  "image order " + std::to_string(image) + ", shortest orbit " +
                                      std::to_string(min_orbit_length_on_P1(image, orders)));
                 }});

  out.push_back({"v4-smoothness", "the pencil determinant of f and g has six distinct roots", "smoothness of the complete intersection",
                 [sc] {
                   const std::vector<std::string> lv{"l"};
                   CycMatrix A = gram_matrix(sc->f()), B = gram_matrix(sc->g());
                   PolyMatrix P(6, 6);
                   const MultiPoly l = MultiPoly::variable(lv, std::size_t{0});
                   for (std::size_t i = 0; i < 6; ++i)
                     for (std::size_t j = 0; j < 6; ++j) P(i, j) = l * MultiPoly(A(i, j)) + MultiPoly::constant(lv, B(i, j));
                   CycUniPoly det = CycUniPoly::from_multi(bareiss_det(P).with_variables(lv), 0);
                   bool sq = binary_form_squarefree(det, 6);
                   CheckOutcome o;
                   o.status = sq ? Status::EvidenceOnly : Status::Fail;
                   o.expected = "squarefree of degree 6";
                   o.computed = sq ? "squarefree of degree 6" : "repeated root in " + det.to_string("l");
                   o.note = "det(l*A_f + A_g) = " + det.to_string("l");
                   return o;
                 }});

  out.push_back({"typo-f-j1-x3", "the displayed quadrics f_j1 written with x3 in place of x2", "the quadrics f_ij", [sc] {
                   const auto& printed = sc->asset().at("printedForms");
                   std::vector<std::string> claimed, found;
                   bool allBroken = true, allFixed = true;
                   for (const auto& [name, text] : printed.items()) {
                     auto chiP = semi_invariant_character(sc->parse(text), sc->group());
                     auto chiF = semi_invariant_character(sc->form(name), sc->group());
                     claimed.push_back(name + " semi-invariant");
                     found.push_back(name + (chiP ? " semi-invariant" : " not semi-invariant"));
                     if (chiP) allBroken = false;
                     if (!chiF) allFixed = false;
                   }
                   return CheckOutcome{allBroken && allFixed ? Status::FlaggedDiscrepancy : Status::Fail, join(claimed, ", "),
                                       join(found, ", "), "with x2 in place of x3 each form is semi-invariant"};
                 }});

  out.push_back({"typo-net-Mprime3-duplicate", "the displayed second net for i = 3 repeats a generator", "the nets M and M'",
                 [sc] {
                   auto printed = strings_of(sc->asset().at("nets").at("Mprime3").at("generators"));
                   std::size_t distinct = sc->net_generators("Mprime3").size();
                   return CheckOutcome{distinct < printed.size() ? Status::FlaggedDiscrepancy : Status::Fail,
                                       std::to_string(printed.size()) + " distinct generators",
                                       std::to_string(distinct) + " distinct generators",
                                       "the net is used with its distinct generators only"};
                 }});

  return out;
}

}  // namespace fano
