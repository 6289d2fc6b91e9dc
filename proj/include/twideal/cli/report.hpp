#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twideal/cli/components.hpp"

namespace twideal {

enum class Evidence { Certified, Heuristic, Refuted, NotApplicable };

inline std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::Certified: return "certified";
    case Evidence::Heuristic: return "heuristic";
    case Evidence::Refuted: return "refuted";
    case Evidence::NotApplicable: return "not-applicable";
  }
  return "?";
}

inline Evidence evidence_from_string(const std::string& s) {
  if (s == "certified") return Evidence::Certified;
  if (s == "heuristic") return Evidence::Heuristic;
  if (s == "refuted") return Evidence::Refuted;
  if (s == "not-applicable") return Evidence::NotApplicable;
  throw Error(ErrorCode::Parse, "unknown evidence kind: " + s);
}

struct ReportRow {
  std::string predicate;
  std::string verdict;
  Evidence evidence = Evidence::NotApplicable;
  int horizon = 0;        // heuristic rows only
  std::string witness;    // refuted rows only
  std::string rule;       // the implication applied
  std::string note;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ClassificationReport {
  std::vector<std::string> flags;
  std::vector<ReportRow> rows;

  const ReportRow* find(const std::string& predicate) const {
    for (const auto& r : rows)
      if (r.predicate == predicate) return &r;
    return nullptr;
  }
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

namespace detail {

inline ReportRow certified(std::string p, std::string v, std::string rule, std::string note = "") {
  return {std::move(p), std::move(v), Evidence::Certified, 0, "", std::move(rule), std::move(note)};
}
inline ReportRow heuristic(std::string p, std::string v, int horizon, std::string rule, std::string note = "") {
  return {std::move(p), std::move(v), Evidence::Heuristic, horizon, "", std::move(rule), std::move(note)};
}
inline ReportRow refuted(std::string p, std::string v, std::string witness, std::string rule, std::string note = "") {
  return {std::move(p), std::move(v), Evidence::Refuted, 0, std::move(witness), std::move(rule), std::move(note)};
}
inline ReportRow not_applicable(std::string p, std::string v, std::string rule, std::string note) {
  return {std::move(p), std::move(v), Evidence::NotApplicable, 0, "", std::move(rule), std::move(note)};
}

/// The rational point cut out by linear forms, when the ideal is one.
template <class F>
std::optional<RationalPoint> rational_point_of(const HomIdeal<F>& P) {
  if constexpr (!std::is_same_v<F, RationalField>) {
    return std::nullopt;
  } else {
    const int nv = P.ring().nvars();
    Matrix<RationalField> A(RationalField{}, 0, static_cast<std::size_t>(nv));
    for (const auto& g : P.gb()) {
      if (g.lead().deg != 1) return std::nullopt;
      std::vector<Rational> row(nv, Rational(0));
      for (const auto& t : g.terms)
        for (int i = 0; i < nv; ++i)
          if (t.m.exp[i] == 1) row[i] = t.c;
      A.append_row(row);
    }
    auto ns = A.nullspace();
    if (ns.size() != 1) return std::nullopt;
    return RationalPoint(ns.front());
  }
}

}  // namespace detail

inline constexpr const char* kRightNoetherian = "right-noetherian";
inline constexpr const char* kStronglyRight = "strongly-right-noetherian";
inline constexpr const char* kLeftChi1 = "left-chi_1";
inline constexpr const char* kLeftNoetherian = "left-noetherian";
inline constexpr const char* kStronglyLeft = "strongly-left-noetherian";
inline constexpr const char* kRightChi = "right-chi-threshold";
inline constexpr const char* kCohDim = "cohomological-dimension";
inline constexpr const char* kTensor = "tensor-square-left-noetherian";

/// Rational points fixed by σ that are cheap to find: coordinate points of a diagonal σ with
/// distinct eigenvalues.
inline std::vector<RationalPoint> obvious_fixed_points(const ProjAutomorphism& sigma) {
  std::vector<RationalPoint> out;
  auto ed = eigen_data(sigma);
  if (!ed.diagonal || !ed.distinct) return out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    std::vector<Rational> c(sigma.size(), Rational(0));
    c[i] = Rational(1);
    out.emplace_back(c);
  }
  return out;
}

/// Verdict table for the idealizer of a scene. Each row applies one implication in its checkable
/// direction; rows whose geometric input is only sampled are heuristic and carry the horizon.
template <class F>
ClassificationReport classify(const PolyRing<F>& R, const SceneFile& sf) {
  using detail::certified;
  using detail::heuristic;
  using detail::not_applicable;
  using detail::refuted;
  ClassificationReport rep;
  const ProjAutomorphism sigma = sf.automorphism();
  std::vector<PrimaryComponent<F>> declared;
  for (const auto& c : sf.components) {
    HomIdeal<F> ci = scene_ideal(R, c.generators);
    declared.push_back({ci, c.prime.empty() ? ci : scene_ideal(R, c.prime)});
  }
  IdealizerScene<F> scene(scene_ideal(R, sf.ideal), sigma, declared);
  const HomIdeal<F>& I = scene.ideal();
  const int H = sf.horizon;

  // Colon behaviour through maxdeg.
  auto stab = stabilization_degree(scene, sf.maxdeg);
  bool colon_constant = !stab.degenerate;
  for (int n = 1; n <= sf.maxdeg && colon_constant; ++n)
    colon_constant = !stab.table[n - 1].equals_ideal && ideals_equal(scene.colon(n), scene.colon(1));
  const bool not_fg = colon_constant;
  if (stab.degenerate) rep.flags.push_back("degenerate: colon is the unit ideal for some n <= " + std::to_string(sf.maxdeg));
  if (not_fg)
    rep.flags.push_back("not a finitely generated idealizer: colon equals " + scene.colon(1).str() +
                        " != I for 1 <= n <= " + std::to_string(sf.maxdeg) + "; noetherian rows refuted");
  else if (!stab.n0)
    rep.flags.push_back("colon not stabilized by n = " + std::to_string(sf.maxdeg));
  else
    rep.flags.push_back("colon stabilizes at n0 = " + std::to_string(*stab.n0));

  // Components.
  std::optional<ComponentAnalysis<F>> comp;
  try {
    comp = component_analysis(scene, sf.order_bound);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Precondition) throw;
    rep.flags.push_back("decomposition unavailable: declare components to classify fixed parts");
  }
  const bool fixed = comp && comp->has_fixed_part();
  if (fixed) rep.flags.push_back("fixed part present: some component has finite order under sigma");

  // Sample orbits.
  std::vector<RationalPoint> samples = sf.points;
  for (const auto& p : obvious_fixed_points(sigma))
    if (std::find(samples.begin(), samples.end(), p) == samples.end()) samples.push_back(p);

  auto orbit_row = [&](const char* name, const HomIdeal<F>& target, const std::string& rule) {
    int finite = 0;
    for (const auto& p : samples) {
      auto o = forward_orbit_hits(p, sigma, target, H);
      if (o.verdict == OrbitVerdict::Infinite)
        return refuted(name, "no", "orbit of " + p.str() + " meets Z infinitely often (" + o.justification + ")", rule);
      if (o.verdict == OrbitVerdict::CertifiedFinite) ++finite;
    }
    return heuristic(name, "yes", H, rule,
                     std::to_string(samples.size()) + " sample orbits, " + std::to_string(finite) +
                         " proven finite; the criterion quantifies over all points");
  };

  // Assumption that no component returns into Z forever.
  Evidence assumption = Evidence::Heuristic;
  if (comp && !fixed) {
    bool all_points = true;
    for (const auto& c : scene.components().empty() ? *native_decomposition(I) : scene.components()) {
      auto pt = detail::rational_point_of(c.prime);
      if (!pt || forward_orbit_hits(*pt, sigma, I, H).verdict != OrbitVerdict::CertifiedFinite) all_points = false;
    }
    if (all_points) assumption = Evidence::Certified;
  }

  auto ct = critical_transversality_certificate(I, sigma);
  for (const auto& h : ct.hypotheses) rep.flags.push_back("assumed: " + h);

  const int codim = I.codimension();
  std::optional<bool> pure_divisor;  // pure codimension 1
  std::string high_codim_witness;
  if (codim > 1) {
    pure_divisor = false;
    high_codim_witness = "Z has codimension " + std::to_string(codim);
  } else if (comp) {
    pure_divisor = true;
    for (const auto& c : comp->components)
      if (c.codim != 1) {
        pure_divisor = false;
        high_codim_witness = "component " + c.prime + " has codimension " + std::to_string(c.codim);
        break;
      }
  }
  const std::string nfg_witness = "colon (I : I^{sigma^n}) is constant and strictly larger than I for 1 <= n <= " +
                                  std::to_string(sf.maxdeg);
  const std::string na_fixed = "assumptions fail: a component has finite order under sigma";

  // 1-2: right noetherian.
  ReportRow right;
  if (fixed) {
    const std::string rule = "fixed components must be periodic and the rest must meet forward orbits finitely";
    if (!comp->j_period)
      right = refuted(kRightNoetherian, "no",
                      "J^{sigma^n} != J for 1 <= n <= " + std::to_string(sf.order_bound) + " (J = " + comp->J->str() + ")",
                      rule);
    else if (!comp->W)
      right = certified(kRightNoetherian, "yes", rule,
                        "J^{sigma^" + std::to_string(*comp->j_period) + "} = J and no infinite-order components");
    else
      right = orbit_row(kRightNoetherian, *comp->W, rule);
  } else if (not_fg) {
    right = refuted(kRightNoetherian, "no", nfg_witness, "a noetherian idealizer is finitely generated");
  } else {
    right = orbit_row(kRightNoetherian, I, "right noetherian iff every forward orbit meets Z finitely often");
  }
  rep.rows.push_back(right);
  {
    ReportRow strong = right;
    strong.predicate = kStronglyRight;
    if (right.verdict == "yes" && fixed) {
      strong = not_applicable(kStronglyRight, "inconclusive", "right noetherian implies strongly right noetherian",
                              na_fixed);
    } else {
      strong.rule = right.verdict == "no" ? "strongly right noetherian implies right noetherian"
                                          : "right noetherian implies strongly right noetherian";
    }
    rep.rows.push_back(strong);
  }

  // 3: left chi_1.
  if (fixed)
    rep.rows.push_back(not_applicable(kLeftChi1, "inconclusive", "idealizers fail left chi_1", na_fixed));
  else if (assumption == Evidence::Certified)
    rep.rows.push_back(certified(kLeftChi1, "no", "idealizers fail left chi_1",
                                 "every component is a point whose orbit meets Z finitely often"));
  else
    rep.rows.push_back(heuristic(kLeftChi1, "no", H, "idealizers fail left chi_1",
                                 "component orbits checked up to order " + std::to_string(sf.order_bound)));

  // 4: left noetherian.
  const std::string ct_rule = "critically transverse translates give a left noetherian idealizer";
  const std::string ct_obstruction = "an invariant subscheme not transverse to Z obstructs left noetherian";
  auto ct_witness = [&] {
    return ct.witness->str() + " (Tor_" + std::to_string(ct.failing_index) + " sheaf nonzero)";
  };
  if (not_fg)
    rep.rows.push_back(refuted(kLeftNoetherian, "no", nfg_witness, "a noetherian idealizer is finitely generated"));
  else if (fixed)
    rep.rows.push_back(not_applicable(kLeftNoetherian, "inconclusive", ct_rule, na_fixed));
  else if (ct.kind == CtKind::Certified)
    rep.rows.push_back(certified(kLeftNoetherian, "yes", ct_rule, ct.reason));
  else if (ct.kind == CtKind::Refuted)
    rep.rows.push_back(refuted(kLeftNoetherian, "no", ct_witness(), ct_obstruction));
  else
    rep.rows.push_back(not_applicable(kLeftNoetherian, "inconclusive", ct_rule, ct.reason));

  // 5: strongly left noetherian.
  const std::string sl_rule = "strongly left noetherian iff Z is pure of codimension 1 and critically transverse";
  if (not_fg)
    rep.rows.push_back(refuted(kStronglyLeft, "no", nfg_witness, "a noetherian idealizer is finitely generated"));
  else if (fixed)
    rep.rows.push_back(not_applicable(kStronglyLeft, "inconclusive", sl_rule, na_fixed));
  else if (pure_divisor && !*pure_divisor)
    rep.rows.push_back(refuted(kStronglyLeft, "no", high_codim_witness, sl_rule));
  else if (!pure_divisor)
    rep.rows.push_back(not_applicable(kStronglyLeft, "inconclusive", sl_rule, "purity of Z unknown"));
  else if (ct.kind == CtKind::Certified)
    rep.rows.push_back(certified(kStronglyLeft, "yes", sl_rule, ct.reason));
  else if (ct.kind == CtKind::Refuted)
    rep.rows.push_back(refuted(kStronglyLeft, "no", ct_witness(), sl_rule));
  else
    rep.rows.push_back(not_applicable(kStronglyLeft, "inconclusive", sl_rule, ct.reason));

  // 6: right chi threshold at d = codim Z.
  const std::string chi_rule = "critically transverse Z of codimension d: right chi_(d-1) holds and right chi_d fails";
  const std::string d = std::to_string(codim), dm1 = std::to_string(codim - 1);
  const bool zero_dim = I.hilbert_polynomial().degree() <= 0;
  if (fixed)
    rep.rows.push_back(not_applicable(kRightChi, "inconclusive", chi_rule, na_fixed));
  else if (ct.kind == CtKind::Certified && (zero_dim || sf.gorenstein))
    rep.rows.push_back(certified(kRightChi, "chi_" + dm1 + " holds, chi_" + d + " fails", chi_rule,
                                 std::string("invariant-subscheme criterion is symmetric in sigma; ") +
                                     (zero_dim ? "Z is zero-dimensional" : "Z declared Gorenstein on smooth P^d")));
  else if (ct.kind == CtKind::Certified)
    rep.rows.push_back(certified(kRightChi, "chi_" + d + " fails", "a left noetherian idealizer fails right chi_d",
                                 "chi_" + dm1 + " needs Z zero-dimensional or declared Gorenstein"));
  else
    rep.rows.push_back(not_applicable(kRightChi, "inconclusive", chi_rule,
                                      ct.kind == CtKind::Refuted ? "Z is not critically transverse" : ct.reason));

  // 7: cohomological dimension.
  const std::string cd_rule = "cohomological dimension is infinite iff hd of O_Z is infinite";
  if (fixed) {
    rep.rows.push_back(not_applicable(kCohDim, "inconclusive", cd_rule, na_fixed));
  } else if (sf.ambient.empty()) {
    rep.rows.push_back(certified(kCohDim, "finite", cd_rule, "P^d is smooth, so every coherent sheaf has finite hd"));
  } else {
    HomIdeal<F> Q = scene_ideal(R, sf.ambient);
    const int jmax = sf.dim + 2;
    try {
      auto probe = truncated_tor_over_quotient(Q, I, I, jmax);
      int vanish = 0;
      for (int j = 1; j <= jmax && !vanish; ++j)
        if (!probe.nonzero[j]) vanish = j;
      if (vanish)
        rep.rows.push_back(certified(kCohDim, "finite", cd_rule,
                                     "Tor_" + std::to_string(vanish) + "(O_Z, k(Z)) vanishes over the ambient ring"));
      else
        rep.rows.push_back(heuristic(kCohDim, "infinite", jmax, cd_rule,
                                     "Tor_j(O_Z, k(Z)) nonzero for 1 <= j <= " + std::to_string(jmax)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Precondition) throw;
      rep.rows.push_back(not_applicable(kCohDim, "inconclusive", cd_rule, e.what()));
    }
  }

  // 8: tensor square.
  const std::string t_rule = "Z not pure of codimension 1 makes R (x) R fail left noetherian";
  if (fixed)
    rep.rows.push_back(not_applicable(kTensor, "inconclusive", t_rule, na_fixed));
  else if (pure_divisor && !*pure_divisor)
    rep.rows.push_back(refuted(kTensor, "no", high_codim_witness, t_rule));
  else
    rep.rows.push_back(not_applicable(kTensor, "inconclusive", t_rule,
                                      pure_divisor ? "implication is silent for divisors" : "purity of Z unknown"));
  return rep;
}

inline ClassificationReport classify(const SceneFile& sf) {
  return with_scene_field(sf, [&](const auto& R) { return classify(R, sf); });
}

inline std::string evidence_label(const ReportRow& r) {
  if (r.evidence == Evidence::Heuristic) return "heuristic(horizon=" + std::to_string(r.horizon) + ")";
  return to_string(r.evidence);
}

/// Plain-text table; deterministic for equal reports.
inline std::string emit_text(const ClassificationReport& rep) {
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s += std::string(w - s.size(), ' ');
    return s;
  };
  out << pad("predicate", 31) << pad("verdict", 28) << pad("evidence", 24) << "details\n";
  for (const auto& f : rep.flags) out << "# " << f << "\n";
  for (const auto& r : rep.rows) {
    std::string details = r.rule;
    if (!r.witness.empty()) details += "; witness: " + r.witness;
    if (!r.note.empty()) details += "; " + r.note;
    out << pad(r.predicate, 31) << pad(r.verdict, 28) << pad(evidence_label(r), 24) << details << "\n";
  }
  return out.str();
}

/// JSON Lines: one header record, then one record per row.
inline std::string emit_records(const ClassificationReport& rep) {
  std::string out;
  nlohmann::ordered_json head = {{"record", "report"}, {"flags", rep.flags}, {"rows", rep.rows.size()}};
  out += head.dump() + "\n";
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json j = {{"record", "row"},     {"predicate", r.predicate}, {"verdict", r.verdict},
                        {"evidence", to_string(r.evidence)}, {"horizon", r.horizon},
                        {"witness", r.witness}, {"rule", r.rule},         {"note", r.note}};
    out += j.dump() + "\n";
  }
  return out;
}

inline std::string emit(const ClassificationReport& rep, const std::string& format) {
  if (format == "text") return emit_text(rep);
  if (format == "records") return emit_records(rep);
  throw Error(ErrorCode::Precondition, "unknown format: " + format);
}

namespace detail {

inline ReportRow row_from_record(const nlohmann::json& j) {
  ReportRow r;
  r.predicate = j.at("predicate").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.evidence = evidence_from_string(j.at("evidence").get<std::string>());
  r.horizon = j.at("horizon").get<int>();
  r.witness = j.at("witness").get<std::string>();
  r.rule = j.at("rule").get<std::string>();
  r.note = j.at("note").get<std::string>();
  return r;
}

}  // namespace detail

/// Inverse of emit_records.
inline ClassificationReport parse_records(const std::string& text) {
  ClassificationReport rep;
  std::istringstream in(text);
  bool header = false;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      const std::string kind = j.value("record", "");
      if (kind == "report") {
        header = true;
        rep.flags = j.at("flags").get<std::vector<std::string>>();
      } else if (kind == "row") {
        rep.rows.push_back(detail::row_from_record(j));
      } else {
        throw Error(ErrorCode::Parse, "unknown record kind: " + kind);
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("bad record: ") + e.what());
    }
  }
  if (!header) throw Error(ErrorCode::Parse, "missing report header record");
  return rep;
}

}  // namespace twideal
