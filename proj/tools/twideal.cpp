#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twideal/cli.hpp"

using namespace twideal;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResource = 4;

/// Rendered result of one subcommand: a text block and the equivalent record stream.
struct Output {
  std::string text;
  std::vector<json> records;

  void line(const std::string& s) { text += s + "\n"; }
  void record(json j) { records.push_back(std::move(j)); }
  std::string render(const std::string& format) const {
    if (format == "text") return text;
    std::string out;
    for (const auto& r : records) out += r.dump() + "\n";
    return out;
  }
};

struct Options {
  std::string scene_path;
  std::string format = "text";
  int n = 1;
  int j = 1;
  std::string ideal;
  std::string order = "degrevlex";
  std::optional<int> max_degree;
  std::optional<int> oracle_horizon;
  std::optional<int> horizon;
  std::optional<int> deg_bound;
};

SceneFile load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open scene file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  SceneParse p = parse_scene(ss.str());
  if (!p.ok()) {
    std::string msg = "scene has " + std::to_string(p.diagnostics.size()) + " problem(s)";
    for (const auto& d : p.diagnostics) msg += "\n  " + path + ": " + d.str();
    throw Error(ErrorCode::Parse, msg);
  }
  return *p.scene;
}

/// Semicolon-separated generators from --ideal.
template <class F>
HomIdeal<F> option_ideal(const PolyRing<F>& R, const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::Precondition, "--ideal is required");
  std::vector<SceneLine> lines;
  std::stringstream ss(text);
  for (std::string g; std::getline(ss, g, ';');)
    if (!detail::trim(g).empty()) lines.push_back({0, detail::trim(g)});
  PolyRing<RationalField> Q(R.nvars());
  for (const auto& l : lines)
    if (!Q.parse(l.text).is_homogeneous()) throw Error(ErrorCode::Parse, "inhomogeneous generator: " + l.text);
  return scene_ideal(R, lines);
}

template <class F>
std::vector<std::string> gens_text(const HomIdeal<F>& I) {
  std::vector<std::string> out;
  for (const auto& g : I.gens()) out.push_back(I.ring().to_string(g));
  return out;
}

template <class F>
IdealizerScene<F> make_scene(const PolyRing<F>& R, const SceneFile& sf) {
  std::vector<PrimaryComponent<F>> declared;
  for (const auto& c : sf.components) {
    HomIdeal<F> ci = scene_ideal(R, c.generators);
    declared.push_back({ci, c.prime.empty() ? ci : scene_ideal(R, c.prime)});
  }
  return IdealizerScene<F>(scene_ideal(R, sf.ideal), sf.automorphism(), declared);
}

template <class F>
Output cmd_gb(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  TermOrder ord;
  if (o.order == "lex") ord = TermOrder::lex();
  else if (o.order != "degrevlex") throw Error(ErrorCode::Precondition, "unknown order: " + o.order);
  HomIdeal<F> I = groebner(o.ideal.empty() ? scene_ideal(R, sf.ideal) : option_ideal(R, o.ideal), ord);
  Output out;
  out.line("reduced Groebner basis (" + o.order + "), " + std::to_string(I.gens().size()) + " elements");
  for (const auto& g : gens_text(I)) out.line("  " + g);
  out.record({{"record", "gb"}, {"order", o.order}, {"basis", gens_text(I)}});
  return out;
}

template <class F>
Output cmd_colon(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  auto scene = make_scene(R, sf);
  HomIdeal<F> C = groebner(scene.colon(o.n));
  Output out;
  out.line("(I : I^{sigma^" + std::to_string(o.n) + "}) = " + C.str());
  out.line("equals I: " + std::string(ideals_equal(C, scene.ideal()) ? "yes" : "no"));
  out.record({{"record", "colon"}, {"n", o.n}, {"basis", gens_text(C)}, {"equals_ideal", ideals_equal(C, scene.ideal())}});
  return out;
}

template <class F>
Output cmd_tor(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  HomIdeal<F> I = scene_ideal(R, sf.ideal);
  HomIdeal<F> J = option_ideal(R, o.ideal);
  int bound = o.deg_bound.value_or(8);
  auto T = graded_tor(I, J, o.j, bound);
  Output out;
  out.line("Tor_" + std::to_string(o.j) + "(S/I, S/J)");
  std::string dims;
  for (long d : T.dims) dims += (dims.empty() ? "" : " ") + std::to_string(d);
  out.line("  graded dimensions, degrees 0.." + std::to_string(bound) + ": " + dims);
  out.line("  Hilbert polynomial: " + T.hilbert_polynomial.str());
  out.line("  sheaf: " + std::string(T.sheaf_zero() ? "zero" : "nonzero"));
  out.record({{"record", "tor"}, {"j", o.j}, {"dims", T.dims}, {"hilbert_polynomial", T.hilbert_polynomial.str()},
              {"sheaf_zero", T.sheaf_zero()}});
  return out;
}

template <class F>
Output cmd_transverse(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  auto v = homologically_transverse(scene_ideal(R, sf.ideal), option_ideal(R, o.ideal));
  Output out;
  if (v.transverse) out.line("homologically transverse");
  else out.line("not transverse: Tor_" + std::to_string(v.failing_index) + " sheaf is nonzero");
  out.record({{"record", "transverse"}, {"transverse", v.transverse}, {"failing_index", v.failing_index}});
  return out;
}

template <class F>
Output cmd_bezout(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  long total = serre_multiplicity_total(scene_ideal(R, sf.ideal), option_ideal(R, o.ideal));
  Output out;
  out.line("total intersection multiplicity: " + std::to_string(total));
  out.record({{"record", "bezout"}, {"total", total}});
  return out;
}

/// Commutation relations among the variables and associativity on products of variables.
template <class F>
Output cmd_twist_check(const PolyRing<F>& R, const SceneFile& sf, const Options&) {
  const ProjAutomorphism sigma = sf.automorphism();
  const int nv = R.nvars();
  auto var = [&](int i) { return twisted(R, 1, R.var(i)); };
  Output out;
  out.line("commutation relations x_i * x_j = c x_j * x_i:");
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      auto ab = twist_multiply(R, var(i), var(j), sigma).poly;
      auto ba = twist_multiply(R, var(j), var(i), sigma).poly;
      std::optional<typename F::Elem> c;
      if (!ba.is_zero() && ab.size() == ba.size()) {
        auto ratio = ab.terms.front().c / ba.terms.front().c;
        if (R.sub(ab, R.scale(ba, ratio)).is_zero()) c = ratio;
      }
      std::string rel = c ? c->str() : "none";
      out.line("  x" + std::to_string(i) + " * x" + std::to_string(j) + " = " +
               (c ? rel + " x" + std::to_string(j) + " * x" + std::to_string(i) : "(no scalar relation)"));
      out.record({{"record", "commutation"}, {"i", i}, {"j", j}, {"scalar", rel}});
    }
  int checked = 0, failed = 0;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b)
      for (int c = 0; c < nv; ++c) {
        auto l = twist_multiply(R, twist_multiply(R, var(a), var(b), sigma), var(c), sigma).poly;
        auto r = twist_multiply(R, var(a), twist_multiply(R, var(b), var(c), sigma), sigma).poly;
        ++checked;
        if (!R.sub(l, r).is_zero()) ++failed;
      }
  out.line("associativity on " + std::to_string(checked) + " variable triples: " + (failed ? "FAILED" : "ok"));
  out.record({{"record", "associativity"}, {"checked", checked}, {"failed", failed}});
  if (failed) throw Error(ErrorCode::Verification, "twisted product is not associative");
  return out;
}

template <class F>
Output cmd_idealizer(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  auto scene = make_scene(R, sf);
  const int N = o.max_degree.value_or(sf.maxdeg);
  const int M = o.oracle_horizon.value_or(sf.oracle);
  auto rows = idealizer_hilbert(scene, N);
  Output out;
  out.line("n  dim_B  dim_I  dim_R  stabilized  oracle");
  for (const auto& r : rows) {
    bool agree = r.n == 0 || oracle_piece(scene, r.n, M) == idealizer_piece(scene, r.n);
    std::ostringstream ln;
    ln << r.n << "  " << r.dim_B << "  " << r.dim_I << "  " << r.dim_R << "  " << (r.stabilized ? "yes" : "no") << "  "
       << (agree ? "agrees" : "DIFFERS");
    out.line(ln.str());
    out.record({{"record", "idealizer"}, {"n", r.n}, {"dim_B", r.dim_B}, {"dim_I", r.dim_I}, {"dim_R", r.dim_R},
                {"stabilized", r.stabilized}, {"oracle_agrees", agree}, {"oracle_horizon", M}});
    if (!agree) throw Error(ErrorCode::Verification, "oracle piece differs from colon piece at n = " + std::to_string(r.n));
  }
  auto st = stabilization_degree(scene, N);
  std::string s = st.degenerate ? "degenerate (colon is the unit ideal)"
                  : st.n0       ? "stabilizes at n0 = " + std::to_string(*st.n0)
                                : "not stabilized by " + std::to_string(N);
  out.line(s);
  out.record({{"record", "stabilization"}, {"summary", s}});
  return out;
}

template <class F>
Output cmd_orbit(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  HomIdeal<F> Z = saturate(scene_ideal(R, sf.ideal));
  const int H = o.horizon.value_or(sf.horizon);
  if (sf.points.empty()) throw Error(ErrorCode::Precondition, "scene declares no points");
  Output out;
  for (const auto& p : sf.points) {
    auto rep = forward_orbit_hits(p, sf.automorphism(), Z, H);
    std::string hits;
    for (long h : rep.hits) hits += (hits.empty() ? "" : ",") + std::to_string(h);
    out.line(p.str() + ": " + to_string(rep.verdict) + ", hits {" + hits + "}; " + rep.justification);
    out.record({{"record", "orbit"}, {"point", p.str()}, {"verdict", to_string(rep.verdict)}, {"hits", rep.hits},
                {"horizon", H}, {"n0", rep.n0}, {"period", rep.period}, {"justification", rep.justification}});
  }
  return out;
}

template <class F>
Output cmd_ct_cert(const PolyRing<F>& R, const SceneFile& sf, const Options&) {
  auto c = critical_transversality_certificate(saturate(scene_ideal(R, sf.ideal)), sf.automorphism());
  Output out;
  out.line("critical transversality: " + to_string(c.kind));
  out.line("  " + c.reason);
  if (c.witness) out.line("  witness: " + c.witness->str() + " (Tor_" + std::to_string(c.failing_index) + ")");
  out.line("  invariant subschemes checked: " + std::to_string(c.checked));
  for (const auto& h : c.hypotheses) out.line("  assumes: " + h);
  out.record({{"record", "ct-cert"}, {"kind", to_string(c.kind)}, {"reason", c.reason},
              {"witness", c.witness ? c.witness->str() : ""}, {"failing_index", c.failing_index},
              {"checked", c.checked}, {"hypotheses", c.hypotheses}});
  return out;
}

template <class F>
Output cmd_hd_probe(const PolyRing<F>& R, const SceneFile& sf, const Options& o) {
  if (sf.ambient.empty()) throw Error(ErrorCode::Precondition, "scene has no ambient block");
  HomIdeal<F> Q = scene_ideal(R, sf.ambient);
  HomIdeal<F> Z = scene_ideal(R, sf.ideal);
  const int jmax = o.j > 1 ? o.j : 6;
  auto rep = truncated_tor_over_quotient(Q, Z, Z, jmax, o.deg_bound);
  Output out;
  out.line("Tor_j(O_Z, k(Z)) over the ambient ring, truncated at degree " + std::to_string(rep.deg_bound));
  for (int j = 0; j <= jmax; ++j) {
    std::string dims;
    for (long d : rep.truncated_dims[j]) dims += (dims.empty() ? "" : " ") + std::to_string(d);
    out.line("  j=" + std::to_string(j) + ": " + (rep.nonzero[j] ? "nonzero" : "zero") + "  [" + dims + "]");
    out.record({{"record", "hd-probe"}, {"j", j}, {"nonzero", static_cast<bool>(rep.nonzero[j])},
                {"dims", rep.truncated_dims[j]}});
  }
  out.line(std::string("routes agree: ") + (rep.routes_agree ? "yes" : "no"));
  out.line(std::string("infinite hd evidence: ") + (rep.infinite_hd_evidence ? "yes" : "no"));
  out.record({{"record", "hd-summary"}, {"routes_agree", rep.routes_agree},
              {"infinite_hd_evidence", rep.infinite_hd_evidence}, {"deg_bound", rep.deg_bound}});
  if (!rep.routes_agree) throw Error(ErrorCode::Verification, "the two Tor routes disagree");
  return out;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return kExitParse;
    case ErrorCode::Verification: return kExitVerification;
    case ErrorCode::ResourceCap: return kExitResource;
    default: return kExitOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted idealizer toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));

  auto add = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("scene", o.scene_path, "Scene file")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
    return sub;
  };
  auto* gb = add("gb", "Reduced Groebner basis of the scene ideal or --ideal");
  gb->add_option("--ideal", o.ideal, "Generators separated by ';'");
  gb->add_option("--order", o.order, "degrevlex or lex");
  add("colon", "Colon ideal (I : I^{sigma^n})")->add_option("--n", o.n, "Twist exponent");
  auto* tor = add("tor", "Graded Tor_j(S/I, S/J)");
  tor->add_option("--ideal", o.ideal, "J, generators separated by ';'")->required();
  tor->add_option("--j", o.j, "Homological index");
  tor->add_option("--deg-bound", o.deg_bound, "Largest degree listed");
  add("transverse", "Homological transversality of Z and --ideal")->add_option("--ideal", o.ideal)->required();
  add("bezout", "Total intersection multiplicity of Z and --ideal")->add_option("--ideal", o.ideal)->required();
  add("twist-check", "Commutation relations and associativity of the twisted product");
  auto* idl = add("idealizer", "Graded dimensions of the idealizer");
  idl->add_option("--max-degree", o.max_degree, "Largest degree");
  idl->add_option("--oracle-horizon", o.oracle_horizon, "Membership oracle horizon");
  add("orbit", "Forward orbits of the scene points against Z")->add_option("--horizon", o.horizon);
  add("ct-cert", "Critical transversality certificate");
  add("classify", "Classification report");
  auto* hd = add("hd-probe", "Truncated Tor over the ambient coordinate ring");
  hd->add_option("--j", o.j, "Largest homological index (default 6)");
  hd->add_option("--deg-bound", o.deg_bound, "Truncation degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    SceneFile sf = load_scene(o.scene_path);
    const std::string cmd = app.get_subcommands().front()->get_name();
    std::string rendered;
    if (cmd == "classify") {
      rendered = emit(classify(sf), o.format);
    } else {
      Output out = with_scene_field(sf, [&](const auto& R) -> Output {
        if (cmd == "gb") return cmd_gb(R, sf, o);
        if (cmd == "colon") return cmd_colon(R, sf, o);
        if (cmd == "tor") return cmd_tor(R, sf, o);
        if (cmd == "transverse") return cmd_transverse(R, sf, o);
        if (cmd == "bezout") return cmd_bezout(R, sf, o);
        if (cmd == "twist-check") return cmd_twist_check(R, sf, o);
        if (cmd == "idealizer") return cmd_idealizer(R, sf, o);
        if (cmd == "orbit") return cmd_orbit(R, sf, o);
        if (cmd == "ct-cert") return cmd_ct_cert(R, sf, o);
        return cmd_hd_probe(R, sf, o);
      });
      rendered = out.render(o.format);
    }
    std::cout << rendered;
    return 0;
  } catch (const Error& e) {
    std::cerr << "twideal: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "twideal: " << e.what() << "\n";
    return kExitOther;
  }
}
