#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twideal/geometry.hpp"

namespace twideal {

/// One scene-file problem, located by 1-based line number.
struct Diagnostic {
  std::string code;
  int line = 0;
  std::string message;
  std::string str() const { return "line " + std::to_string(line) + ": " + code + ": " + message; }
};

struct SceneLine {
  int line = 0;
  std::string text;
};

struct SceneComponent {
  std::vector<SceneLine> generators;
  std::vector<SceneLine> prime;  // empty: the component is declared prime
};

/// Parsed and validated scene. Polynomials are kept as text and built per field on demand.
struct SceneFile {
  std::optional<std::uint32_t> prime;  // empty: rational field
  int dim = 0;
  RatMatrix sigma;
  std::vector<SceneLine> ideal;
  std::vector<SceneComponent> components;
  std::vector<SceneLine> ambient;  // optional quotient of the coordinate ring (hd probe)
  std::vector<RationalPoint> points;
  int horizon = 30;
  int maxdeg = 5;
  int oracle = 4;
  int order_bound = 12;
  bool gorenstein = false;

  int nvars() const { return dim + 1; }
  ProjAutomorphism automorphism() const { return ProjAutomorphism(sigma); }
};

struct SceneParse {
  std::optional<SceneFile> scene;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return scene.has_value(); }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::optional<int> parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < INT32_MIN || v > INT32_MAX) return std::nullopt;
    return static_cast<int>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Validates one generator over Q (and mod p when a prime is set).
inline void check_generator(const PolyRing<RationalField>& R, const SceneLine& g, const std::optional<std::uint32_t>& p,
                            std::vector<Diagnostic>& diags) {
  Poly<Rational> f;
  try {
    f = R.parse(g.text);
  } catch (const Error& e) {
    diags.push_back({"BAD_POLYNOMIAL", g.line, e.what()});
    return;
  }
  if (!f.is_homogeneous()) {
    diags.push_back({"INHOMOGENEOUS_GENERATOR", g.line, "generator is not homogeneous: " + g.text});
    return;
  }
  if (p) {
    for (const auto& t : f.terms)
      if (t.c.den() % *p == 0) {
        diags.push_back({"DENOMINATOR_VANISHES_MOD_P", g.line,
                         "coefficient " + t.c.str() + " is undefined mod " + std::to_string(*p)});
        return;
      }
  }
}

}  // namespace detail

/// Parses the line-oriented scene grammar. All problems are collected as diagnostics.
inline SceneParse parse_scene(const std::string& text) {
  SceneParse out;
  auto& diags = out.diagnostics;
  SceneFile s;
  bool have_dim = false, have_sigma = false, have_ideal = false;
  std::vector<SceneLine> lines;
  {
    std::istringstream in(text);
    int no = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      std::string t = detail::trim(raw);
      if (!t.empty()) lines.push_back({no, t});
    }
  }
  int sigma_line = 0;
  std::vector<std::pair<int, std::vector<std::string>>> sigma_rows;

  // Reads generator lines up to `end`; returns false if the block is unterminated.
  std::size_t i = 0;
  auto read_block = [&](int opened_at, std::vector<SceneLine>& gens, std::vector<SceneLine>* prime) {
    while (i < lines.size()) {
      const auto& l = lines[i++];
      if (l.text == "end") return true;
      if (prime && l.text.rfind("prime", 0) == 0 && (l.text.size() == 5 || l.text[5] == ' ')) {
        std::string rest = detail::trim(l.text.substr(5));
        std::size_t start = 0;
        for (;;) {
          std::size_t comma = rest.find(',', start);
          std::string g = detail::trim(rest.substr(start, comma - start));
          if (!g.empty()) prime->push_back({l.line, g});
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        continue;
      }
      gens.push_back(l);
    }
    diags.push_back({"UNTERMINATED_BLOCK", opened_at, "block is missing its 'end' line"});
    return false;
  };

  auto int_arg = [&](const SceneLine& l, const std::vector<std::string>& w, int lo, int& target) {
    std::optional<int> v = w.size() == 2 ? detail::parse_int(w[1]) : std::nullopt;
    if (!v) {
      diags.push_back({"SYNTAX", l.line, "expected '" + w[0] + " <integer>'"});
      return;
    }
    if (*v < lo) {
      diags.push_back({"SYNTAX", l.line, w[0] + " must be at least " + std::to_string(lo)});
      return;
    }
    target = *v;
  };

  while (i < lines.size()) {
    const SceneLine l = lines[i++];
    auto w = detail::words(l.text);
    const std::string& kw = w[0];
    if (kw == "field") {
      if (w.size() == 2 && w[1] == "rational") {
        s.prime.reset();
      } else if (w.size() == 3 && w[1] == "prime") {
        auto p = detail::parse_int(w[2]);
        if (!p || *p < 2 || !is_prime(static_cast<std::uint64_t>(*p)))
          diags.push_back({"BAD_FIELD", l.line, "modulus must be a prime: " + w[2]});
        else
          s.prime = static_cast<std::uint32_t>(*p);
      } else {
        diags.push_back({"BAD_FIELD", l.line, "expected 'field rational' or 'field prime <p>'"});
      }
    } else if (kw == "dim") {
      int d = -1;
      auto v = w.size() == 2 ? detail::parse_int(w[1]) : std::nullopt;
      if (!v) {
        diags.push_back({"SYNTAX", l.line, "expected 'dim <d>'"});
        continue;
      }
      d = *v;
      if (d < 1 || d > 9) {
        diags.push_back({"DIM_RANGE", l.line, "dimension must be between 1 and 9"});
        continue;
      }
      s.dim = d;
      have_dim = true;
    } else if (kw == "sigma") {
      if (w.size() != 1) diags.push_back({"SYNTAX", l.line, "'sigma' takes no arguments"});
      if (!have_dim) {
        diags.push_back({"MISSING_SECTION", l.line, "'dim' must precede 'sigma'"});
        continue;
      }
      sigma_line = l.line;
      have_sigma = true;
      for (int r = 0; r <= s.dim; ++r) {
        if (i >= lines.size()) {
          diags.push_back({"NONSQUARE_SIGMA", l.line, "sigma needs " + std::to_string(s.dim + 1) + " rows"});
          break;
        }
        sigma_rows.push_back({lines[i].line, detail::words(lines[i].text)});
        ++i;
      }
    } else if (kw == "ideal") {
      if (w.size() != 1) diags.push_back({"SYNTAX", l.line, "'ideal' takes no arguments"});
      have_ideal = true;
      s.ideal.clear();
      read_block(l.line, s.ideal, nullptr);
    } else if (kw == "component") {
      SceneComponent c;
      if (read_block(l.line, c.generators, &c.prime)) s.components.push_back(std::move(c));
    } else if (kw == "ambient") {
      read_block(l.line, s.ambient, nullptr);
    } else if (kw == "point") {
      try {
        s.points.push_back(RationalPoint::parse(detail::trim(l.text.substr(5))));
      } catch (const Error& e) {
        diags.push_back({"BAD_POINT", l.line, e.what()});
      }
    } else if (kw == "horizon") {
      int_arg(l, w, 1, s.horizon);
    } else if (kw == "maxdeg") {
      int_arg(l, w, 1, s.maxdeg);
    } else if (kw == "oracle") {
      int_arg(l, w, 1, s.oracle);
    } else if (kw == "order") {
      int_arg(l, w, 1, s.order_bound);
    } else if (kw == "gorenstein") {
      if (w.size() == 2 && (w[1] == "yes" || w[1] == "no"))
        s.gorenstein = w[1] == "yes";
      else
        diags.push_back({"SYNTAX", l.line, "expected 'gorenstein yes|no'"});
    } else {
      diags.push_back({"UNKNOWN_KEYWORD", l.line, "unknown keyword '" + kw + "'"});
    }
  }
  if (!have_dim) diags.push_back({"MISSING_SECTION", 0, "scene has no 'dim' line"});
  if (!have_sigma) diags.push_back({"MISSING_SECTION", 0, "scene has no 'sigma' block"});
  if (!have_ideal) diags.push_back({"MISSING_SECTION", 0, "scene has no 'ideal' block"});

  if (have_sigma) {
    bool square = static_cast<int>(sigma_rows.size()) == s.dim + 1;
    bool rationals_ok = true;
    for (const auto& [line, row] : sigma_rows) {
      if (static_cast<int>(row.size()) != s.dim + 1) {
        square = false;
        diags.push_back({"NONSQUARE_SIGMA", line,
                         "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(s.dim + 1)});
        continue;
      }
      std::vector<Rational> r;
      for (const auto& e : row) {
        try {
          r.push_back(Rational::parse(e));
        } catch (const Error&) {
          rationals_ok = false;
          diags.push_back({"BAD_RATIONAL", line, "not a rational number: " + e});
        }
      }
      if (static_cast<int>(r.size()) == s.dim + 1) s.sigma.push_back(r);
    }
    if (square && rationals_ok) {
      try {
        invert(s.sigma);
      } catch (const Error&) {
        diags.push_back({"SINGULAR_SIGMA", sigma_line, "sigma has zero determinant"});
      }
      if (s.prime && diags.empty()) {
        PrimeField Fp(*s.prime);
        Matrix<PrimeField> m(Fp, 0, s.sigma.size());
        try {
          for (const auto& row : s.sigma) {
            std::vector<ModP> r;
            for (const auto& e : row) r.push_back(Fp.from_rational(e));
            m.append_row(r);
          }
          if (m.rank() < s.sigma.size())
            diags.push_back({"SINGULAR_SIGMA", sigma_line, "sigma is singular mod " + std::to_string(*s.prime)});
        } catch (const Error& e) {
          diags.push_back({"DENOMINATOR_VANISHES_MOD_P", sigma_line, e.what()});
        }
      }
    }
  }

  if (have_dim) {
    PolyRing<RationalField> R(s.nvars());
    for (const auto& g : s.ideal) detail::check_generator(R, g, s.prime, diags);
    for (const auto& c : s.components) {
      for (const auto& g : c.generators) detail::check_generator(R, g, s.prime, diags);
      for (const auto& g : c.prime) detail::check_generator(R, g, s.prime, diags);
    }
    for (const auto& g : s.ambient) detail::check_generator(R, g, s.prime, diags);
    for (const auto& p : s.points)
      if (p.dim() != s.dim) diags.push_back({"BAD_POINT", 0, "point " + p.str() + " has the wrong number of coordinates"});
  }

  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  if (diags.empty()) out.scene = std::move(s);
  return out;
}

/// Ideal generated by scene lines over the field F.
template <class F>
HomIdeal<F> scene_ideal(const PolyRing<F>& R, const std::vector<SceneLine>& lines) {
  std::vector<Poly<typename F::Elem>> g;
  PolyRing<RationalField> Q(R.nvars());
  for (const auto& l : lines) g.push_back(R.from_rational(Q.parse(l.text)));
  return HomIdeal<F>(R, std::move(g));
}

/// Runs fn(ring) with the scene's field.
template <class Fn>
decltype(auto) with_scene_field(const SceneFile& s, Fn&& fn) {
  if (s.prime) return fn(PolyRing<PrimeField>(s.nvars(), PrimeField(*s.prime)));
  return fn(PolyRing<RationalField>(s.nvars()));
}

}  // namespace twideal
