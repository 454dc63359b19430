#include "bdcurves/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "bdcurves/errors.hpp"

namespace bdcurves {

namespace {

enum class Tok { Word, String, LBrace, RBrace, Equals, Comma, Range, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_bare(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != '=' &&
         c != ',' && c != ';' && c != '#' && c != '"';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    const int l0 = line;
    const int c0 = col;
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (c == '\n' || c == ';') {
      out.push_back({Tok::Newline, std::string(1, c), l0, c0});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '{' || c == '}' || c == '=' || c == ',') {
      const Tok k = c == '{' ? Tok::LBrace : c == '}' ? Tok::RBrace : c == '=' ? Tok::Equals : Tok::Comma;
      out.push_back({k, std::string(1, c), l0, c0});
      advance(1);
    } else if (c == '"') {
      std::string text;
      advance(1);
      while (true) {
        if (i >= s.size() || s[i] == '\n') throw ParseError("unterminated string", l0, c0);
        if (s[i] == '"') break;
        if (s[i] == '\\' && i + 1 < s.size() && (s[i + 1] == '"' || s[i + 1] == '\\')) advance(1);
        text.push_back(s[i]);
        advance(1);
      }
      advance(1);
      out.push_back({Tok::String, std::move(text), l0, c0});
    } else if (s.substr(i, 2) == "..") {
      out.push_back({Tok::Range, "..", l0, c0});
      advance(2);
    } else {
      std::size_t j = i;
      while (j < s.size() && is_bare(s[j]) && s.substr(j, 2) != "..") ++j;
      out.push_back({Tok::Word, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_identifier(const std::string& w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  for (char c : w) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ConfigDocument document() {
    ConfigDocument doc;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      const Token head = expect_identifier("section kind or 'constant'");
      if (head.text == "constant") {
        const Token name = expect_identifier("constant name");
        expect(Tok::Equals, "'='");
        const ConfigEntry e = value_of(name);
        if (e.items.size() != 1 || e.items[0].quoted || e.items[0].upper) {
          throw ParseError("constant '" + name.text + "' needs a single number", name.line,
                           name.column);
        }
        try {
          doc.constants[name.text] = evaluate_constant(e.items[0].text, doc.constants);
        } catch (const ParseError& err) {
          throw ParseError(err.what(), name.line, name.column);
        }
        end_of_statement();
      } else {
        doc.sections.push_back(section(head));
      }
    }
    return doc;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    const std::string found = at.kind == Tok::End       ? "end of input"
                              : at.kind == Tok::Newline ? "end of line"
                                                        : "'" + at.text + "'";
    throw ParseError("expected " + what + ", found " + found, at.line, at.column);
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what, peek());
    return next();
  }

  Token expect_identifier(const std::string& what) {
    if (peek().kind != Tok::Word || !is_identifier(peek().text)) fail(what, peek());
    return next();
  }

  void end_of_statement() {
    const Tok k = peek().kind;
    if (k == Tok::Newline || k == Tok::End || k == Tok::RBrace) return;
    if (k == Tok::Word && peek(1).kind == Tok::Equals) return;
    fail("end of statement", peek());
  }

  ConfigSection section(const Token& kind) {
    ConfigSection sec{kind.text, "", kind.line, kind.column, {}, {}};
    if (peek().kind == Tok::Word) sec.name = expect_identifier("section name").text;
    skip_newlines();
    expect(Tok::LBrace, "'{'");
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) {
        next();
        break;
      }
      const Token key = expect_identifier("key or '}'");
      if (peek().kind == Tok::Equals) {
        next();
        sec.entries.push_back(value_of(key));
        end_of_statement();
      } else if (peek().kind == Tok::LBrace ||
                 (peek().kind == Tok::Word && peek(1).kind == Tok::LBrace)) {
        sec.sections.push_back(section(key));
      } else {
        fail("'=' or '{'", peek());
      }
    }
    return sec;
  }

  std::string atom() {
    if (peek().kind == Tok::String) return next().text;
    if (peek().kind != Tok::Word) fail("a value", peek());
    std::string text = next().text;
    // Bare words run together ("1 / 3") until the next key on the same line.
    while (peek().kind == Tok::Word && peek(1).kind != Tok::Equals && peek(1).kind != Tok::LBrace) {
      text += " " + next().text;
    }
    return text;
  }

  ConfigEntry value_of(const Token& key) {
    ConfigEntry e{key.text, {}, key.line, key.column};
    while (true) {
      ConfigItem item;
      item.quoted = peek().kind == Tok::String;
      item.text = atom();
      if (peek().kind == Tok::Range) {
        next();
        item.upper = atom();
      }
      e.items.push_back(std::move(item));
      if (peek().kind != Tok::Comma) break;
      next();
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- scene building ----

[[noreturn]] void fail_at(const ConfigEntry& e, const std::string& what) {
  throw ParseError("'" + e.key + "': " + what, e.line, e.column);
}

[[noreturn]] void fail_at(const ConfigSection& s, const std::string& what) {
  throw ParseError(s.kind + (s.name.empty() ? "" : " '" + s.name + "'") + ": " + what, s.line,
                   s.column);
}

class SectionReader {
 public:
  SectionReader(const ConfigSection& s, const ConstantTable& constants,
                std::set<std::string> allowed)
      : s_(s), constants_(constants) {
    std::set<std::string> seen;
    for (const ConfigEntry& e : s.entries) {
      if (!allowed.contains(e.key)) fail_at(e, "unknown key in " + s.kind);
      if (!seen.insert(e.key).second) fail_at(e, "given twice");
    }
  }

  const ConfigEntry* find(const std::string& key) const {
    for (const ConfigEntry& e : s_.entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  }
  bool has(const std::string& key) const { return find(key) != nullptr; }

  const ConfigEntry& need(const std::string& key) const {
    const ConfigEntry* e = find(key);
    if (!e) fail_at(s_, "missing '" + key + "'");
    return *e;
  }

  const ConfigItem& single(const ConfigEntry& e) const {
    if (e.items.size() != 1) fail_at(e, "expected a single value");
    return e.items[0];
  }

  double number_of(const ConfigEntry& e, const std::string& text) const {
    try {
      return evaluate_constant(text, constants_);
    } catch (const ParseError& err) {
      fail_at(e, err.what());
    }
  }

  double number(const std::string& key) const {
    const ConfigEntry& e = need(key);
    const ConfigItem& it = single(e);
    if (it.upper) fail_at(e, "expected a number, found a range");
    return number_of(e, it.text);
  }

  std::vector<double> numbers(const std::string& key) const {
    const ConfigEntry& e = need(key);
    std::vector<double> out;
    for (const ConfigItem& it : e.items) {
      if (it.upper) fail_at(e, "expected numbers, found a range");
      out.push_back(number_of(e, it.text));
    }
    return out;
  }

  Interval range(const std::string& key, Interval fallback) const {
    const ConfigEntry* e = find(key);
    if (!e) return fallback;
    const ConfigItem& it = single(*e);
    if (!it.upper) fail_at(*e, "expected a range 'a .. b'");
    const Interval r{number_of(*e, it.text), number_of(*e, *it.upper)};
    if (!(r.lo < r.hi)) fail_at(*e, "empty range");
    return r;
  }

  std::string text(const std::string& key) const {
    const ConfigEntry& e = need(key);
    const ConfigItem& it = single(e);
    if (it.upper) fail_at(e, "expected text, found a range");
    return it.text;
  }

  std::vector<std::string> words(const std::string& key) const {
    const ConfigEntry& e = need(key);
    std::vector<std::string> out;
    for (const ConfigItem& it : e.items) {
      if (it.upper) fail_at(e, "expected names, found a range");
      out.push_back(it.text);
    }
    return out;
  }

  bool boolean(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = text(key);
    if (v == "true") return true;
    if (v == "false") return false;
    fail_at(need(key), "expected true or false");
  }

  template <class F>
  auto with_entry(const std::string& key, F f) const {
    const ConfigEntry& e = need(key);
    try {
      return f();
    } catch (const ParseError& err) {
      fail_at(e, err.what());
    }
  }

  const ConfigSection& section() const { return s_; }

 private:
  const ConfigSection& s_;
  const ConstantTable& constants_;
};

void require_name(const ConfigSection& s) {
  if (s.name.empty()) fail_at(s, "needs a name");
}

void no_subsections(const ConfigSection& s) {
  if (!s.sections.empty()) fail_at(s.sections.front(), "unexpected nested section");
}

const std::set<std::string> kFamilies{"plane", "lorentz_cylinder", "hyperbolic_cylinder",
                                      "hyperbolic_plane", "de_sitter"};

std::shared_ptr<const SurfacePatch> build_surface(const ConfigSection& s,
                                                  const ConstantTable& constants) {
  require_name(s);
  no_subsections(s);
  const SectionReader r(s, constants, {"family", "r", "c", "u", "v", "x1", "x2", "x3"});
  const Interval u = r.range("u", {-10, 10});
  const Interval v = r.range("v", {-10, 10});
  if (r.has("family")) {
    const std::string fam = r.text("family");
    if (!kFamilies.contains(fam)) fail_at(r.need("family"), "unknown family '" + fam + "'");
    for (const char* k : {"x1", "x2", "x3"}) {
      if (r.has(k)) fail_at(r.need(k), "not allowed together with 'family'");
    }
    std::map<std::string, double> params;
    for (const char* k : {"r", "c"}) {
      if (r.has(k)) params[k] = r.number(k);
    }
    return std::make_shared<SurfacePatch>(SurfacePatch::family(fam, params, u, v));
  }
  for (const char* k : {"r", "c"}) {
    if (r.has(k)) fail_at(r.need(k), "only meaningful with 'family'");
  }
  const std::array<std::string, 3> c{r.text("x1"), r.text("x2"), r.text("x3")};
  return r.with_entry("x1", [&] {
    return std::make_shared<SurfacePatch>(SurfacePatch::parse(c, u, v, constants));
  });
}

CurveSpec build_curve(const ConfigSection& s, const Scene& scene, const ConstantTable& constants) {
  require_name(s);
  no_subsections(s);
  const SectionReader r(s, constants, {"surface", "u", "v", "t", "flip", "x1", "x2", "x3",
                                       "normal", "n1", "n2", "n3", "frenet"});
  CurveSpec spec;
  spec.name = s.name;
  spec.frenet = r.boolean("frenet", true);
  const Interval t = r.range("t", {0, 1});
  const bool flip = r.boolean("flip", false);

  if (r.has("surface")) {
    spec.surface = r.text("surface");
    auto it = scene.surfaces.find(spec.surface);
    if (it == scene.surfaces.end()) {
      fail_at(r.need("surface"), "no surface named '" + spec.surface + "'");
    }
    for (const char* k : {"x1", "x2", "x3", "normal", "n1", "n2", "n3"}) {
      if (r.has(k)) fail_at(r.need(k), "not allowed for a curve on a surface");
    }
    const std::string u = r.text("u");
    const std::string v = r.text("v");
    auto src = r.with_entry("u", [&] {
      return std::make_shared<SurfaceCurveSource>(
          SurfaceCurveSource::parse(it->second, u, v, t, flip, constants));
    });
    spec.curve = src;
    spec.strip = src;
    return spec;
  }

  for (const char* k : {"u", "v"}) {
    if (r.has(k)) fail_at(r.need(k), "needs 'surface'");
  }
  const std::array<std::string, 3> c{r.text("x1"), r.text("x2"), r.text("x3")};
  const CurveExpr curve =
      r.with_entry("x1", [&] { return CurveExpr::parse(c, t, constants); });
  spec.curve = std::make_shared<CurveExpr>(curve);

  const std::string mode = r.has("normal") ? r.text("normal") : "none";
  const std::vector<std::string> t_only{"t"};
  if (mode == "none") {
    for (const char* k : {"n1", "n2", "n3", "flip"}) {
      if (r.has(k)) fail_at(r.need(k), "needs 'normal'");
    }
  } else if (mode == "principal" || mode == "binormal") {
    spec.strip = std::make_shared<FieldStripSource>(
        curve, mode == "principal" ? NormalMode::PrincipalNormal : NormalMode::Binormal,
        std::array<Expr, 3>{}, flip);
  } else if (mode == "field") {
    std::array<Expr, 3> field;
    const char* keys[3] = {"n1", "n2", "n3"};
    for (int i = 0; i < 3; ++i) {
      const std::string text = r.text(keys[i]);
      field[i] = r.with_entry(keys[i], [&] { return Expr::parse(text, t_only, constants); });
    }
    spec.strip = std::make_shared<FieldStripSource>(curve, NormalMode::Field, field, flip);
  } else {
    fail_at(r.need("normal"), "expected none, principal, binormal or field");
  }
  return spec;
}

void set_tolerance(IdentityTolerances& tol, const std::string& key, double v) {
  static const std::map<std::string, double IdentityTolerances::*> fields{
      {"lambda_constancy", &IdentityTolerances::lambda_constancy},
      {"g_coincidence", &IdentityTolerances::g_coincidence},
      {"angle", &IdentityTolerances::angle},
      {"tau_rate", &IdentityTolerances::tau_rate},
      {"bilinear", &IdentityTolerances::bilinear},
      {"frame", &IdentityTolerances::frame},
      {"closed_form", &IdentityTolerances::closed_form},
      {"special_case", &IdentityTolerances::special_case},
      {"coincidence", &IdentityTolerances::coincidence},
      {"tol_line", &IdentityTolerances::tol_line}};
  tol.*fields.at(key) = v;
}

PairSpec build_pair_spec(const ConfigSection& s, const Scene& scene,
                         const ConstantTable& constants) {
  require_name(s);
  const SectionReader r(s, constants, {"base", "lambda", "grid", "tol"});
  PairSpec spec;
  spec.name = s.name;
  spec.base = r.text("base");
  const CurveSpec* base = nullptr;
  for (const CurveSpec& c : scene.curves) {
    if (c.name == spec.base) base = &c;
  }
  if (!base) fail_at(r.need("base"), "no curve named '" + spec.base + "'");
  if (!base->strip) fail_at(r.need("base"), "curve '" + spec.base + "' has no normal field");

  spec.lambdas = r.numbers("lambda");
  for (double l : spec.lambdas) {
    if (l == 0.0) fail_at(r.need("lambda"), "lambda must be nonzero");
  }
  if (r.has("grid")) {
    const double g = r.number("grid");
    if (g != static_cast<int>(g) || g < 32) fail_at(r.need("grid"), "grid must be an integer >= 32");
    spec.grid = static_cast<int>(g);
  }
  IdentityTolerances tol;
  bool any = false;
  if (r.has("tol")) {
    const double x = r.number("tol");
    if (!(x > 0)) fail_at(r.need("tol"), "tolerance must be positive");
    tol = IdentityTolerances::uniform(x);
    any = true;
  }
  for (const ConfigSection& sub : s.sections) {
    if (sub.kind != "tolerances" || !sub.name.empty()) fail_at(sub, "unexpected nested section");
    no_subsections(sub);
    const SectionReader tr(sub, constants,
                           {"lambda_constancy", "g_coincidence", "angle", "tau_rate", "bilinear",
                            "frame", "closed_form", "special_case", "coincidence", "tol_line"});
    for (const ConfigEntry& e : sub.entries) {
      const double x = tr.number(e.key);
      if (!(x > 0)) fail_at(e, "tolerance must be positive");
      set_tolerance(tol, e.key, x);
      any = true;
    }
  }
  if (any) spec.tolerances = tol;
  return spec;
}

}  // namespace

const CurveSpec& Scene::curve(std::string_view name) const {
  for (const CurveSpec& c : curves) {
    if (c.name == name) return c;
  }
  throw ParseError("no curve named '" + std::string(name) + "'");
}

const PairSpec& Scene::pair(std::string_view name) const {
  for (const PairSpec& p : pairs) {
    if (p.name == name) return p;
  }
  throw ParseError("no pair named '" + std::string(name) + "'");
}

ConfigDocument parse_config(std::string_view text) { return Parser(text).document(); }

Scene build_scene(const ConfigDocument& doc) {
  Scene scene;
  std::set<std::string> names;
  bool output_seen = false;
  for (const ConfigSection& s : doc.sections) {
    if (!s.name.empty() && (s.kind == "surface" || s.kind == "curve" || s.kind == "pair") &&
        !names.insert(s.kind + ":" + s.name).second) {
      fail_at(s, "defined twice");
    }
    if (s.kind == "surface") {
      scene.surfaces[s.name] = build_surface(s, doc.constants);
    } else if (s.kind == "curve") {
      scene.curves.push_back(build_curve(s, scene, doc.constants));
    } else if (s.kind == "pair") {
      scene.pairs.push_back(build_pair_spec(s, scene, doc.constants));
    } else if (s.kind == "suite") {
      if (scene.suite.declared) fail_at(s, "only one suite section is allowed");
      no_subsections(s);
      const SectionReader r(s, doc.constants, {"builtin", "pairs"});
      scene.suite.declared = true;
      scene.suite.builtin = r.boolean("builtin", true);
      if (r.has("pairs")) {
        for (const std::string& p : r.words("pairs")) {
          if (!names.contains("pair:" + p)) fail_at(r.need("pairs"), "no pair named '" + p + "'");
          scene.suite.pairs.push_back(p);
        }
      }
    } else if (s.kind == "output") {
      if (output_seen) fail_at(s, "only one output section is allowed");
      output_seen = true;
      no_subsections(s);
      const SectionReader r(s, doc.constants, {"format", "path"});
      if (r.has("format")) {
        const std::string f = r.text("format");
        if (f != "csv" && f != "json") fail_at(r.need("format"), "expected csv or json");
        scene.output.format = f;
      }
      if (r.has("path")) scene.output.path = r.text("path");
    } else {
      fail_at(s, "unknown section kind");
    }
  }
  return scene;
}

Scene load_scene(std::string_view text) {
  const ConfigDocument doc = parse_config(text);
  if (doc.sections.empty()) throw ParseError("configuration is empty", 1, 1);
  return build_scene(doc);
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_scene(ss.str());
}

}  // namespace bdcurves
