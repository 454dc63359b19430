#include "bdcurves/report.hpp"

#include <cmath>
#include <sstream>

#include "bdcurves/errors.hpp"

namespace bdcurves {

namespace {

Cell num(double v) { return std::isfinite(v) ? Cell{v} : Cell{}; }

void add3(std::vector<Cell>& row, const MVec3& v) {
  row.push_back(num(v.x1));
  row.push_back(num(v.x2));
  row.push_back(num(v.x3));
}

void cols3(std::vector<std::string>& cols, const std::string& name) {
  for (const char* i : {"1", "2", "3"}) cols.push_back(name + "_" + i);
}

std::string csv_field(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  if (const std::string* s = std::get_if<std::string>(&c)) {
    std::string out = "\"";
    for (char ch : *s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }
  return "";
}

Json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return *d;
  if (const std::string* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

Json identities_of(const SuiteEntry& e) {
  Json ids = Json::object();
  for (const Residual& r : e.ledger) ids[identity_key(r)] = to_json(r, e.grid);
  return ids;
}

bool entry_pass(const SuiteEntry& e) {
  if (e.error) return false;
  for (const Residual& r : e.ledger) {
    if (r.gating && !r.pass) return false;
  }
  return true;
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += (i ? "," : "") + csv_field(Cell{t.columns[i]});
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += '\n';
  }
  return out;
}

Table table_from_csv(const std::string& text) {
  std::vector<std::vector<Cell>> lines;
  std::vector<Cell> row;
  std::size_t i = 0;
  auto field = [&]() -> Cell {
    if (i < text.size() && text[i] == '"') {
      std::string s;
      ++i;
      while (true) {
        if (i >= text.size()) throw ParseError("unterminated quoted CSV field");
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            s += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        s += text[i++];
      }
      return s;
    }
    const std::size_t j = text.find_first_of(",\n", i);
    const std::string raw = text.substr(i, j == std::string::npos ? std::string::npos : j - i);
    i = j == std::string::npos ? text.size() : j;
    if (raw.empty()) return {};
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw ParseError("malformed CSV number '" + raw + "'");
    return v;
  };
  while (i < text.size()) {
    row.push_back(field());
    if (i < text.size() && text[i] == ',') {
      ++i;
    } else {
      if (i < text.size()) ++i;
      lines.push_back(std::move(row));
      row.clear();
    }
  }
  Table t;
  if (lines.empty()) return t;
  for (const Cell& c : lines.front()) {
    const std::string* s = std::get_if<std::string>(&c);
    if (!s) throw ParseError("CSV header must be quoted names");
    t.columns.push_back(*s);
  }
  t.rows.assign(lines.begin() + 1, lines.end());
  return t;
}

Json to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const Cell& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  return Json{{"columns", t.columns}, {"rows", std::move(rows)}};
}

Table table_from_json(const Json& j) {
  Table t;
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const Json& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const Json& c : r) {
      if (c.is_null()) {
        row.emplace_back();
      } else if (c.is_string()) {
        row.emplace_back(c.get<std::string>());
      } else {
        row.emplace_back(c.get<double>());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

FrameReport frame_report(const CurveSpec& spec, int grid) {
  FrameReport r;
  r.curve = spec.name;
  std::shared_ptr<const StripCurve> sc;
  std::shared_ptr<const UnitSpeedCurve> usc;
  if (spec.strip) {
    sc = std::make_shared<StripCurve>(spec.strip);
    r.surface_kind = to_string(sc->surface_kind());
    r.line_class = to_string(classify_line(*sc));
  } else {
    usc = std::make_shared<UnitSpeedCurve>(spec.curve);
  }
  const UnitSpeedCurve& curve = sc ? sc->curve() : *usc;
  r.length = curve.length();
  r.character = to_string(curve.character().kind);

  Table& t = r.table;
  t.columns = {"s"};
  cols3(t.columns, "x");
  cols3(t.columns, "T");
  if (spec.frenet) {
    cols3(t.columns, "N");
    cols3(t.columns, "B");
    t.columns.insert(t.columns.end(), {"kappa", "tau"});
  }
  if (sc) {
    cols3(t.columns, "g");
    cols3(t.columns, "n");
    t.columns.insert(t.columns.end(), {"k_g", "k_n", "tau_g"});
    if (spec.frenet) t.columns.push_back("phi");
  }

  for (double s : uniform_grid({0.0, r.length}, grid)) {
    std::vector<Cell> row{num(s)};
    if (sc) {
      const DarbouxData d = darboux_frame(*sc, s);
      add3(row, d.position);
      add3(row, d.T);
    } else {
      add3(row, curve.curve().position(curve.t_of(s)));
      add3(row, derivative(curve.position_s(s, 1), 1));
    }
    if (spec.frenet) {
      const FrenetData f = frenet_frame(curve, s);
      add3(row, f.N);
      add3(row, f.B);
      row.push_back(num(f.k1));
      row.push_back(num(f.k2));
    }
    if (sc) {
      const DarbouxData d = darboux_frame(*sc, s);
      add3(row, d.g);
      add3(row, d.n);
      row.push_back(num(d.kg));
      row.push_back(num(d.kn));
      row.push_back(num(d.tg));
      if (spec.frenet) row.push_back(num(frenet_darboux_link(*sc, s).phi));
    }
    t.rows.push_back(std::move(row));
  }
  return r;
}

Json to_json(const FrameReport& r) {
  Json j{{"command", "frame"}, {"curve", r.curve}, {"length", r.length},
         {"character", r.character}};
  if (!r.surface_kind.empty()) {
    j["surface"] = r.surface_kind;
    j["line_class"] = r.line_class;
  }
  j["series"] = to_json(r.table);
  return j;
}

Table pair_series(const PairRecord& p) {
  Table t;
  t.columns = {"s1", "t", "theta", "ds/ds1", "k_g1", "k_n1", "tau_g1", "k_g", "k_n", "tau_g"};
  for (std::size_t i = 0; i < p.s1.size(); ++i) {
    t.rows.push_back({num(p.s1[i]), num(p.t[i]), num(p.theta[i]), num(p.ratio[i]), num(p.kg1[i]),
                      num(p.kn1[i]), num(p.tg1[i]), num(p.kg[i]), num(p.kn[i]), num(p.tg[i])});
  }
  return t;
}

std::string identity_key(const Residual& r) {
  return r.variant.empty() ? r.name : r.name + " [" + r.variant + "]";
}

Json to_json(const Residual& r, int grid) {
  return Json{{"max_residual", r.max_abs}, {"relative", r.rel},   {"rms", r.rms},
              {"scale", r.scale},          {"tol", r.tol},        {"grid", grid},
              {"gating", r.gating},        {"pass", r.pass}};
}

Json pair_report_json(const std::string& pair, const std::vector<PairRun>& runs) {
  Json out{{"command", "pair"}, {"pair", pair}};
  bool pass = true;
  Json arr = Json::array();
  for (const PairRun& run : runs) {
    const SuiteEntry& e = run.entry;
    pass = pass && entry_pass(e);
    Json j{{"lambda", e.lambda}, {"grid", e.grid}};
    if (e.error) {
      j["error"] = *e.error;
    } else {
      j["type"] = e.type;
      j["tau_rate_convention"] = e.tau_rate;
      j["pass"] = entry_pass(e);
      j["identities"] = identities_of(e);
      j["series"] = to_json(run.series);
    }
    arr.push_back(std::move(j));
  }
  out["pass"] = pass;
  out["runs"] = std::move(arr);
  return out;
}

Table pair_report_table(const std::vector<PairRun>& runs) {
  Table t;
  for (const PairRun& run : runs) {
    if (run.entry.error) continue;
    if (t.columns.empty()) {
      t.columns = {"lambda"};
      t.columns.insert(t.columns.end(), run.series.columns.begin(), run.series.columns.end());
    }
    for (const auto& row : run.series.rows) {
      std::vector<Cell> r{num(run.entry.lambda)};
      r.insert(r.end(), row.begin(), row.end());
      t.rows.push_back(std::move(r));
    }
  }
  return t;
}

Json verify_report_json(const std::vector<SuiteEntry>& entries, const SuiteOptions& options) {
  const SuiteVerdict v = verdict(entries);
  Json out{{"command", "verify"}, {"grid", options.grid}};
  out["tolerance_override"] = options.uniform_tol ? Json(*options.uniform_tol) : Json(nullptr);
  out["pass"] = v.pass();
  out["identity_count"] = v.identities;
  out["failures"] = v.failures;
  out["errors"] = v.errors;

  Json conv = Json::object();
  for (const auto& [type, name] : tau_rate_conventions(entries)) {
    conv["type " + std::to_string(type)] = name;
  }
  out["tau_rate_conventions"] = std::move(conv);

  Json ws = Json::array();
  Json ids = Json::object();
  for (const SuiteEntry& e : entries) {
    Json w{{"name", e.witness}, {"description", e.description}, {"lambda", e.lambda},
           {"grid", e.grid}};
    if (e.error) {
      w["error"] = *e.error;
    } else {
      w["type"] = e.type;
      w["tau_rate"] = e.tau_rate;
      w["pass"] = entry_pass(e);
    }
    ws.push_back(std::move(w));
    for (const Residual& r : e.ledger) ids[e.witness + ": " + identity_key(r)] = to_json(r, e.grid);
  }
  out["witnesses"] = std::move(ws);
  out["identities"] = std::move(ids);
  return out;
}

Table verify_report_table(const std::vector<SuiteEntry>& entries) {
  Table t;
  t.columns = {"witness", "type", "lambda", "identity", "variant", "max_residual", "relative",
               "rms",     "tol",  "gating", "pass"};
  for (const SuiteEntry& e : entries) {
    for (const Residual& r : e.ledger) {
      t.rows.push_back({e.witness, num(e.type), num(e.lambda), r.name, r.variant, num(r.max_abs),
                        num(r.rel), num(r.rms), num(r.tol), num(r.gating ? 1 : 0),
                        num(r.pass ? 1 : 0)});
    }
  }
  return t;
}

}  // namespace bdcurves
