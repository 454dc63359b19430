// Command-line front end: frame tables, pair reports and verification suites.
//
// Exit codes: 0 pass, 2 configuration or usage error, 3 geometry error,
// 4 residual failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>

#include "bdcurves/errors.hpp"
#include "bdcurves/report.hpp"

using namespace bdcurves;

namespace {

constexpr int kPass = 0;
constexpr int kConfigError = 2;
constexpr int kGeometryError = 3;
constexpr int kResidualFailure = 4;

struct Globals {
  std::optional<int> grid;
  std::optional<double> tol;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

struct Sink {
  std::string format;  ///< "csv", "json" or "text"
  std::optional<std::string> path;
};

Sink choose_sink(const Globals& g, const Scene* scene) {
  Sink s;
  s.path = g.out;
  if (!s.path && scene) s.path = scene->output.path;
  if (g.format) {
    s.format = *g.format;
  } else if (scene && scene->output.format) {
    s.format = *scene->output.format;
  } else if (s.path) {
    s.format = s.path->ends_with(".csv") ? "csv" : "json";
  } else {
    s.format = "text";
  }
  return s;
}

void emit(const Sink& sink, const std::string& text) {
  if (sink.path) {
    std::ofstream out(*sink.path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + *sink.path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string text_table(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%*s", i ? 14 : 10, t.columns[i].c_str());
    out += buf;
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      char buf[64];
      if (const double* d = std::get_if<double>(&row[i])) {
        std::snprintf(buf, sizeof buf, "%*.*g", i ? 14 : 10, i ? 8 : 6, *d);
      } else {
        std::snprintf(buf, sizeof buf, "%*s", i ? 14 : 10, "-");
      }
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string ledger_text(const std::vector<Residual>& ledger) {
  std::string out;
  for (const Residual& r : ledger) {
    const char* mark = !r.gating ? "  info" : (r.pass ? "  PASS" : "  FAIL");
    out += std::string(mark) + "  " + identity_key(r) + "  max " + fmt(r.max_abs) + "  rel " +
           fmt(r.rel) + "  tol " + fmt(r.tol) + (r.gating ? "" : (r.pass ? "  (fits)" : "  (off)")) +
           "\n";
  }
  return out;
}

SuiteOptions suite_options(const Globals& g) {
  SuiteOptions o;
  if (g.grid) o.grid = *g.grid;
  o.uniform_tol = g.tol;
  return o;
}

int cmd_frame(const Globals& g, const std::string& config, const std::string& curve) {
  const Scene scene = load_scene_file(config);
  const CurveSpec& spec = scene.curve(curve);
  const Sink sink = choose_sink(g, &scene);
  const FrameReport r = frame_report(spec, g.grid.value_or(33));
  if (sink.format == "json") {
    emit(sink, dump(to_json(r)));
  } else if (sink.format == "csv") {
    emit(sink, to_csv(r.table));
  } else {
    std::string head = "curve " + r.curve + ": " + r.character + ", length " + fmt(r.length) + "\n";
    if (!r.surface_kind.empty()) {
      head += "surface " + r.surface_kind + ", line class: " + r.line_class + "\n";
    }
    emit(sink, head + text_table(r.table));
  }
  return kPass;
}

int cmd_pair(const Globals& g, const std::string& config, const std::string& name) {
  const Scene scene = load_scene_file(config);
  const PairSpec& spec = scene.pair(name);
  const Sink sink = choose_sink(g, &scene);
  const std::vector<SuiteJob> jobs = pair_jobs(scene, spec, suite_options(g));
  auto base = std::make_shared<const StripCurve>(scene.curve(spec.base).strip);

  std::vector<std::future<PairRun>> futures;
  for (const SuiteJob& job : jobs) {
    futures.push_back(std::async(std::launch::async, [&base, &job] {
      PairRun run;
      run.entry.witness = job.name;
      run.entry.description = job.description;
      run.entry.lambda = job.lambda;
      run.entry.grid = job.grid;
      try {
        PairOptions po;
        po.grid = job.grid;
        const PairRecord p = build_pair(base, job.lambda, po);
        run.entry.type = p.type;
        run.entry.ledger = residual_ledger(p, job.tolerances);
        run.entry.tau_rate = tau_rate_winner(run.entry.ledger);
        run.series = pair_series(p);
      } catch (const GeometryError& e) {
        run.entry.error = e.what();
      }
      return run;
    }));
  }
  std::vector<PairRun> runs;
  for (auto& f : futures) runs.push_back(f.get());

  if (sink.format == "json") {
    emit(sink, dump(pair_report_json(spec.name, runs)));
  } else if (sink.format == "csv") {
    emit(sink, to_csv(pair_report_table(runs)));
  } else {
    std::string out;
    for (const PairRun& run : runs) {
      out += "pair " + spec.name + ", lambda " + format_double(run.entry.lambda);
      if (run.entry.error) {
        out += ": " + *run.entry.error + "\n";
        continue;
      }
      out += ": type " + std::to_string(run.entry.type) + ", tau_g1 rate prefix " +
             run.entry.tau_rate + "\n" + ledger_text(run.entry.ledger);
    }
    emit(sink, out);
  }

  bool failed = false;
  for (const PairRun& run : runs) {
    if (run.entry.error) {
      std::cerr << "error: " << *run.entry.error << " (lambda " << format_double(run.entry.lambda)
                << "; location given as base arc length s1)\n";
      return kGeometryError;
    }
    failed = failed || !verdict({run.entry}).pass();
  }
  return failed ? kResidualFailure : kPass;
}

int cmd_verify(const Globals& g, const std::optional<std::string>& config) {
  std::optional<Scene> scene;
  if (config) scene = load_scene_file(*config);
  const Sink sink = choose_sink(g, scene ? &*scene : nullptr);
  const SuiteOptions options = suite_options(g);
  const std::vector<SuiteEntry> entries = run_jobs(verify_jobs(scene ? &*scene : nullptr, options));
  const SuiteVerdict v = verdict(entries);

  if (sink.format == "json") {
    emit(sink, dump(verify_report_json(entries, options)));
  } else if (sink.format == "csv") {
    emit(sink, to_csv(verify_report_table(entries)));
  } else {
    std::string out;
    for (const SuiteEntry& e : entries) {
      out += e.witness + " (lambda " + format_double(e.lambda) + ")";
      if (e.error) {
        out += ": " + *e.error + "\n";
        continue;
      }
      out += ": type " + std::to_string(e.type) + "\n" + ledger_text(e.ledger);
    }
    out += "tau_g1 rate prefix by type:";
    for (const auto& [type, name] : tau_rate_conventions(entries)) {
      out += " " + std::to_string(type) + "=" + name;
    }
    out += "\n" + std::to_string(v.identities - v.failures) + "/" + std::to_string(v.identities) +
           " gating identities pass, " + std::to_string(v.errors) + " construction errors\n";
    emit(sink, out);
  }
  if (v.errors > 0) return kGeometryError;
  return v.pass() ? kPass : kResidualFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux frames and Bertrand D-pairs in Minkowski 3-space"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--grid", g.grid, "samples per curve (at least 32)")->check(CLI::Range(32, 1 << 20));
  app.add_option("--tol", g.tol, "replace every identity tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "csv or json (default: text, or json with --out)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "write the report here instead of stdout");

  std::string config;
  std::string name;
  std::optional<std::string> verify_config;

  auto* frame = app.add_subcommand("frame", "tabulate the Frenet and Darboux frames of a curve");
  frame->add_option("config", config)->required();
  frame->add_option("curve", name)->required();
  frame->fallthrough();

  auto* pair = app.add_subcommand("pair", "construct a pair and report its residual ledger");
  pair->add_option("config", config)->required();
  pair->add_option("pair", name)->required();
  pair->fallthrough();

  auto* verify = app.add_subcommand("verify", "run the built-in witnesses and configured pairs");
  verify->add_option("config", verify_config, "scene configuration (optional)");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*frame) return cmd_frame(g, config, name);
    if (*pair) return cmd_pair(g, config, name);
    return cmd_verify(g, verify_config);
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return kGeometryError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
