#pragma once

// Scene configuration files.
//
//   # comment
//   constant a = 0.75
//
//   surface cyl {
//     family = lorentz_cylinder     # or x1 = "...", x2 = "...", x3 = "..." in u, v
//     r = 1
//     u = -10 .. 10
//     v = -10 .. 10
//   }
//
//   curve helix {
//     surface = cyl                 # on a surface: u, v in t
//     u = "a*t"
//     v = "sqrt(1+a^2)*t"
//     t = 0 .. 2
//   }
//
//   curve line {
//     x1 = "t"  x2 = "0"  x3 = "0"  # free curve; optional normal = principal |
//     t = 0 .. 1                    # binormal | field (with n1, n2, n3)
//   }
//
//   pair hp {
//     base = helix
//     lambda = 0.1, 0.2, 0.3
//     grid = 512
//     tolerances { bilinear = 1e-7 }
//   }
//
//   suite { builtin = true  pairs = hp }
//   output { format = json  path = "report.json" }
//
// Statements end at a newline or ';'. A value is a comma-separated list of
// items; an item is a quoted string, a bare word or number, or a range
// `a .. b`. Bare numbers may be constant expressions (`pi/2`, `2*a`).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdcurves/pair.hpp"

namespace bdcurves {

struct ConfigItem {
  std::string text;
  bool quoted = false;
  std::optional<std::string> upper;  ///< set for a range `text .. upper`
};

struct ConfigEntry {
  std::string key;
  std::vector<ConfigItem> items;
  int line = 0;
  int column = 0;
};

struct ConfigSection {
  std::string kind;
  std::string name;
  int line = 0;
  int column = 0;
  std::vector<ConfigEntry> entries;
  std::vector<ConfigSection> sections;
};

struct ConfigDocument {
  ConstantTable constants = builtin_constants();
  std::vector<ConfigSection> sections;
};

/// Parses the section structure. Throws ParseError with line and column.
ConfigDocument parse_config(std::string_view text);

struct CurveSpec {
  std::string name;
  std::shared_ptr<const ParametricCurve> curve;
  /// Null for a free curve without a normal field.
  std::shared_ptr<const StripSource> strip;
  std::string surface;
  bool frenet = true;
};

struct PairSpec {
  std::string name;
  std::string base;
  std::vector<double> lambdas;
  std::optional<int> grid;
  std::optional<IdentityTolerances> tolerances;
};

struct SuiteSpec {
  bool declared = false;
  bool builtin = true;
  std::vector<std::string> pairs;
};

struct OutputSpec {
  std::optional<std::string> format;
  std::optional<std::string> path;
};

/// A resolved configuration. Building it evaluates expressions and resolves
/// names but performs no geometry, so every failure here is a ParseError.
struct Scene {
  std::map<std::string, std::shared_ptr<const SurfacePatch>> surfaces;
  std::vector<CurveSpec> curves;
  std::vector<PairSpec> pairs;
  SuiteSpec suite;
  OutputSpec output;

  const CurveSpec& curve(std::string_view name) const;
  const PairSpec& pair(std::string_view name) const;
};

Scene build_scene(const ConfigDocument& doc);

/// parse_config + build_scene. An empty document is an error.
Scene load_scene(std::string_view text);
Scene load_scene_file(const std::string& path);

}  // namespace bdcurves
