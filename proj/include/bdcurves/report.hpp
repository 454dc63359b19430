#pragma once

// Tables and reports for the command-line front end. JSON objects keep
// insertion order and floats print in shortest round-trip form, so identical
// inputs give byte-identical output.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bdcurves/suite.hpp"

namespace bdcurves {

using Json = nlohmann::ordered_json;

/// Empty cells are written as an empty CSV field and JSON null. Non-finite
/// numbers are written as empty cells too.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header row, then one row per sample, '\n' line endings.
std::string to_csv(const Table& t);
Table table_from_csv(const std::string& text);

/// {"columns": [...], "rows": [[...], ...]}.
Json to_json(const Table& t);
Table table_from_json(const Json& j);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

/// Per-sample frame data of a configured curve: Frenet columns when the
/// curve asks for them, Darboux columns when it carries a normal field.
struct FrameReport {
  std::string curve;
  double length = 0.0;
  std::string character;
  std::string surface_kind;  ///< empty without a normal field
  std::string line_class;    ///< empty without a normal field
  Table table;
};

FrameReport frame_report(const CurveSpec& spec, int grid);
Json to_json(const FrameReport& r);

/// Theta, ds/ds1 and both invariant series of one pair, one row per s1.
Table pair_series(const PairRecord& p);

Json to_json(const Residual& r, int grid);
/// "identity" or "identity [variant]".
std::string identity_key(const Residual& r);

struct PairRun {
  SuiteEntry entry;
  Table series;
};

Json pair_report_json(const std::string& pair, const std::vector<PairRun>& runs);
/// The series of every run stacked, with a leading lambda column.
Table pair_report_table(const std::vector<PairRun>& runs);

Json verify_report_json(const std::vector<SuiteEntry>& entries, const SuiteOptions& options);
/// One row per identity of every entry.
Table verify_report_table(const std::vector<SuiteEntry>& entries);

}  // namespace bdcurves
