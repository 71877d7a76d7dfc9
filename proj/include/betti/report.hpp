#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "betti/registry.hpp"

namespace betti {

/// A rectangular table of strings; every output format renders one.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& name);  // "csv" | "json"

/// RFC-4180 quoting of one field.
std::string csv_field(const std::string& s);
void write_csv(std::ostream& out, const Table& t);
/// {"schema": 1, "command": ..., "rows": [{column: value, ...}]}; all values are strings.
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, Format f);

/// Expands "a..b" ranges and "x|y|z" alternatives into the cartesian
/// product, ordered lexicographically by parameter name with the last name
/// varying fastest. Throws HypothesisError above max_cells.
std::vector<Params> expand_grid(const Params& p, std::size_t max_cells = 100000);

/// "d=2;k=3".
std::string render_params(const Params& p);

/// Evaluates cells concurrently; results come back in cell order. The first
/// failing cell (in cell order) rethrows its exception.
template <class R, class F>
std::vector<R> evaluate_cells(const std::vector<Params>& cells, F fn);

Table bound_table(const std::string& id, const Params& p, const EvalOptions& opts);

/// One column per id plus a winner column (smallest value; "tie" when the
/// minimum is shared).
Table compare_table(const std::vector<std::string>& ids, const Params& p, const EvalOptions& opts);

Table asymptotic_table(std::int64_t from, std::int64_t to);

}  // namespace betti

#include "betti/report_impl.hpp"
