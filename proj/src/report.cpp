#include "betti/report.hpp"

#include "json.hpp"
#include <regex>

#include "betti/bounds.hpp"

namespace betti {

namespace {

std::vector<std::string> axis_values(const std::string& name, const std::string& raw) {
  static const std::regex range(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = raw.find('|', start);
    const std::string part = raw.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    std::smatch m;
    if (std::regex_match(part, m, range)) {
      const long long a = std::stoll(m[1]), b = std::stoll(m[2]);
      if (a > b) throw ShapeError("empty range " + part + " for --" + name);
      if (b - a > 100000) throw HypothesisError("range " + part + " for --" + name + " is too long");
      for (long long v = a; v <= b; ++v) out.push_back(std::to_string(v));
    } else {
      out.push_back(part);
    }
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ShapeError("unknown format '" + name + "' (csv or json)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\r\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = t.command;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
    doc["rows"].push_back(row);
  }
  out << doc.dump(2) << "\n";
}

void write_table(std::ostream& out, const Table& t, Format f) {
  if (f == Format::Csv) write_csv(out, t);
  else write_json(out, t);
}

std::vector<Params> expand_grid(const Params& p, std::size_t max_cells) {
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  std::size_t cells = 1;
  for (const auto& [name, raw] : p) {
    axes.emplace_back(name, axis_values(name, raw));
    cells *= axes.back().second.size();
    if (cells > max_cells) throw HypothesisError("grid has more than " + std::to_string(max_cells) + " cells");
  }
  std::vector<Params> out;
  out.reserve(cells);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::size_t n = 0; n < cells; ++n) {
    Params cell;
    for (std::size_t a = 0; a < axes.size(); ++a) cell[axes[a].first] = axes[a].second[idx[a]];
    out.push_back(std::move(cell));
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++idx[a] < axes[a].second.size()) break;
      idx[a] = 0;
    }
  }
  return out;
}

std::string render_params(const Params& p) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : p) parts.push_back(k + "=" + v);
  return join(parts, ";");
}

Table bound_table(const std::string& id, const Params& p, const EvalOptions& opts) {
  find_bound(id);
  const auto cells = expand_grid(p);
  const auto results = evaluate_cells<BoundResult>(cells, [&](const Params& c) { return evaluate_bound(id, c, opts, true); });
  Table t{"bound", {"id", "params", "value", "kind", "branch", "assumptions", "citation"}, {}};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& r = results[i];
    t.rows.push_back({id, render_params(cells[i]), to_string(r.value), to_string(r.kind), r.branch, join(r.assumptions, "; "), r.citation});
  }
  return t;
}

Table compare_table(const std::vector<std::string>& ids, const Params& p, const EvalOptions& opts) {
  if (ids.size() < 2) throw ShapeError("compare needs at least two bound ids");
  for (const auto& id : ids) find_bound(id);
  const auto cells = expand_grid(p);
  const auto results = evaluate_cells<std::vector<Rational>>(cells, [&](const Params& c) {
    std::vector<Rational> v;
    for (const auto& id : ids) v.push_back(evaluate_bound(id, c, opts, false).value);
    return v;
  });
  Table t{"compare", {"params"}, {}};
  for (std::size_t i = 0; i < ids.size(); ++i) t.columns.push_back(ids[i] + (std::count(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(i), ids[i]) ? "#" + std::to_string(i + 1) : ""));
  t.columns.push_back("winner");
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& v = results[c];
    std::vector<std::string> row{render_params(cells[c])};
    for (const auto& x : v) row.push_back(to_string(x));
    const Rational best = *std::min_element(v.begin(), v.end());
    std::size_t hits = 0, where = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == best) ++hits, where = i;
    row.push_back(hits > 1 ? "tie" : ids[where]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table asymptotic_table(std::int64_t from, std::int64_t to) {
  if (from < 1 || from > to) throw ShapeError("need 1 <= from <= to");
  Table t{"asymptotic", {"l", "total_degree_coeff", "blr_coeff", "smaller"}, {}};
  for (std::int64_t l = from; l <= to; ++l) {
    const auto [ours, blr] = leading_coefficient_comparison(l);
    t.rows.push_back({std::to_string(l), to_string(ours), to_string(blr), ours < blr ? "total-degree" : ours == blr ? "tie" : "blr"});
  }
  return t;
}

}  // namespace betti
