#include "render.hpp"

#include <algorithm>

#include "dlchar/cli.hpp"

namespace dlchar::cli::render {

void pretty_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
    out << '\n';
  }
}

json char_table_json(const dl::GroupData& g) {
  json classes = json::array(), chars = json::array();
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    classes.push_back({{"label", g.classes.labels[c]},
                       {"size", g.classes.sizes[c]},
                       {"unipotent", static_cast<bool>(g.classes.unipotent[c])}});
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    json vals = json::array();
    for (const auto& v : g.table.rows[i]) vals.push_back(v.to_json());
    chars.push_back({{"label", g.table.labels[i]}, {"values", vals}});
  }
  return {{"schema", kSchema}, {"group", g.name},  {"q", g.q},
          {"order", g.classes.group_order},       {"classes", classes}, {"characters", chars}};
}

std::vector<std::vector<std::string>> char_table_rows(const dl::GroupData& g) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"character"};
  for (const auto& l : g.classes.labels) head.push_back(l);
  rows.push_back(head);
  for (std::size_t i = 0; i < g.table.size(); ++i) {
    std::vector<std::string> r{g.table.labels[i]};
    for (const auto& v : g.table.rows[i]) r.push_back(v.to_string());
    rows.push_back(r);
  }
  return rows;
}

json report_json(const dl::Report& r) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    failed += !c.ok;
  }
  return {{"ok", r.ok()}, {"failed", failed}, {"checks", checks}};
}

void report_pretty(std::ostream& out, const dl::Report& r) {
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    out << (c.ok ? "ok    " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
    failed += !c.ok;
  }
  out << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
}

}  // namespace dlchar::cli::render
