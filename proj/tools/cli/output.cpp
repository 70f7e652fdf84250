#include "output.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace cli {
namespace {

bool is_range(const Json& v) {
  return v.is_object() && v.size() == 2 && v.contains("lo") && v.contains("hi");
}

std::string text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (is_range(v)) {
    const std::string lo = v["lo"].dump();
    return v["hi"].is_null() ? "[" + lo + ",inf)" : "[" + lo + "," + v["hi"].dump() + "]";
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

struct Field {
  std::string name, value, source;
};

std::string source_for(const Json& sources, const std::string& key, const std::string& top) {
  if (!sources.is_object()) return "";
  if (auto it = sources.find(key); it != sources.end()) return it->get<std::string>();
  if (auto it = sources.find(top); it != sources.end()) return it->get<std::string>();
  return "";
}

void flatten(const Json& v, const std::string& prefix, const std::string& top, const Json& sources,
             std::vector<Field>& out) {
  if (v.is_object() && !is_range(v) && !v.empty()) {
    for (const auto& [k, child] : v.items()) flatten(child, prefix + "." + k, top, sources, out);
    return;
  }
  out.push_back({prefix, text(v), source_for(sources, prefix, top)});
}

std::vector<Field> fields_of(const Json& body) {
  std::vector<Field> out;
  const Json sources = body.value("source", Json::object());
  for (const auto& [k, v] : body.items()) {
    if (k == "source" || k == "rows") continue;
    flatten(v, k, k, sources, out);
  }
  return out;
}

using Grid = std::vector<std::vector<std::string>>;

Grid grid_of(const Json& rows) {
  Grid g;
  if (!rows.is_array() || rows.empty()) return g;
  std::vector<std::string> header;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
  g.push_back(header);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : header) line.push_back(row.contains(k) ? text(row[k]) : "-");
    g.push_back(std::move(line));
  }
  return g;
}

void print_aligned(std::ostream& os, const Grid& g) {
  if (g.empty()) return;
  std::vector<std::size_t> width(g.front().size(), 0);
  for (const auto& row : g)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : g) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void print_csv(std::ostream& os, const Grid& g) {
  for (const auto& row : g) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
    os << '\n';
  }
}

void emit_table(std::ostream& os, const Json& body) {
  Grid g;
  for (const auto& f : fields_of(body)) g.push_back({f.name, f.value, f.source});
  print_aligned(os, g);
  if (body.contains("rows")) {
    if (!g.empty()) os << '\n';
    print_aligned(os, grid_of(body["rows"]));
  }
}

void emit_csv(std::ostream& os, const Json& body) {
  if (body.contains("rows")) {
    print_csv(os, grid_of(body["rows"]));
    return;
  }
  Grid g{{"field", "value", "source"}};
  for (const auto& f : fields_of(body)) g.push_back({f.name, f.value, f.source});
  print_csv(os, g);
}

}  // namespace

void emit(std::ostream& os, const Json& body, Format fmt) {
  switch (fmt) {
    case Format::Json: os << body.dump() << '\n'; break;
    case Format::Csv: emit_csv(os, body); break;
    case Format::Table: emit_table(os, body); break;
  }
}

void emit_many(std::ostream& os, const Json& docs, Format fmt) {
  if (fmt == Format::Json) {
    os << docs.dump() << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    // One grid, each row tagged with the document it came from.
    Json rows = Json::array();
    for (const auto& d : docs) {
      Json tag;
      for (const char* k : {"line", "sheaf", "error"})
        if (d.contains(k)) tag[k] = d[k];
      if (!d.contains("rows")) rows.push_back(tag);
      for (const auto& r : d.value("rows", Json::array())) {
        Json row = tag;
        for (const auto& [k, v] : r.items()) row[k] = v;
        rows.push_back(row);
      }
    }
    print_csv(os, grid_of(rows));
    return;
  }
  bool first = true;
  for (const auto& d : docs) {
    if (!first) os << '\n';
    first = false;
    emit(os, d, fmt);
  }
}

}  // namespace cli
