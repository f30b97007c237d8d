#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "moonrel/moongraph.hpp"
#include "moonrel/parse.hpp"

namespace moonrel {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Rational> parse_coeffs(const json& arr, std::size_t line) {
  if (!arr.is_array()) parse_fail(line, "'coeffs' must be an array");
  std::vector<Rational> c;
  for (const auto& v : arr) {
    if (v.is_string()) {
      try {
        c.push_back(parse_rational(v.get<std::string>()));
      } catch (const Error& e) {
        parse_fail(line, e.what());
      }
    } else if (v.is_number_integer()) {
      c.emplace_back(Integer(v.dump()));
    } else {
      parse_fail(line, "coefficients must be rational strings");
    }
  }
  return c;
}

json coeffs_json(const QSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(c.get_str());
  return arr;
}

template <typename F>
void for_each_record(std::istream& in, F&& handle) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::parse_error& e) {
      parse_fail(line, std::string("offset ") + std::to_string(e.byte) + ": malformed JSON");
    }
    if (!rec.is_object()) parse_fail(line, "record must be a JSON object");
    handle(rec, line);
  }
}

std::string require_string(const json& rec, const char* key, std::size_t line) {
  if (!rec.contains(key) || !rec[key].is_string()) parse_fail(line, std::string("missing string field '") + key + "'");
  return rec[key].get<std::string>();
}

}  // namespace

std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  for_each_record(in, [&](const json& rec, std::size_t line) {
    std::string name = require_string(rec, "name", line);
    Rational area;
    try {
      area = parse_rational(require_string(rec, "area", line));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::parse_error) throw;
      parse_fail(line, e.what());
    }
    if (area <= 0) throw Error(ErrorKind::nonpositive_area, "line " + std::to_string(line) + ": " + name);
    if (!rec.contains("coeffs")) parse_fail(line, "missing field 'coeffs'");
    if (rec.contains("principal")) {
      Rational lead = parse_rational(rec["principal"].get<std::string>());
      if (lead != 1)
        throw Error(ErrorKind::non_monic_principal_part,
                    "line " + std::to_string(line) + ": " + name + " has leading term " + lead.get_str() + "/q");
    }
    std::vector<Rational> c = parse_coeffs(rec["coeffs"], line);
    if (c.empty()) parse_fail(line, name + " has no coefficients");
    for (const auto& e : out)
      if (e.name == name) throw Error(ErrorKind::duplicate_name, "line " + std::to_string(line) + ": " + name);
    out.push_back({name, area, QSeries(std::move(c))});
  });
  return out;
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& catalog) {
  for (const auto& e : catalog) {
    json rec = {{"name", e.name}, {"area", e.area.get_str()}, {"coeffs", coeffs_json(e.series)}};
    out << rec.dump() << '\n';
  }
}

void GraphReport::write(std::ostream& out) const {
  for (const auto& r : records) {
    json rec = {{"kind", r.kind}, {"from", r.from}, {"to", r.to}, {"detail", r.detail}};
    out << rec.dump() << '\n';
  }
}

std::string export_graph(const RelationGraph& g, ExportFormat format) {
  std::ostringstream out;
  if (format == ExportFormat::dot) {
    out << "digraph relations {\n";
    for (const auto& n : g.nodes()) {
      out << "  \"" << n.name << "\"";
      if (n.origin == NodeOrigin::synthetic) out << " [style=dashed]";
      out << ";\n";
    }
    for (const auto& e : g.edges())
      out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"d=" << e.d << ",r=" << e.r << "\"];\n";
    out << "}\n";
    return out.str();
  }
  for (const auto& n : g.nodes()) {
    json rec = {{"type", "node"},
                {"name", n.name},
                {"origin", n.origin == NodeOrigin::catalog ? "catalog" : "synthetic"},
                {"coeffs", coeffs_json(n.series)}};
    if (n.area) rec["area"] = n.area->get_str();
    out << rec.dump() << '\n';
  }
  for (const auto& e : g.edges()) {
    json rec = {{"type", "edge"}, {"from", e.from}, {"to", e.to},     {"d", e.d},
                {"r", e.r},       {"f", e.f.to_string()}, {"verified_to", e.verified_to}};
    out << rec.dump() << '\n';
  }
  return out.str();
}

RelationGraph load_graph_jsonlines(std::istream& in) {
  RelationGraph g;
  for_each_record(in, [&](const json& rec, std::size_t line) {
    std::string type = require_string(rec, "type", line);
    if (type == "node") {
      GraphNode n{require_string(rec, "name", line), QSeries({}), NodeOrigin::catalog, std::nullopt};
      std::string origin = require_string(rec, "origin", line);
      if (origin != "catalog" && origin != "synthetic") parse_fail(line, "unknown origin '" + origin + "'");
      n.origin = origin == "catalog" ? NodeOrigin::catalog : NodeOrigin::synthetic;
      if (!rec.contains("coeffs")) parse_fail(line, "missing field 'coeffs'");
      n.series = QSeries(parse_coeffs(rec["coeffs"], line));
      if (rec.contains("area")) n.area = parse_rational(require_string(rec, "area", line));
      g.add_node(std::move(n));
    } else if (type == "edge") {
      GraphEdge e;
      e.from = require_string(rec, "from", line);
      e.to = require_string(rec, "to", line);
      g.node(e.from);
      g.node(e.to);
      if (!rec.contains("d") || !rec.contains("r")) parse_fail(line, "edge needs 'd' and 'r'");
      e.d = rec["d"].get<unsigned>();
      e.r = rec["r"].get<unsigned>();
      e.f = parse_ratfun(require_string(rec, "f", line));
      e.verified_to = rec.value("verified_to", 0L);
      if (e.f.degree() != e.d) parse_fail(line, "edge degree does not match its function");
      if (!g.add_edge(std::move(e))) parse_fail(line, "duplicate (from, to, r) edge");
    } else {
      parse_fail(line, "unknown record type '" + type + "'");
    }
  });
  return g;
}

}  // namespace moonrel
