#include "twomilton/family_io.hpp"

#include <fstream>
#include <sstream>

#include "twomilton/errors.hpp"

namespace twomilton {

using nlohmann::json;

namespace {

void reject_floats(const json& j, const std::string& where) {
  if (j.is_number_float()) throw InvalidInput("floating-point value in " + where + "; documents are integer-only");
  if (j.is_array() || j.is_object())
    for (const auto& item : j) reject_floats(item, where);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a list of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

FamilyDocument from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("document must be a JSON object");
  reject_floats(j, "document");
  if (!j.contains("format_version")) throw InvalidInput("missing format_version");
  if (as_int(j["format_version"], "format_version") != kFormatVersion)
    throw InvalidInput("unsupported format_version");
  if (!j.contains("n")) throw InvalidInput("missing n");
  FamilyDocument doc;
  doc.n = as_int(j["n"], "n");
  if (doc.n < 0) throw InvalidInput("n must be nonnegative");
  if (j.contains("cycles")) {
    if (!j["cycles"].is_array()) throw InvalidInput("cycles must be a list");
    for (const auto& c : j["cycles"]) {
      auto seq = as_int_list(c, "cycle");
      if (static_cast<int>(seq.size()) != doc.n)
        throw InvalidInput("cycle of length " + std::to_string(seq.size()) + " in a document with n=" +
                           std::to_string(doc.n));
      doc.cycles.push_back(make_cycle(doc.n, std::move(seq)));
    }
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InvalidInput("edges must be a list");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
      auto uv = as_int_list(e, "edge");
      if (uv.size() != 2) throw InvalidInput("edge must have two endpoints");
      if (uv[0] < 0 || uv[1] < 0 || uv[0] >= doc.n || uv[1] >= doc.n || uv[0] == uv[1])
        throw InvalidInput("invalid edge endpoints");
      edges.emplace_back(uv[0], uv[1]);
    }
    doc.edges = std::move(edges);
  }
  if (!j.contains("cycles") && !j.contains("edges")) throw InvalidInput("document has neither cycles nor edges");
  if (j.contains("header")) {
    if (!j["header"].is_object()) throw InvalidInput("header must be an object");
    doc.header = j["header"];
  }
  if (j.contains("certificates")) {
    if (!j["certificates"].is_object()) throw InvalidInput("certificates must be an object");
    doc.certificates = j["certificates"];
  }
  return doc;
}

void emit_list_of_lists(std::ostringstream& os, const json& rows) {
  if (rows.empty()) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) os << "    " << rows[i].dump() << (i + 1 < rows.size() ? ",\n" : "\n");
  os << "  ]";
}

}  // namespace

UGraph FamilyDocument::graph() const {
  UGraph g(n);
  if (edges) {
    for (auto [u, v] : *edges) g.add_edge(u, v);
  } else {
    for (const auto& c : cycles)
      for (auto [u, v] : c.edges()) g.add_edge(u, v);
  }
  return g;
}

json to_json(const std::vector<int>& v) { return json(v); }

FamilyDocument parse_family(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
  return from_json(j);
}

// Keys in sorted order, one per line; cycle and edge lists one row per line.
std::string serialize_family(const FamilyDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  auto key = [&](const char* k) {
    os << (first ? "" : ",\n") << "  \"" << k << "\": ";
    first = false;
  };
  if (!doc.certificates.empty()) {
    key("certificates");
    os << doc.certificates.dump();
  }
  if (!doc.cycles.empty() || !doc.edges) {
    key("cycles");
    json rows = json::array();
    for (const auto& c : doc.cycles) rows.push_back(c.sequence());
    emit_list_of_lists(os, rows);
  }
  if (doc.edges) {
    key("edges");
    json rows = json::array();
    for (auto [u, v] : *doc.edges) rows.push_back(json::array({u, v}));
    emit_list_of_lists(os, rows);
  }
  key("format_version");
  os << kFormatVersion;
  if (!doc.header.empty()) {
    key("header");
    os << doc.header.dump();
  }
  key("n");
  os << doc.n;
  os << "\n}\n";
  return os.str();
}

json family_to_json(const FamilyDocument& doc) {
  json j = json::object();
  if (!doc.certificates.empty()) j["certificates"] = doc.certificates;
  if (!doc.cycles.empty() || !doc.edges) {
    j["cycles"] = json::array();
    for (const auto& c : doc.cycles) j["cycles"].push_back(c.sequence());
  }
  if (doc.edges) {
    j["edges"] = json::array();
    for (auto [u, v] : *doc.edges) j["edges"].push_back(json::array({u, v}));
  }
  j["format_version"] = kFormatVersion;
  if (!doc.header.empty()) j["header"] = doc.header;
  j["n"] = doc.n;
  return j;
}

std::string serialize_family_line(const FamilyDocument& doc) { return family_to_json(doc).dump(); }

FamilyDocument read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::vector<FamilyDocument> parse_family_stream(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  // A pretty-printed document opens with "{" followed by a newline.
  auto brace = text.find('{', first);
  auto nl = text.find('\n', first);
  if (brace == first && nl != std::string_view::npos && text.substr(first + 1, nl - first - 1).find_first_not_of(" \t\r") == std::string_view::npos)
    return {parse_family(text)};
  std::vector<FamilyDocument> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_family(line));
    pos = end + 1;
  }
  return out;
}

}  // namespace twomilton
