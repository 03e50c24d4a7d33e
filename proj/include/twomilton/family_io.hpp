#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "twomilton/graph.hpp"

namespace twomilton {

inline constexpr int kFormatVersion = 1;

/// The cycle-family document: a single JSON object with `format_version`,
/// `n`, `cycles`, and optional `header` (generator name, parameters, seed)
/// and `certificates`. A graph document carries `edges` instead of (or in
/// addition to) `cycles`. Integers only; floats are rejected.
struct FamilyDocument {
  int n = 0;
  std::vector<HamCycle> cycles;
  std::optional<std::vector<Edge>> edges;
  nlohmann::json header = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::object();

  /// The document's graph: the edge list if present, otherwise the union of
  /// all cycles.
  UGraph graph() const;
};

FamilyDocument parse_family(std::string_view text);
std::string serialize_family(const FamilyDocument& doc);
/// The same document on a single line with no trailing newline, for
/// JSON-lines corpora.
std::string serialize_family_line(const FamilyDocument& doc);
nlohmann::json family_to_json(const FamilyDocument& doc);

FamilyDocument read_family_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Parses a JSON-lines stream of documents (one per non-empty line) or a
/// single pretty-printed document.
std::vector<FamilyDocument> parse_family_stream(std::string_view text);

nlohmann::json to_json(const std::vector<int>& v);

}  // namespace twomilton
