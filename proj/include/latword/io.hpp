#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "latword/central_measure.hpp"
#include "latword/ideal_graph.hpp"
#include "latword/poset.hpp"
#include "latword/zd_lattice.hpp"

namespace latword::io {

using json = nlohmann::json;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Poset text: one `elements: a b c` line, then cover lines `a > b`;
/// `#` starts a comment.
Poset parse_poset(const std::string& text);
std::shared_ptr<const Poset> load_poset(const std::string& path);

/// Spectrum text: one `name value` line per element; values are decimals or
/// exact rationals `p/q` (all-rational input is validated exactly).
Spectrum parse_spectrum(const std::string& text, std::shared_ptr<const Poset> poset);
Spectrum load_spectrum(const std::string& path, std::shared_ptr<const Poset> poset);

/// Word text: whitespace-separated element identifiers.
std::vector<int> parse_word(const std::string& text, const Poset& poset);
std::string format_word(const Poset& poset, const std::vector<int>& letters);

json diagram_to_json(const MultiDiagram& diagram);
MultiDiagram diagram_from_json(const json& j);

/// `axis` is 1-based in JSON, 0-based in memory.
json irreducible_to_json(const IrreducibleIdeal& ideal);
IrreducibleIdeal irreducible_from_json(const json& j);

json min1_to_json(const OneDimMinimalIdeal& ideal);
OneDimMinimalIdeal min1_from_json(const json& j);

/// Per-component `freqs` objects of a minimal-ideal JSON; an empty map where
/// a component carries none.
std::vector<std::map<std::string, double>> component_freqs_from_json(const json& j);

/// Edge list, one line per edge: `level n: <vertex-id> -> <vertex-id>`.
std::string graph_to_text(const GradedGraph& graph);
json graph_to_json(const GradedGraph& graph);

/// One row per step: step index plus one column per poset element.
std::string trace_to_csv(const Poset& poset, const std::vector<CountVector>& trace);

/// One JSON line per sampled word.
std::string samples_to_jsonl(const Poset& poset, const CentralSampleReport& report);

}  // namespace latword::io
