#include "latword/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>

#include "latword/errors.hpp"

namespace latword::io {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

std::int64_t parse_int(const std::string& tok) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "expected an integer, got '" + tok + "'");
  }
}

double parse_double(const std::string& tok) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "expected a number, got '" + tok + "'");
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_argument, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::invalid_argument, "cannot write file: " + path);
  out << content;
  if (!out) fail(errc::invalid_argument, "short write: " + path);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  bool have_elements = false;
  for (std::string raw; std::getline(in, raw);) {
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (!have_elements) {
      if (line.rfind("elements:", 0) != 0)
        fail(errc::invalid_argument, "poset text must start with an 'elements:' line");
      elements = split_ws(line.substr(9));
      if (elements.empty()) fail(errc::invalid_argument, "no elements listed");
      have_elements = true;
      continue;
    }
    const auto toks = split_ws(line);
    if (toks.size() != 3 || toks[1] != ">")
      fail(errc::invalid_argument, "expected a cover line 'a > b', got: " + line);
    covers.emplace_back(toks[0], toks[2]);
  }
  if (!have_elements) fail(errc::invalid_argument, "empty poset text");
  return Poset::build(elements, covers);
}

std::shared_ptr<const Poset> load_poset(const std::string& path) {
  return std::make_shared<const Poset>(parse_poset(read_file(path)));
}

Spectrum parse_spectrum(const std::string& text, std::shared_ptr<const Poset> poset) {
  std::istringstream in(text);
  std::map<std::string, double> freqs;
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> rationals;
  bool all_rational = true;
  for (std::string raw; std::getline(in, raw);) {
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto toks = split_ws(line);
    if (toks.size() != 2)
      fail(errc::invalid_argument, "expected a frequency line 'name value', got: " + line);
    if (freqs.count(toks[0]))
      fail(errc::invalid_argument, "duplicate frequency for " + toks[0]);
    if (const auto slash = toks[1].find('/'); slash != std::string::npos) {
      const std::int64_t num = parse_int(toks[1].substr(0, slash));
      const std::int64_t den = parse_int(toks[1].substr(slash + 1));
      if (den <= 0) fail(errc::invalid_argument, "denominator must be positive: " + toks[1]);
      rationals.emplace(toks[0], std::make_pair(num, den));
      freqs.emplace(toks[0], static_cast<double>(num) / static_cast<double>(den));
    } else {
      all_rational = false;
      freqs.emplace(toks[0], parse_double(toks[1]));
    }
  }
  if (freqs.empty()) fail(errc::invalid_argument, "empty spectrum text");
  if (all_rational) {
    if (rationals.size() != static_cast<std::size_t>(poset->size()))
      fail(errc::invalid_argument, "spectrum must list every poset element exactly once");
    std::vector<std::pair<std::int64_t, std::int64_t>> by_index(
        static_cast<std::size_t>(poset->size()), {0, 1});
    for (const auto& [name, value] : rationals)
      by_index[static_cast<std::size_t>(poset->index_of(name))] = value;
    return Spectrum::validate_rational(std::move(poset), by_index);
  }
  return Spectrum::validate(std::move(poset), freqs);
}

Spectrum load_spectrum(const std::string& path, std::shared_ptr<const Poset> poset) {
  return parse_spectrum(read_file(path), std::move(poset));
}

std::vector<int> parse_word(const std::string& text, const Poset& poset) {
  std::istringstream in(text);
  std::vector<int> letters;
  for (std::string raw; std::getline(in, raw);) {
    for (const auto& tok : split_ws(strip(raw))) letters.push_back(poset.index_of(tok));
  }
  return letters;
}

std::string format_word(const Poset& poset, const std::vector<int>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += " ";
    out += poset.name(letters[i]);
  }
  return out;
}

json diagram_to_json(const MultiDiagram& diagram) {
  json j;
  j["d"] = diagram.d;
  j["cells"] = diagram.cells;
  return j;
}

MultiDiagram diagram_from_json(const json& j) {
  try {
    return MultiDiagram::of(j.at("d").get<int>(), j.at("cells").get<std::vector<GridPoint>>());
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, std::string("bad diagram JSON: ") + e.what());
  }
}

json irreducible_to_json(const IrreducibleIdeal& ideal) {
  json j;
  j["axis"] = ideal.axis + 1;
  j["base"] = diagram_to_json(ideal.base);
  return j;
}

IrreducibleIdeal irreducible_from_json(const json& j) {
  try {
    return IrreducibleIdeal::of(j.at("axis").get<int>() - 1, diagram_from_json(j.at("base")));
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, std::string("bad irreducible-ideal JSON: ") + e.what());
  }
}

json min1_to_json(const OneDimMinimalIdeal& ideal) {
  json comps = json::array();
  for (const auto& c : ideal.components) comps.push_back(irreducible_to_json(c));
  json j;
  j["components"] = std::move(comps);
  return j;
}

OneDimMinimalIdeal min1_from_json(const json& j) {
  try {
    std::vector<IrreducibleIdeal> comps;
    for (const auto& cj : j.at("components")) comps.push_back(irreducible_from_json(cj));
    return OneDimMinimalIdeal::of(std::move(comps));
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, std::string("bad minimal-ideal JSON: ") + e.what());
  }
}

std::vector<std::map<std::string, double>> component_freqs_from_json(const json& j) {
  try {
    std::vector<std::map<std::string, double>> out;
    for (const auto& cj : j.at("components")) {
      std::map<std::string, double> freqs;
      if (cj.contains("freqs"))
        freqs = cj.at("freqs").get<std::map<std::string, double>>();
      out.push_back(std::move(freqs));
    }
    return out;
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, std::string("bad minimal-ideal JSON: ") + e.what());
  }
}

std::string graph_to_text(const GradedGraph& graph) {
  std::string out;
  for (std::size_t n = 0; n < graph.edges.size(); ++n) {
    for (std::size_t i = 0; i < graph.edges[n].size(); ++i) {
      for (int t : graph.edges[n][i]) {
        out += "level " + std::to_string(n) + ": " + graph.levels[n][i] + " -> " +
               graph.levels[n + 1][static_cast<std::size_t>(t)] + "\n";
      }
    }
  }
  return out;
}

json graph_to_json(const GradedGraph& graph) {
  json j;
  j["levels"] = graph.levels;
  j["level_sizes"] = graph.level_sizes();
  json edges = json::array();
  for (const auto& level : graph.edges) {
    json level_edges = json::array();
    for (std::size_t i = 0; i < level.size(); ++i)
      for (int t : level[i]) level_edges.push_back(json::array({i, t}));
    edges.push_back(std::move(level_edges));
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string trace_to_csv(const Poset& poset, const std::vector<CountVector>& trace) {
  std::string out = "step";
  for (const auto& name : poset.names()) out += "," + name;
  out += "\n";
  for (std::size_t s = 0; s < trace.size(); ++s) {
    out += std::to_string(s + 1);
    for (const auto c : trace[s].counts) out += "," + std::to_string(c);
    out += "\n";
  }
  return out;
}

std::string samples_to_jsonl(const Poset& poset, const CentralSampleReport& report) {
  std::string out;
  for (std::size_t w = 0; w < report.words.size(); ++w) {
    json line;
    line["sampler"] = report.sampler;
    line["seed"] = report.seed;
    json word = json::array();
    for (const int letter : report.words[w]) word.push_back(poset.name(letter));
    line["word"] = std::move(word);
    line["accept_rate"] = report.sampler == "rejection" ? report.acceptance_rate : 1.0;
    line["bracket_widths"] = w == 0 ? report.step_widths : std::vector<double>{};
    out += line.dump();
    out += "\n";
  }
  return out;
}

}  // namespace latword::io
