// latword: batch driver over the lattice-word library.
//
// Exit codes: 0 pass, 1 check failure, 2 invalid input, 3 resource cap.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latword/central_measure.hpp"
#include "latword/errors.hpp"
#include "latword/ideal_graph.hpp"
#include "latword/io.hpp"
#include "latword/lattice_words.hpp"
#include "latword/poset.hpp"
#include "latword/rsk.hpp"
#include "latword/version.hpp"
#include "latword/zd_lattice.hpp"

namespace {

using latword::io::json;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::fwrite(content.data(), 1, content.size(), stdout);
  else
    latword::io::write_file(out_path, content);
}

void emit_json(const std::string& out_path, const json& j) { emit(out_path, j.dump(2) + "\n"); }

latword::Convention parse_convention(const std::string& name) {
  if (name == "weak") return latword::Convention::weak;
  if (name == "strict2") return latword::Convention::strict2;
  latword::fail(latword::errc::invalid_argument, "unknown convention: " + name);
}

json word_names(const latword::Poset& poset, const std::vector<int>& letters) {
  json out = json::array();
  for (const int l : letters) out.push_back(poset.name(l));
  return out;
}

struct Args {
  std::string poset_path, spectrum_path, rsk_spectrum_path, diagram_path, word_path;
  std::string out, jsonl_out, trace_out;
  std::string convention = "weak";
  std::string sampler = "htransform";
  std::string op = "chains";
  std::string format = "text";
  int n = 6;
  int samples = 1000;
  int guard = 200;
  int horizon = 1 << 16;
  int grid_d = 2;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
  bool inject_greedy = false;
};

latword::SurvivalOptions survival_options(const Args& a) {
  latword::SurvivalOptions o;
  o.max_horizon = a.horizon;
  return o;
}

int run_enumerate(const Args& a) {
  const auto poset = latword::io::load_poset(a.poset_path);
  const auto convention = parse_convention(a.convention);
  const auto e = latword::enumerate_lattice_words(*poset, a.n, convention);
  json report;
  report["command"] = "enumerate";
  report["version"] = latword::kVersion;
  report["config"] = {{"poset", a.poset_path}, {"n", a.n}, {"convention", a.convention}};
  report["count"] = e.count.str();
  if (e.words.size() <= 5000) {
    json words = json::array();
    for (const auto& w : e.words) words.push_back(word_names(*poset, w));
    report["words"] = std::move(words);
  }
  emit_json(a.out, report);
  return 0;
}

int run_sample(const Args& a) {
  const auto poset = latword::io::load_poset(a.poset_path);
  const auto spectrum = latword::io::load_spectrum(a.spectrum_path, poset);
  latword::CentralSampleReport sample;
  if (a.sampler == "htransform") {
    latword::SurvivalSolver solver(spectrum, survival_options(a));
    sample = latword::sample_central_htransform(solver, a.n, a.samples, a.seed, a.tolerance);
  } else if (a.sampler == "rejection") {
    sample = latword::sample_central_rejection(spectrum, a.n, a.guard, a.samples, a.seed);
  } else if (a.sampler == "greedy") {
    sample = latword::sample_greedy_control(spectrum, a.n, a.samples, a.seed);
  } else {
    latword::fail(latword::errc::invalid_argument, "unknown sampler: " + a.sampler);
  }
  json report;
  report["command"] = "sample";
  report["version"] = latword::kVersion;
  report["config"] = {{"poset", a.poset_path},   {"spectrum", a.spectrum_path},
                      {"n", a.n},                {"samples", a.samples},
                      {"seed", a.seed},          {"sampler", a.sampler},
                      {"guard", a.guard},        {"tolerance", a.tolerance},
                      {"horizon", a.horizon}};
  report["sampler"] = sample.sampler;
  report["word_count"] = sample.words.size();
  report["attempts"] = sample.attempts;
  report["accepted"] = sample.accepted;
  report["acceptance_rate"] = sample.acceptance_rate;
  report["bias_bound"] = sample.bias_bound;
  report["max_kernel_width"] = sample.max_kernel_width;
  report["step_widths"] = sample.step_widths;
  if (!sample.words.empty()) report["first_word"] = word_names(*poset, sample.words.front());
  emit_json(a.out, report);
  if (!a.jsonl_out.empty()) emit(a.jsonl_out, latword::io::samples_to_jsonl(*poset, sample));
  if (!a.trace_out.empty() && !sample.words.empty()) {
    const auto word = latword::LatticeWord::of(poset, sample.words.front());
    emit(a.trace_out, latword::io::trace_to_csv(*poset, latword::word_to_tableau(word)));
  }
  return 0;
}

int run_verify(const Args& a) {
  const auto poset = latword::io::load_poset(a.poset_path);
  const auto spectrum = latword::io::load_spectrum(a.spectrum_path, poset);
  latword::SurvivalSolver solver(spectrum, survival_options(a));
  latword::VerifyOptions options;
  options.guard = a.guard;
  options.kernel_tolerance = a.tolerance;
  options.inject_greedy = a.inject_greedy;
  const auto centrality = latword::verify_centrality(solver, a.n, a.samples, a.seed, options);
  const auto agreement =
      latword::sampler_agreement(solver, a.n, a.samples, a.seed, a.guard, a.tolerance);
  const auto words = latword::sample_central_htransform(solver, a.n, a.samples, a.seed,
                                                        a.tolerance)
                         .words;
  const auto estimates = latword::estimate_spectrum(*poset, words);

  json report;
  report["command"] = "verify";
  report["version"] = latword::kVersion;
  report["config"] = {{"poset", a.poset_path},   {"spectrum", a.spectrum_path},
                      {"n", a.n},                {"samples", a.samples},
                      {"seed", a.seed},          {"guard", a.guard},
                      {"tolerance", a.tolerance}, {"horizon", a.horizon},
                      {"inject_greedy", a.inject_greedy}};
  json contents = json::array();
  for (const auto& c : centrality.contents)
    contents.push_back({{"content", c.content},
                        {"word_count", c.word_count},
                        {"brackets_overlap", c.brackets_overlap},
                        {"max_lower", c.max_lower},
                        {"min_upper", c.min_upper}});
  json chi = json::array();
  for (const auto& s : centrality.chi_square)
    chi.push_back({{"sampler", s.sampler},
                   {"p_values", s.p_values},
                   {"min_p_value", s.min_p_value},
                   {"pass", s.pass}});
  report["centrality"] = {{"exact_pass", centrality.exact_pass},
                          {"statistical_pass", centrality.statistical_pass},
                          {"pass", centrality.pass},
                          {"p_floor", centrality.p_floor},
                          {"contents", std::move(contents)},
                          {"chi_square", std::move(chi)}};
  report["agreement"] = {{"tv", agreement.comparison.tv},
                         {"envelope", agreement.comparison.envelope},
                         {"below_envelope", agreement.comparison.below_envelope}};
  json est = json::array();
  for (int i = 0; i < poset->size(); ++i)
    est.push_back({{"element", poset->name(i)},
                   {"estimate", estimates[static_cast<std::size_t>(i)].estimate},
                   {"radius", estimates[static_cast<std::size_t>(i)].radius}});
  report["spectrum_estimate"] = std::move(est);
  const bool pass = centrality.pass && agreement.comparison.below_envelope;
  report["pass"] = pass;
  emit_json(a.out, report);
  return pass ? 0 : 1;
}

int run_zd(const Args& a) {
  const json input = json::parse(latword::io::read_file(a.diagram_path), nullptr, true, true);
  json report;
  report["command"] = "zd";
  report["version"] = latword::kVersion;
  report["config"] = {{"diagram", a.diagram_path}, {"op", a.op}, {"word", a.word_path}};
  if (a.op == "chains") {
    const auto component = latword::io::irreducible_from_json(input);
    const auto chain = latword::chains_of(component);
    json covers = json::array();
    for (const auto& [x, y] : chain.covers())
      covers.push_back(json::array({chain.name(x), chain.name(y)}));
    report["elements"] = chain.names();
    report["covers"] = std::move(covers);
  } else if (a.op == "decompose") {
    const auto ideal = latword::io::min1_from_json(input);
    const auto dec = latword::decompose(ideal);
    json pairs = json::array();
    json intersections = json::array();
    json sizes = json::array();
    for (std::size_t i = 0; i < dec.pairs.size(); ++i) {
      pairs.push_back(json::array({dec.pairs[i].first + 1, dec.pairs[i].second + 1}));
      intersections.push_back(latword::io::diagram_to_json(dec.pairwise_intersections[i]));
      sizes.push_back(dec.pairwise_intersections[i].size());
    }
    report["pairs"] = std::move(pairs);
    report["intersections"] = std::move(intersections);
    report["sizes"] = std::move(sizes);
    report["all_finite"] = dec.all_finite;
  } else if (a.op == "reduce") {
    const auto ideal = latword::io::min1_from_json(input);
    const auto freqs = latword::io::component_freqs_from_json(input);
    const auto reductions = latword::reduce_to_chain_poset(ideal, freqs);
    json comps = json::array();
    for (const auto& r : reductions) {
      json renorm;
      for (int i = 0; i < r.poset->size(); ++i)
        renorm[r.poset->name(i)] = r.spectrum.freq(i);
      comps.push_back({{"elements", r.poset->names()},
                       {"raw", r.raw},
                       {"weight", r.weight},
                       {"renormalized", std::move(renorm)}});
    }
    report["components"] = std::move(comps);
  } else if (a.op == "embed") {
    const auto component = latword::io::irreducible_from_json(input);
    const auto chain = std::make_shared<const latword::Poset>(latword::chains_of(component));
    const auto letters = latword::io::parse_word(latword::io::read_file(a.word_path), *chain);
    const auto word = latword::LatticeWord::of(chain, letters);
    const auto path = latword::tableau_embed(component, word);
    json steps = json::array();
    for (const auto& diag : path) steps.push_back(latword::io::diagram_to_json(diag));
    report["path"] = std::move(steps);
    const auto pullback = latword::embed_pullback(component, path);
    report["pullback"] = word_names(*chain, pullback);
    report["round_trip"] = pullback == letters;
  } else {
    latword::fail(latword::errc::invalid_argument, "unknown zd op: " + a.op);
  }
  emit_json(a.out, report);
  return 0;
}

int run_rsk(const Args& a) {
  const auto poset = latword::io::load_poset(a.poset_path);
  const auto spectrum = latword::io::load_spectrum(a.spectrum_path, poset);
  const auto rsk_spectrum =
      a.rsk_spectrum_path.empty()
          ? spectrum
          : latword::io::load_spectrum(a.rsk_spectrum_path, poset);
  latword::SurvivalSolver solver(spectrum, survival_options(a));
  const auto cmp =
      latword::compare_to_central(solver, rsk_spectrum, a.n, a.samples, a.seed, a.tolerance);
  json report;
  report["command"] = "rsk";
  report["version"] = latword::kVersion;
  report["config"] = {{"poset", a.poset_path},
                      {"spectrum", a.spectrum_path},
                      {"rsk_spectrum", a.rsk_spectrum_path.empty() ? a.spectrum_path
                                                                   : a.rsk_spectrum_path},
                      {"n", a.n},
                      {"samples", a.samples},
                      {"seed", a.seed},
                      {"tolerance", a.tolerance}};
  report["tv"] = cmp.comparison.tv;
  report["envelope"] = cmp.comparison.envelope;
  report["below_envelope"] = cmp.comparison.below_envelope;
  json rows = json::array();
  for (const auto& r : cmp.rows)
    rows.push_back({{"path", r.path}, {"rsk", r.rsk_count}, {"central", r.central_count}});
  report["rows"] = std::move(rows);
  emit_json(a.out, report);
  return cmp.comparison.below_envelope ? 0 : 1;
}

int run_graph(const Args& a) {
  latword::GradedGraph graph;
  json config = {{"n", a.n}, {"format", a.format}};
  if (!a.poset_path.empty()) {
    const auto poset = latword::io::load_poset(a.poset_path);
    graph = latword::build_levels(latword::FinitePosetProvider(poset), a.n);
    config["poset"] = a.poset_path;
  } else {
    graph = latword::build_levels(latword::GridProvider(a.grid_d), a.n);
    config["grid_d"] = a.grid_d;
  }
  if (a.format == "text") {
    emit(a.out, latword::io::graph_to_text(graph));
  } else if (a.format == "json") {
    json report;
    report["command"] = "graph";
    report["version"] = latword::kVersion;
    report["config"] = std::move(config);
    report["graph"] = latword::io::graph_to_json(graph);
    emit_json(a.out, report);
  } else {
    latword::fail(latword::errc::invalid_argument, "unknown format: " + a.format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice words over posets: enumeration, central-measure sampling, "
               "verification, grid ideals, RSK comparison"};
  app.require_subcommand(1);
  Args a;

  auto* enumerate = app.add_subcommand("enumerate", "enumerate lattice words of length n");
  enumerate->add_option("--poset", a.poset_path, "poset text file")->required();
  enumerate->add_option("--n", a.n, "word length")->required();
  enumerate->add_option("--convention", a.convention, "weak|strict2");
  enumerate->add_option("--out", a.out, "report path (stdout when absent)");

  auto* sample = app.add_subcommand("sample", "draw words from the conditioned walk");
  sample->add_option("--poset", a.poset_path)->required();
  sample->add_option("--spectrum", a.spectrum_path)->required();
  sample->add_option("--sampler", a.sampler, "htransform|rejection|greedy");
  sample->add_option("--n", a.n, "word length");
  sample->add_option("--samples", a.samples, "number of words");
  sample->add_option("--seed", a.seed);
  sample->add_option("--guard", a.guard, "rejection guard horizon");
  sample->add_option("--tolerance", a.tolerance, "kernel bracket width");
  sample->add_option("--horizon", a.horizon, "survival horizon cap");
  sample->add_option("--out", a.out);
  sample->add_option("--jsonl-out", a.jsonl_out, "one JSON line per word");
  sample->add_option("--trace-out", a.trace_out, "CSV trace of the first word");

  auto* verify = app.add_subcommand("verify", "centrality checks at level n");
  verify->add_option("--poset", a.poset_path)->required();
  verify->add_option("--spectrum", a.spectrum_path)->required();
  verify->add_option("--n", a.n);
  verify->add_option("--samples", a.samples);
  verify->add_option("--seed", a.seed);
  verify->add_option("--guard", a.guard);
  verify->add_option("--tolerance", a.tolerance);
  verify->add_option("--horizon", a.horizon);
  verify->add_option("--out", a.out);
  verify->add_flag("--inject-greedy", a.inject_greedy)->group("");  // negative-control hook

  auto* zd = app.add_subcommand("zd", "grid-ideal pipelines over diagram JSON");
  zd->add_option("--diagram", a.diagram_path, "diagram/ideal JSON file")->required();
  zd->add_option("--op", a.op, "chains|decompose|reduce|embed");
  zd->add_option("--word", a.word_path, "word file for --op embed");
  zd->add_option("--out", a.out);

  auto* rsk = app.add_subcommand("rsk", "shape-path comparison against the conditioned walk");
  rsk->add_option("--poset", a.poset_path, "chain poset file")->required();
  rsk->add_option("--spectrum", a.spectrum_path)->required();
  rsk->add_option("--rsk-spectrum", a.rsk_spectrum_path,
                  "spectrum for the i.i.d. side (defaults to --spectrum)");
  rsk->add_option("--n", a.n);
  rsk->add_option("--samples", a.samples);
  rsk->add_option("--seed", a.seed);
  rsk->add_option("--tolerance", a.tolerance);
  rsk->add_option("--out", a.out);

  auto* graph = app.add_subcommand("graph", "export the graded graph of ideals");
  graph->add_option("--poset", a.poset_path, "poset text file (finite posets)");
  graph->add_option("--grid-d", a.grid_d, "grid dimension (when no --poset)");
  graph->add_option("--n", a.n, "depth");
  graph->add_option("--format", a.format, "text|json");
  graph->add_option("--out", a.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(a);
    if (sample->parsed()) return run_sample(a);
    if (verify->parsed()) return run_verify(a);
    if (zd->parsed()) return run_zd(a);
    if (rsk->parsed()) return run_rsk(a);
    if (graph->parsed()) return run_graph(a);
  } catch (const latword::Error& e) {
    std::cerr << latword::errc_name(e.code()) << ": " << e.what() << "\n";
    return e.is_resource() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
