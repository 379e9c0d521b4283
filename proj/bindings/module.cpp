// Python surface: thin wrappers returning plain dicts/tuples; exact counts
// cross the boundary as python ints (via decimal strings).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latword/central_measure.hpp"
#include "latword/errors.hpp"
#include "latword/ideal_graph.hpp"
#include "latword/lattice_words.hpp"
#include "latword/poset.hpp"
#include "latword/rsk.hpp"
#include "latword/version.hpp"
#include "latword/zd_lattice.hpp"

namespace py = pybind11;
using namespace latword;

namespace {

py::int_ big(const BigInt& v) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.str()));
}

std::shared_ptr<const Poset> make_poset(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  return std::make_shared<const Poset>(Poset::build(elements, covers));
}

Spectrum make_spectrum(std::shared_ptr<const Poset> poset,
                       const std::map<std::string, double>& freqs) {
  return Spectrum::validate(std::move(poset), freqs);
}

py::dict sample_report(const CentralSampleReport& r) {
  py::dict d;
  d["sampler"] = r.sampler;
  d["seed"] = r.seed;
  d["n"] = r.n;
  d["words"] = r.words;
  d["attempts"] = r.attempts;
  d["accepted"] = r.accepted;
  d["acceptance_rate"] = r.acceptance_rate;
  d["guard"] = r.guard;
  d["bias_bound"] = r.bias_bound;
  d["max_kernel_width"] = r.max_kernel_width;
  d["step_widths"] = r.step_widths;
  return d;
}

IrreducibleIdeal make_component(int axis, int d, const std::vector<GridPoint>& base_cells) {
  return IrreducibleIdeal::of(axis, MultiDiagram::of(d - 1, base_cells));
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::greater: return "greater";
    case Relation::less: return "less";
    case Relation::equal: return "equal";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "lattice words over posets: enumeration, central measures, grid ideals, RSK";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "LatwordError");

  py::class_<Poset, std::shared_ptr<Poset>>(m, "Poset")
      .def(py::init([](const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& covers) {
             return std::const_pointer_cast<Poset>(make_poset(elements, covers));
           }),
           py::arg("elements"), py::arg("covers") = std::vector<std::pair<std::string, std::string>>{})
      .def_static("chain", [](int n) { return std::make_shared<Poset>(Poset::chain(n)); })
      .def_static("antichain", [](int n) { return std::make_shared<Poset>(Poset::antichain(n)); })
      .def("size", &Poset::size)
      .def("names", &Poset::names)
      .def("index_of", &Poset::index_of)
      .def("covers",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [a, b] : p.covers()) out.emplace_back(p.name(a), p.name(b));
             return out;
           })
      .def("is_ideal", [](const Poset& p, const std::vector<int>& members) {
        return p.is_ideal(members);
      });

  m.def("is_lattice",
        [](std::shared_ptr<const Poset> poset, const std::vector<int>& letters,
           const std::string& convention) {
          return is_lattice(*poset, letters,
                            convention == "strict2" ? Convention::strict2 : Convention::weak);
        },
        py::arg("poset"), py::arg("letters"), py::arg("convention") = "weak");

  m.def("enumerate_lattice_words",
        [](std::shared_ptr<const Poset> poset, int n, const std::string& convention,
           std::size_t max_words) {
          const auto e = enumerate_lattice_words(
              *poset, n, convention == "strict2" ? Convention::strict2 : Convention::weak,
              max_words);
          return py::make_tuple(e.words, big(e.count));
        },
        py::arg("poset"), py::arg("n"), py::arg("convention") = "weak",
        py::arg("max_words") = 1'000'000);

  m.def("count_paths",
        [](std::shared_ptr<const Poset> poset, const std::vector<int>& ideal) {
          return big(count_paths(FinitePosetProvider(std::move(poset)), ideal));
        },
        py::arg("poset"), py::arg("ideal"));

  m.def("hook_length_count",
        [](const std::vector<int>& partition) { return big(hook_length_count(partition)); });

  m.def("linear_extension_count",
        [](std::shared_ptr<const Poset> poset, const std::vector<int>& members) {
          return big(linear_extension_count(*poset, members));
        });

  m.def("multinomial",
        [](const std::vector<std::int64_t>& content) { return big(multinomial(content)); });

  m.def("fiber_statistics",
        [](std::shared_ptr<const Poset> poset, const std::vector<std::int64_t>& content) {
          const auto f = fiber_statistics(*poset, content);
          return py::make_tuple(big(f.all_arrangements), big(f.lattice_arrangements));
        });

  m.def("poset_levels",
        [](std::shared_ptr<const Poset> poset, int depth) {
          return build_levels(FinitePosetProvider(std::move(poset)), depth).level_sizes();
        },
        py::arg("poset"), py::arg("depth"));

  m.def("grid_levels",
        [](int d, int depth) { return build_levels(GridProvider(d), depth).level_sizes(); },
        py::arg("d"), py::arg("depth"));

  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init(&make_spectrum), py::arg("poset"), py::arg("freqs"))
      .def("freqs", &Spectrum::freqs);

  py::class_<SurvivalSolver>(m, "SurvivalSolver")
      .def(py::init([](const Spectrum& s) { return new SurvivalSolver(s); }))
      .def("survival",
           [](SurvivalSolver& solver, const std::vector<std::int64_t>& counts, double width) {
             const auto b = solver.survival_at(solver.diffs_of(counts), width);
             return py::make_tuple(b.lower, b.upper, b.horizon);
           },
           py::arg("counts"), py::arg("width") = 1e-6)
      .def("transition_row",
           [](SurvivalSolver& solver, const std::vector<std::int64_t>& counts, double width) {
             CountVector state{solver.poset(), counts};
             const auto row = transition_row(solver, state, width);
             py::dict d;
             for (int i = 0; i < solver.poset()->size(); ++i) {
               const auto& iv = row.probs[static_cast<std::size_t>(i)];
               d[py::str(solver.poset()->name(i))] = py::make_tuple(iv.lo, iv.hi);
             }
             return d;
           },
           py::arg("counts"), py::arg("width") = 1e-6)
      .def("cylinder_probability",
           [](SurvivalSolver& solver, const std::vector<int>& letters, double width) {
             const auto iv = cylinder_probability(solver, letters, width);
             return py::make_tuple(iv.lo, iv.hi);
           },
           py::arg("letters"), py::arg("width") = 1e-9);

  m.def("sample_central",
        [](SurvivalSolver& solver, int n, int samples, std::uint64_t seed,
           const std::string& sampler, int guard, double tolerance) {
          if (sampler == "htransform")
            return sample_report(sample_central_htransform(solver, n, samples, seed, tolerance));
          if (sampler == "rejection")
            return sample_report(
                sample_central_rejection(solver.spectrum(), n, guard, samples, seed));
          if (sampler == "greedy")
            return sample_report(sample_greedy_control(solver.spectrum(), n, samples, seed));
          fail(errc::invalid_argument, "unknown sampler: " + sampler);
        },
        py::arg("solver"), py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("sampler") = "htransform", py::arg("guard") = 200, py::arg("tolerance") = 1e-6);

  m.def("verify_centrality",
        [](SurvivalSolver& solver, int n, int samples, std::uint64_t seed, bool inject_greedy) {
          VerifyOptions options;
          options.inject_greedy = inject_greedy;
          const auto r = verify_centrality(solver, n, samples, seed, options);
          py::dict d;
          d["exact_pass"] = r.exact_pass;
          d["statistical_pass"] = r.statistical_pass;
          d["pass"] = r.pass;
          py::list contents;
          for (const auto& c : r.contents) {
            py::dict cd;
            cd["content"] = c.content;
            cd["word_count"] = c.word_count;
            cd["brackets_overlap"] = c.brackets_overlap;
            contents.append(cd);
          }
          d["contents"] = contents;
          py::list chi;
          for (const auto& s : r.chi_square) {
            py::dict sd;
            sd["sampler"] = s.sampler;
            sd["min_p_value"] = s.min_p_value;
            sd["pass"] = s.pass;
            chi.append(sd);
          }
          d["chi_square"] = chi;
          return d;
        },
        py::arg("solver"), py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("inject_greedy") = false);

  m.def("estimate_spectrum",
        [](std::shared_ptr<const Poset> poset, const std::vector<std::vector<int>>& words) {
          const auto est = estimate_spectrum(*poset, words);
          std::vector<std::pair<double, double>> out;
          out.reserve(est.size());
          for (const auto& e : est) out.emplace_back(e.estimate, e.radius);
          return out;
        });

  m.def("chains_of",
        [](int axis, int d, const std::vector<GridPoint>& base_cells) {
          const auto chain = chains_of(make_component(axis, d, base_cells));
          std::vector<std::pair<std::string, std::string>> covers;
          for (const auto& [a, b] : chain.covers()) covers.emplace_back(chain.name(a), chain.name(b));
          return py::make_tuple(chain.names(), covers);
        },
        py::arg("axis"), py::arg("d"), py::arg("base_cells"),
        "chain poset of an irreducible component; axis is 0-based");

  m.def("decompose",
        [](int d, const std::vector<std::pair<int, std::vector<GridPoint>>>& components) {
          std::vector<IrreducibleIdeal> comps;
          comps.reserve(components.size());
          for (const auto& [axis, cells] : components)
            comps.push_back(make_component(axis, d, cells));
          const auto dec = decompose(OneDimMinimalIdeal::of(std::move(comps)));
          py::list out;
          for (std::size_t i = 0; i < dec.pairs.size(); ++i) {
            py::dict e;
            e["pair"] = dec.pairs[i];
            e["cells"] = dec.pairwise_intersections[i].cells;
            out.append(e);
          }
          return out;
        },
        py::arg("d"), py::arg("components"));

  m.def("min1_compare",
        [](int d, const std::vector<std::pair<int, std::vector<GridPoint>>>& lhs,
           const std::vector<std::pair<int, std::vector<GridPoint>>>& rhs) {
          auto build = [d](const std::vector<std::pair<int, std::vector<GridPoint>>>& spec_) {
            std::vector<IrreducibleIdeal> comps;
            for (const auto& [axis, cells] : spec_) comps.push_back(make_component(axis, d, cells));
            return OneDimMinimalIdeal::of(std::move(comps));
          };
          return relation_name(min1_compare(build(lhs), build(rhs)));
        },
        py::arg("d"), py::arg("lhs"), py::arg("rhs"));

  m.def("tableau_embed",
        [](int axis, int d, const std::vector<GridPoint>& base_cells,
           const std::vector<int>& letters) {
          const auto component = make_component(axis, d, base_cells);
          const auto chain = std::make_shared<const Poset>(chains_of(component));
          const auto path = tableau_embed(component, LatticeWord::of(chain, letters));
          std::vector<std::vector<GridPoint>> out;
          out.reserve(path.size());
          for (const auto& diag : path) out.push_back(diag.cells);
          return out;
        },
        py::arg("axis"), py::arg("d"), py::arg("base_cells"), py::arg("letters"));

  m.def("embed_pullback",
        [](int axis, int d, const std::vector<GridPoint>& base_cells,
           const std::vector<std::vector<GridPoint>>& path) {
          const auto component = make_component(axis, d, base_cells);
          std::vector<MultiDiagram> diags;
          diags.reserve(path.size());
          for (const auto& cells : path) diags.push_back(MultiDiagram::of(d, cells));
          return embed_pullback(component, diags);
        },
        py::arg("axis"), py::arg("d"), py::arg("base_cells"), py::arg("path"));

  m.def("rsk_insert", [](const std::vector<int>& word) {
    const auto t = rsk_insert(word);
    return py::make_tuple(t.p_tab, t.q_tab, t.shape_path);
  });

  m.def("compare_rsk_to_central",
        [](SurvivalSolver& solver, const Spectrum& rsk_spectrum, int n, int samples,
           std::uint64_t seed) {
          const auto cmp = compare_to_central(solver, rsk_spectrum, n, samples, seed);
          py::dict d;
          d["tv"] = cmp.comparison.tv;
          d["envelope"] = cmp.comparison.envelope;
          d["below_envelope"] = cmp.comparison.below_envelope;
          py::list rows;
          for (const auto& r : cmp.rows)
            rows.append(py::make_tuple(r.path, r.rsk_count, r.central_count));
          d["rows"] = rows;
          return d;
        },
        py::arg("solver"), py::arg("rsk_spectrum"), py::arg("n"), py::arg("samples"),
        py::arg("seed"));
}
