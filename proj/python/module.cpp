#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nichebench/benchmark.hpp"
#include "nichebench/error.hpp"
#include "nichebench/json_io.hpp"
#include "nichebench/rating.hpp"

namespace py = pybind11;
namespace nb = nichebench;

namespace {

py::object to_python(const nb::Json& j) {
  return py::module_::import("json").attr("loads")(nb::dump(j));
}

nb::YearWindow window_arg(const std::pair<int, int>& w) { return nb::make_window(w.first, w.second); }

nb::WeightScheme weights_arg(const py::object& weights) {
  if (py::isinstance<py::str>(weights)) return nb::WeightScheme::parse(weights.cast<std::string>());
  return nb::WeightScheme(weights.cast<std::array<double, nb::kIndicatorCount>>());
}

std::shared_ptr<nb::Dataset> load_dataset(const std::string& dir, std::pair<int, int> window) {
  return std::make_shared<nb::Dataset>(
      nb::load_corpus(nb::CorpusPaths::in_directory(dir), window_arg(window)));
}

nb::RatingQuery make_query(nb::SubjectCode subject, int level, const py::object& weights,
                           std::pair<int, int> window, const std::string& region,
                           std::int64_t min_pubs) {
  nb::RatingQuery q;
  q.subject = subject;
  q.level = nb::level_from_int(level);
  q.weights = weights_arg(weights);
  q.window = window_arg(window);
  q.region = region;
  q.min_pubs = min_pubs;
  return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bibliometric indicators, rating, and benchmarking engines";

  // Messages start with the error kind, e.g. "UnknownCode: 999999".
  py::register_exception<nb::Error>(m, "NichebenchError", PyExc_ValueError);

  m.def("h_index", [](const std::vector<std::int64_t>& c) { return nb::h_index(c); },
        py::arg("citations"));
  m.def("cpp", &nb::cpp, py::arg("total_cites"), py::arg("total_pubs"));
  m.def("band", &nb::band, py::arg("percentage"));
  m.def("normalize", [](const std::vector<double>& v) { return nb::normalize(v); }, py::arg("values"));
  m.def("percentage_scores", [](const std::vector<double>& v) { return nb::percentage_scores(v); },
        py::arg("grand_totals"));
  m.def("weighted_total",
        [](const std::array<double, nb::kIndicatorCount>& n, const py::object& w) {
          return nb::weighted_total(n, weights_arg(w));
        },
        py::arg("normalized"), py::arg("weights"));
  m.def("preset_weights",
        [](const std::string& name) { return nb::WeightScheme::parse(name).values(); },
        py::arg("name"));

  py::class_<nb::Dataset, std::shared_ptr<nb::Dataset>>(m, "Dataset")
      .def_static("load", &load_dataset, py::arg("data_dir"),
                  py::arg("window") = std::pair<int, int>{2008, 2013})
      .def_property_readonly("publication_count",
                             [](const nb::Dataset& d) { return d.corpus().publications().size(); })
      .def_property_readonly("journal_count",
                             [](const nb::Dataset& d) { return d.corpus().journals().size(); })
      .def_property_readonly("institution_count",
                             [](const nb::Dataset& d) { return d.corpus().institutions().size(); })
      .def("summary", [](const nb::Dataset& d) { return nb::corpus_summary(d.corpus()); })
      .def("validate", [](const nb::Dataset& d) {
        return to_python(nb::to_json(nb::validate_corpus(d.corpus())));
      })
      .def("taxonomy", [](const nb::Dataset& d) { return to_python(nb::taxonomy_json(d.corpus().taxonomy())); })
      .def("institutions",
           [](const nb::Dataset& d, const std::string& region) {
             return to_python(nb::institutions_json(d.corpus(), region));
           },
           py::arg("region") = nb::kAllRegions)
      .def("indicator_vector",
           [](const nb::Dataset& d, const std::string& inst, nb::SubjectCode subject, int level,
              std::pair<int, int> window) {
             return to_python(nb::to_json(
                 nb::indicator_vector(d, inst, subject, nb::level_from_int(level), window_arg(window))));
           },
           py::arg("institution"), py::arg("subject"), py::arg("level"),
           py::arg("window") = std::pair<int, int>{2008, 2013})
      .def("rate_json",
           [](const nb::Dataset& d, nb::SubjectCode subject, int level, const py::object& weights,
              std::pair<int, int> window, const std::string& region, std::int64_t min_pubs) {
             return nb::dump(nb::to_json(
                 nb::rate_subject(d, make_query(subject, level, weights, window, region, min_pubs))));
           },
           py::arg("subject"), py::arg("level"), py::arg("weights") = "equal",
           py::arg("window") = std::pair<int, int>{2008, 2013}, py::arg("region") = nb::kAllRegions,
           py::arg("min_pubs") = nb::kDefaultMinPubs)
      .def("benchmark_json",
           [](const nb::Dataset& d, const std::vector<std::string>& ids, nb::SubjectCode subject,
              int level, std::pair<int, int> window) {
             return nb::dump(nb::to_json(
                 nb::benchmark(d, ids, subject, nb::level_from_int(level), window_arg(window))));
           },
           py::arg("institutions"), py::arg("subject"), py::arg("level"),
           py::arg("window") = std::pair<int, int>{2008, 2013})
      .def("overall_json",
           [](const nb::Dataset& d, const std::string& region, const std::string& preset,
              std::int64_t min_pubs) {
             return nb::dump(nb::to_json(
                 nb::rate_overall(d, region, nb::preset_from_string(preset), std::nullopt, min_pubs),
                 d.corpus()));
           },
           py::arg("region") = nb::kAllRegions, py::arg("preset") = "equal",
           py::arg("min_pubs") = nb::kDefaultMinPubs);
}
