// nichebench: batch front end for validating a corpus, writing rating and
// benchmark reports, and running the HTTP service.
//
// Exit codes: 0 success, 1 data or engine error, 2 usage error or missing
// input files.

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "nichebench/benchmark.hpp"
#include "nichebench/error.hpp"
#include "nichebench/json_io.hpp"
#include "nichebench/rating.hpp"
#include "nichebench/service.hpp"

namespace nb = nichebench;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nb::YearWindow parse_years(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--years expects START:END, got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    const int start = std::stoi(text.substr(0, colon), &a);
    const int end = std::stoi(text.substr(colon + 1), &b);
    if (a != colon || b != text.size() - colon - 1) throw std::invalid_argument(text);
    if (start > end) throw UsageError("--years start " + std::to_string(start) + " is after end " + std::to_string(end));
    return {start, end};
  } catch (const std::logic_error&) {
    throw UsageError("--years expects START:END, got '" + text + "'");
  }
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string id; std::getline(ss, id, ',');) {
    if (id.empty()) throw UsageError("empty institution id in '" + text + "'");
    out.push_back(id);
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nb::Error(nb::ErrorKind::MissingFile, "cannot write " + path);
  out << content;
}

std::shared_ptr<const nb::Dataset> load(const std::string& dir, nb::YearWindow window) {
  return std::make_shared<const nb::Dataset>(
      nb::load_corpus(nb::CorpusPaths::in_directory(dir), window));
}

nb::Service* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bibliometric rating and benchmarking of research institutions"};
  app.require_subcommand(1);

  std::string data_dir;
  std::string years = "2008:2013";

  auto* validate = app.add_subcommand("validate", "Load the corpus and report data problems");
  bool validate_json = false;
  validate->add_option("--data", data_dir, "Directory holding the five input CSV files")->required();
  validate->add_option("--years", years, "Corpus year window START:END");
  validate->add_flag("--json", validate_json, "Print the report as JSON");

  auto* rate = app.add_subcommand("rate", "Rate institutions in one subject");
  nb::SubjectCode subject = 0;
  int level = 1;
  std::string weights = "equal";
  std::int64_t min_pubs = nb::kDefaultMinPubs;
  std::string region = nb::kAllRegions;
  std::string out_path;
  std::string format = "json";
  rate->add_option("--data", data_dir)->required();
  rate->add_option("--subject", subject, "ASJC subject code")->required();
  rate->add_option("--level", level, "Subject level 1-3")->required()->check(CLI::Range(1, 3));
  rate->add_option("--years", years, "Year window START:END");
  rate->add_option("--weights", weights, "equal|volume|quality or five comma-separated weights");
  rate->add_option("--min-pubs", min_pubs, "Minimum publications in the cell")->check(CLI::NonNegativeNumber);
  rate->add_option("--region", region, "Region code or ALL");
  rate->add_option("--out", out_path, "Output file (stdout if omitted)");
  rate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* bench = app.add_subcommand("benchmark", "Compare up to five institutions in one subject");
  std::string institutions;
  bench->add_option("--data", data_dir)->required();
  bench->add_option("--institutions", institutions, "Comma-separated institution ids (1-5)")->required();
  bench->add_option("--subject", subject)->required();
  bench->add_option("--level", level)->required()->check(CLI::Range(1, 3));
  bench->add_option("--years", years);
  bench->add_option("--out", out_path);

  auto* overall = app.add_subcommand("overall", "Band matrix over the top 15 disciplines");
  std::string preset = "equal";
  overall->add_option("--data", data_dir)->required();
  overall->add_option("--preset", preset)->check(CLI::IsMember({"equal", "volume", "quality"}));
  overall->add_option("--region", region);
  overall->add_option("--years", years);
  overall->add_option("--min-pubs", min_pubs)->check(CLI::NonNegativeNumber);
  overall->add_option("--out", out_path);

  auto* serve = app.add_subcommand("serve", "Run the read-only HTTP API");
  int port = -1;
  std::string host;
  std::string config_file;
  bool no_cors = false;
  serve->add_option("--data", data_dir);
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--config", config_file, "JSON config file");
  serve->add_option("--years", years);
  serve->add_option("--min-pubs", min_pubs)->check(CLI::NonNegativeNumber);
  serve->add_flag("--no-cors", no_cors, "Do not send CORS headers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const auto window = parse_years(years);

    if (*validate) {
      const auto data = load(data_dir, window);
      const auto report = nb::validate_corpus(data->corpus());
      if (validate_json) {
        std::cout << nb::dump(nb::to_json(report), true) << '\n';
      } else {
        const auto& c = data->corpus();
        std::cout << "publications: " << c.publications().size() << '\n'
                  << "journals: " << c.journals().size() << '\n'
                  << "institutions: " << c.institutions().size() << '\n'
                  << "subjects: " << c.taxonomy().size() << '\n'
                  << "errors: " << report.errors.size() << '\n'
                  << "warnings: " << report.warning_count() << '\n';
        for (const auto& id : report.snip_absent) std::cout << "  warning: journal " << id << " has no SNIP\n";
        for (const auto& id : report.out_of_window) std::cout << "  warning: publication " << id << " outside year window\n";
        for (const auto& id : report.idle_institutions) std::cout << "  warning: institution " << id << " has no publications\n";
      }
      return report.ok() ? 0 : kExitError;
    }

    if (*rate) {
      nb::RatingQuery q;
      try {
        q.weights = nb::WeightScheme::parse(weights);
      } catch (const nb::Error& e) {
        throw UsageError(std::string("--weights: ") + e.what());
      }
      q.window = window;
      q.region = region;
      q.subject = subject;
      q.level = static_cast<nb::Level>(level);
      q.min_pubs = min_pubs;
      const auto data = load(data_dir, window);
      const auto rows = nb::rate_subject(*data, q);
      write_output(out_path, format == "csv" ? nb::rating_csv(rows)
                                             : nb::dump(nb::to_json(rows), true) + '\n');
      return 0;
    }

    if (*bench) {
      const auto ids = split_ids(institutions);
      if (ids.size() > nb::kMaxBenchmarkInstitutions) {
        throw UsageError("--institutions accepts at most 5 ids, got " + std::to_string(ids.size()));
      }
      const auto data = load(data_dir, window);
      const auto profile = nb::benchmark(*data, ids, subject, static_cast<nb::Level>(level), window);
      write_output(out_path, nb::dump(nb::to_json(profile), true) + '\n');
      return 0;
    }

    if (*overall) {
      const auto data = load(data_dir, window);
      const auto matrix = nb::rate_overall(*data, region, nb::preset_from_string(preset), window, min_pubs);
      write_output(out_path, nb::dump(nb::to_json(matrix, data->corpus()), true) + '\n');
      return 0;
    }

    if (*serve) {
      nb::ServiceConfig config;
      if (!config_file.empty()) config = nb::ServiceConfig::from_file(config_file);
      config.apply_env();
      if (!data_dir.empty()) config.data_dir = data_dir;
      if (port >= 0) config.port = port;
      if (!host.empty()) config.host = host;
      if (serve->count("--years")) config.window = window;
      if (serve->count("--min-pubs")) config.min_pubs = min_pubs;
      if (no_cors) config.cors = false;
      if (config.data_dir.empty()) throw UsageError("serve needs --data, a config data_dir, or NICHEBENCH_DATA");

      // Load before binding so a bad data directory never opens the port.
      auto data = load(config.data_dir.string(), config.window);
      nb::Service service(config);
      if (!service.bind()) {
        std::cerr << "error: cannot bind " << config.host << ':' << config.port << '\n';
        return kExitError;
      }
      service.set_dataset(std::move(data));
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on http://" << config.host << ':' << service.bound_port() << '\n';
      const bool ok = service.listen();
      g_service = nullptr;
      return ok ? 0 : kExitError;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == nb::ErrorKind::MissingFile ? kExitUsage : kExitError;
  }
  return 0;
}
