#include "nichebench/service.hpp"

#include <cstdlib>
#include <fstream>

#include <httplib.h>

#include "digest.hpp"
#include "nichebench/error.hpp"

namespace nichebench {

struct Service::Transport {
  httplib::Server server;
};

namespace {

Response json_response(int status, const Json& body) {
  Response r;
  r.status = status;
  r.body = dump(body);
  r.headers["Content-Type"] = "application/json";
  return r;
}

Response error_response(int status, std::string_view kind, const std::string& message) {
  return json_response(status, {{"error", std::string(kind)}, {"message", message}});
}

std::string param(const std::multimap<std::string, std::string>& query, const std::string& key,
                  const std::string& fallback) {
  auto it = query.find(key);
  return it == query.end() ? fallback : it->second;
}

}  // namespace

int http_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyScope: return 422;
    case ErrorKind::MissingFile:
    case ErrorKind::MalformedRow:
    case ErrorKind::DanglingReference:
    case ErrorKind::DuplicateId:
    case ErrorKind::InsufficientTaxonomy: return 500;
    default: return 400;
  }
}

ServiceConfig ServiceConfig::from_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::MissingFile, file.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedRow, file.string() + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::MalformedRow, file.string() + ": expected an object");
  ServiceConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "host") c.host = v.get<std::string>();
      else if (key == "port") c.port = v.get<int>();
      else if (key == "data_dir") c.data_dir = v.get<std::string>();
      else if (key == "year_start") c.window.start = v.get<int>();
      else if (key == "year_end") c.window.end = v.get<int>();
      else if (key == "min_pubs") c.min_pubs = v.get<std::int64_t>();
      else if (key == "cors") c.cors = v.get<bool>();
      else throw Error(ErrorKind::MalformedRow, file.string() + ": unknown key '" + key + "'");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedRow, file.string() + ": " + e.what());
  }
  make_window(c.window.start, c.window.end);
  return c;
}

void ServiceConfig::apply_env() {
  if (const char* v = std::getenv("NICHEBENCH_HOST")) host = v;
  if (const char* v = std::getenv("NICHEBENCH_PORT")) port = std::atoi(v);
  if (const char* v = std::getenv("NICHEBENCH_DATA")) data_dir = v;
}

Service::Service(ServiceConfig config)
    : config_(std::move(config)), transport_(std::make_unique<Transport>()) {
  auto& srv = transport_->server;
  // httplib also sets SO_REUSEPORT by default, which lets a second process
  // bind a port that is already serving.
  srv.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });
  srv.set_tcp_nodelay(true);
  auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
    std::multimap<std::string, std::string> query(req.params.begin(), req.params.end());
    const auto r = handle(req.method, req.path, query, req.body);
    res.status = r.status;
    for (const auto& [k, v] : r.headers) {
      if (k != "Content-Type") res.set_header(k, v);
    }
    auto ct = r.headers.find("Content-Type");
    res.set_content(r.body, ct == r.headers.end() ? "application/json" : ct->second.c_str());
  };
  srv.Get(R"(/api/.*)", adapt);
  srv.Post(R"(/api/.*)", adapt);
  srv.Options(R"(/api/.*)", adapt);
  if (config_.cors) {
    srv.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
    });
  }
}

Service::~Service() { stop(); }

void Service::set_dataset(std::shared_ptr<const Dataset> data) {
  std::lock_guard lock(mutex_);
  data_ = std::move(data);
}

bool Service::ready() const { return dataset() != nullptr; }

std::shared_ptr<const Dataset> Service::dataset() const {
  std::lock_guard lock(mutex_);
  return data_;
}

Response Service::handle(const std::string& method, const std::string& path,
                         const std::multimap<std::string, std::string>& query,
                         const std::string& body) const {
  if (method == "OPTIONS") {
    Response r;
    r.status = 204;
    if (config_.cors) {
      r.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
      r.headers["Access-Control-Allow-Headers"] = "Content-Type";
    }
    return r;
  }

  const bool is_get = method == "GET";
  const bool is_post = method == "POST";
  const bool known = path == "/api/health" || path == "/api/taxonomy" ||
                     path == "/api/institutions" || path == "/api/overall" ||
                     path == "/api/rate" || path == "/api/benchmark";
  if (!known) return error_response(404, "NotFound", path);
  const bool wants_post = path == "/api/rate" || path == "/api/benchmark";
  if ((wants_post && !is_post) || (!wants_post && !is_get)) {
    return error_response(405, "MethodNotAllowed", method + " " + path);
  }

  const auto data = dataset();
  if (!data) {
    if (path == "/api/health") return json_response(503, {{"status", "loading"}});
    return error_response(503, "NotReady", "corpus is still loading");
  }
  const auto& corpus = data->corpus();
  const QueryDefaults defaults{config_.window, config_.min_pubs};

  try {
    Response r;
    if (path == "/api/health") {
      r = json_response(200, {{"status", "ok"},
                              {"publications", corpus.publications().size()},
                              {"journals", corpus.journals().size()},
                              {"institutions", corpus.institutions().size()},
                              {"subjects", corpus.taxonomy().size()}});
    } else if (path == "/api/taxonomy") {
      r = json_response(200, taxonomy_json(corpus.taxonomy()));
    } else if (path == "/api/institutions") {
      r = json_response(200, institutions_json(corpus, param(query, "region", kAllRegions)));
    } else if (path == "/api/overall") {
      const auto preset = preset_from_string(param(query, "preset", "equal"));
      std::int64_t min_pubs = config_.min_pubs;
      if (auto it = query.find("min_pubs"); it != query.end()) {
        try {
          std::size_t used = 0;
          min_pubs = std::stoll(it->second, &used);
          if (used != it->second.size() || min_pubs < 0) throw std::invalid_argument("min_pubs");
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidQuery, "min_pubs must be a non-negative integer");
        }
      }
      const auto overall = rate_overall(*data, param(query, "region", kAllRegions), preset,
                                        config_.window, min_pubs);
      r = json_response(200, to_json(overall, corpus));
    } else {
      Json parsed;
      try {
        parsed = Json::parse(body);
      } catch (const Json::exception& e) {
        return error_response(400, "InvalidJson", e.what());
      }
      if (path == "/api/rate") {
        r = json_response(200, to_json(rate_subject(*data, rating_query_from_json(parsed, defaults))));
      } else {
        const auto req = benchmark_request_from_json(parsed, defaults);
        r = json_response(200, to_json(benchmark(*data, req.institutions, req.subject, req.level, req.window)));
      }
    }
    if (is_get) r.headers["ETag"] = "\"" + detail::digest_hex(r.body) + "\"";
    return r;
  } catch (const Error& e) {
    return error_response(http_status(e.kind()), to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

bool Service::bind() {
  auto& srv = transport_->server;
  if (config_.port == 0) {
    bound_port_ = srv.bind_to_any_port(config_.host);
    return bound_port_ > 0;
  }
  if (!srv.bind_to_port(config_.host, config_.port)) return false;
  bound_port_ = config_.port;
  return true;
}

bool Service::listen() { return transport_->server.listen_after_bind(); }

void Service::stop() {
  if (transport_) transport_->server.stop();
}

}  // namespace nichebench
