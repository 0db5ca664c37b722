#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "nichebench/error.hpp"
#include "nichebench/json_io.hpp"

namespace nichebench {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir;
  YearWindow window;                      // corpus window and request default
  std::int64_t min_pubs = kDefaultMinPubs;
  bool cors = true;

  /// Reads a flat JSON object with any of the keys host, port, data_dir,
  /// year_start, year_end, min_pubs, cors. Unknown keys are rejected.
  static ServiceConfig from_file(const std::filesystem::path& file);

  /// NICHEBENCH_HOST, NICHEBENCH_PORT and NICHEBENCH_DATA override the
  /// corresponding fields when set.
  void apply_env();
};

struct Response {
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Read-only HTTP facade over the engines. Requests are answered with 503
/// until a dataset is installed; afterwards every handler is a pure function
/// of (dataset, request).
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  const ServiceConfig& config() const { return config_; }

  void set_dataset(std::shared_ptr<const Dataset> data);
  bool ready() const;

  /// Transport-independent dispatch. `query` holds URL parameters.
  Response handle(const std::string& method, const std::string& path,
                  const std::multimap<std::string, std::string>& query,
                  const std::string& body) const;

  /// Binds the listening socket; port 0 picks a free port. Returns false if
  /// the address is unavailable.
  bool bind();
  int bound_port() const { return bound_port_; }

  /// Serves until stop() is called. Requires a successful bind().
  bool listen();
  void stop();

 private:
  std::shared_ptr<const Dataset> dataset() const;

  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const Dataset> data_;
  int bound_port_ = -1;

  struct Transport;
  std::unique_ptr<Transport> transport_;
};

/// HTTP status used for an engine error kind.
int http_status(ErrorKind kind);

}  // namespace nichebench
