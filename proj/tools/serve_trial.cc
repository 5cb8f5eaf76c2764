// Copyright 2026 The Vizentropy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "serve_trial.h"

#include <fstream>
#include <mutex>
#include <utility>

#include "httplib.h"
#include "vizentropy/error.h"
#include "vizentropy/json_io.h"

namespace vizentropy::cli {
namespace {

namespace fs = std::filesystem;

std::mutex write_mutex;  // serializes name selection and the write

std::string SafeName(const std::string& id) {
  std::string name;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_';
    name += ok ? c : '_';
  }
  return name.empty() ? "anonymous" : name;
}

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

fs::path ResultsPath(const fs::path& results_dir, const TrialResults& results) {
  std::string stamp = FormatRfc3339(results.completed_at);
  for (char& c : stamp) {
    if (c == ':') c = '-';
  }
  const std::string stem = SafeName(results.participant_id) + "_" + stamp;
  fs::path path = results_dir / (stem + ".json");
  for (int n = 1; fs::exists(path); ++n) {
    path = results_dir / (stem + "_" + std::to_string(n) + ".json");
  }
  return path;
}

TrialServer::TrialServer(TrialServerOptions options)
    : options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  if (!options_.static_dir.empty() &&
      !server_->set_mount_point("/", options_.static_dir.string())) {
    throw Error(ErrorCode::kInvalidArgument,
                "static directory '" + options_.static_dir.string() +
                    "' does not exist");
  }
  fs::create_directories(options_.results_dir);

  server_->Get("/manifest.json", [this](const httplib::Request&,
                                        httplib::Response& res) {
    if (!options_.manifest) {
      Reply(res, 404, {{"error", "no manifest configured"}});
      return;
    }
    res.set_content(ToJson(*options_.manifest).dump(2), "application/json");
  });

  server_->Post("/results", [this](const httplib::Request& req,
                                   httplib::Response& res) {
    TrialResults results;
    try {
      results = ResultsFromJson(ParseJson(req.body));
    } catch (const Error& e) {
      Reply(res, 400, {{"error", e.what()}});
      return;
    }
    if (options_.manifest && results.manifest != *options_.manifest) {
      Reply(res, 422,
            {{"error", "results were recorded against a different manifest"}});
      return;
    }
    std::lock_guard<std::mutex> lock(write_mutex);
    const fs::path path = ResultsPath(options_.results_dir, results);
    std::ofstream file(path, std::ios::binary);
    file << req.body;
    file.close();
    if (!file) {
      Reply(res, 500, {{"error", "could not write " + path.string()}});
      return;
    }
    Reply(res, 201, {{"path", path.filename().string()}});
  });
}

TrialServer::~TrialServer() = default;

int TrialServer::Bind() {
  int port = options_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(options_.host);
  } else if (!server_->bind_to_port(options_.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot bind " + options_.host + ":" +
                    std::to_string(options_.port));
  }
  return port;
}

void TrialServer::Listen() { server_->listen_after_bind(); }

void TrialServer::Stop() { server_->stop(); }

}  // namespace vizentropy::cli
