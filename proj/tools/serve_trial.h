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

#ifndef VIZENTROPY_TOOLS_SERVE_TRIAL_H_
#define VIZENTROPY_TOOLS_SERVE_TRIAL_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "vizentropy/trials.h"

namespace httplib {
class Server;
}

namespace vizentropy::cli {

// Local lab server for the browser trial runner. No authentication: bind it
// to loopback or a closed lab network only.
//
//   GET  /manifest.json  the manifest being run
//   GET  /<path>         static files from `static_dir` (UI and assets)
//   POST /results        TrialResults JSON; validated, then written verbatim
//                        into `results_dir`. 201 on success, 400 or 422 with
//                        {"error": ...} otherwise.
struct TrialServerOptions {
  std::filesystem::path static_dir;
  std::filesystem::path results_dir;
  std::optional<TrialManifest> manifest;
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
};

class TrialServer {
 public:
  explicit TrialServer(TrialServerOptions options);
  ~TrialServer();
  TrialServer(const TrialServer&) = delete;
  TrialServer& operator=(const TrialServer&) = delete;

  // Binds the socket and returns the port actually used.
  int Bind();
  // Serves until Stop(). Call Bind() first.
  void Listen();
  void Stop();

 private:
  TrialServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

// Where a posted result is stored: <results_dir>/<participant>_<stamp>.json,
// with a numeric suffix instead of overwriting an existing file.
std::filesystem::path ResultsPath(const std::filesystem::path& results_dir,
                                  const TrialResults& results);

}  // namespace vizentropy::cli

#endif  // VIZENTROPY_TOOLS_SERVE_TRIAL_H_
