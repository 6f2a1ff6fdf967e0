// Copyright 2026 The qdiff Authors
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

#include "qdiff_cli/manifest.hpp"

#include <fstream>
#include <utility>

#include "json.hpp"
#include "qdiff/error.hpp"
#include "qdiff/parallel.hpp"

namespace qdiff::cli {

Manifest::Manifest(std::filesystem::path dir, std::string command, std::string config_json)
    : dir_(std::move(dir)), command_(std::move(command)), config_json_(std::move(config_json)) {
  write("running", "", "");
}

void Manifest::add_output(const std::filesystem::path& file) {
  outputs_.push_back(file.lexically_relative(dir_).generic_string());
}

void Manifest::add_result(const std::string& key, double value) { results_.emplace_back(key, value); }

void Manifest::finish_ok() { write("ok", "", ""); }

void Manifest::finish_failed(const std::string& code, const std::string& message) {
  write("failed", code, message);
}

void Manifest::write(const std::string& status, const std::string& error_code,
                     const std::string& error_message) const {
  nlohmann::ordered_json j;
  j["tool"] = "qdiff";
  j["version"] = QDIFF_VERSION;
  j["command"] = command_;
  j["config"] = nlohmann::ordered_json::parse(config_json_);
  j["threads"] = worker_count();
  j["status"] = status;
  if (!error_code.empty()) j["error"] = {{"code", error_code}, {"message", error_message}};
  j["outputs"] = outputs_;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& [k, v] : results_) results[k] = v;
  j["results"] = results;

  std::ofstream out(dir_ / "manifest.json");
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + (dir_ / "manifest.json").string());
  out << j.dump(2) << '\n';
}

}  // namespace qdiff::cli
