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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qdiff::cli {

/// manifest.json for one run. Written once before computing (status
/// "running") and rewritten when the run ends.
class Manifest {
 public:
  Manifest(std::filesystem::path dir, std::string command, std::string config_json);

  void add_output(const std::filesystem::path& file);
  void add_result(const std::string& key, double value);
  void finish_ok();
  void finish_failed(const std::string& code, const std::string& message);

 private:
  void write(const std::string& status, const std::string& error_code, const std::string& error_message) const;

  std::filesystem::path dir_;
  std::string command_;
  std::string config_json_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, double>> results_;
};

}  // namespace qdiff::cli
