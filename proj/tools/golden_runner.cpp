/*
 * Copyright 2026 The jetcert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Re-runs every golden document from its input echo and compares the result.
//
//   golden_runner <dir>            check, exit 1 on any difference
//   golden_runner <dir> --update   rewrite the files from the current build

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jetcert/cli/run.hpp"
#include "jetcert/cli/serialize.hpp"
#include "jetcert/error.hpp"

namespace fs = std::filesystem;
using namespace jetcert::cli;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json without_version(std::string_view text) {
  json j = json::parse(text);
  j.erase("tool_version");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"golden certificate corpus runner"};
  std::string dir;
  bool update = false;
  app.add_option("dir", dir, "directory of golden documents")->required()->check(CLI::ExistingDirectory);
  app.add_flag("--update", update, "rewrite the documents instead of checking them");
  CLI11_PARSE(app, argc, argv);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no golden documents in " << dir << "\n";
    return 1;
  }

  int failures = 0;
  for (const fs::path& file : files) {
    const std::string name = file.filename().string();
    try {
      const std::string stored = slurp(file);
      const CertificateDocument doc = parse_document(stored);
      if (doc.input.resolved_format() != OutputFormat::json || doc.input.output_path) {
        throw jetcert::Error(jetcert::ErrorKind::parse,
                             "golden input must produce json on standard output");
      }
      const Execution ex = execute(doc.input);
      if (update) {
        std::ofstream(file, std::ios::binary) << ex.output;
        std::cout << "updated " << name << "\n";
        continue;
      }
      const bool same = without_version(stored) == without_version(ex.output);
      std::cout << (same ? "ok   " : "DIFF ") << name << " (exit " << ex.exit_code << ")\n";
      if (!same) ++failures;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
      ++failures;
    }
  }
  std::cout << files.size() - failures << "/" << files.size() << " golden documents match\n";
  return failures == 0 ? 0 : 1;
}
