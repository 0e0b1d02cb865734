// Copyright 2026 The edur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  edur::cli::RunConfig config;
  try {
    config = edur::cli::parse_args(args);
  } catch (const edur::cli::HelpRequested& h) {
    std::cout << h.what();
    return edur::cli::kExitOk;
  } catch (const edur::cli::UsageError& e) {
    std::cerr << "edur: " << e.what() << "\nRun with --help for usage.\n";
    return edur::cli::kExitUsage;
  }
  return edur::cli::run(config, std::cout, std::cerr);
}
