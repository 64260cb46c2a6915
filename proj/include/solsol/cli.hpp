#pragma once

#include <string>
#include <vector>

namespace solsol {

struct CliResult {
  int status = 0;          // 0 pass, 1 verification failure, 2 usage/parse error
  std::string out;         // stdout payload (exactly one JSON document in --json mode)
  std::string err;         // diagnostics
};

CliResult run_cli(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace solsol
