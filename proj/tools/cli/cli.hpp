#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace echlat::cli {

struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> operations;  // library operations reachable from the command
  std::vector<std::string> example;     // arguments of a quick invocation that exits 0
};

const std::vector<CommandInfo>& command_table();

// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace echlat::cli
