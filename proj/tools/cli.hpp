#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace widthlab::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, invariant = 3 };

struct Context {
  std::filesystem::path base_dir;  // relative file arguments resolve here
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Context& ctx = {});

}  // namespace widthlab::cli
