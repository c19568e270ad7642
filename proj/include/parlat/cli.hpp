// Command-line front end, callable in-process (the binary in tools/ is a
// thin wrapper). Exit contract: 0 = success / all checks pass,
// 1 = verification failure, 2 = usage or parse error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parlat {

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parlat
