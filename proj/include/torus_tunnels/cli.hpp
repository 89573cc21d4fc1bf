#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace torus_tunnels::cli {

/// Entry point of the torus-tunnels tool. `args` includes the program name.
/// Results go to `out`, diagnostics to `err`. Returns 0 when every requested
/// result was printed and 2 on any usage or input error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace torus_tunnels::cli
