#pragma once

#include <string>

namespace breakline::log {

/// Verbosity taken from the BREAKLINE_LOG environment variable
/// (off | info | debug). Diagnostics go to standard error only, so results
/// on standard output never mix with them.
enum class Level { Off = 0, Info = 1, Debug = 2 };

Level level();
bool enabled(Level l);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace breakline::log
