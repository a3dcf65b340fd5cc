#include "breakline/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace breakline::log {

Level level() {
    static const Level cached = [] {
        const char* env = std::getenv("BREAKLINE_LOG");
        if (env == nullptr) return Level::Off;
        if (std::strcmp(env, "debug") == 0) return Level::Debug;
        if (std::strcmp(env, "info") == 0) return Level::Info;
        return Level::Off;
    }();
    return cached;
}

bool enabled(Level l) { return static_cast<int>(level()) >= static_cast<int>(l); }

void info(const std::string& msg) {
    if (enabled(Level::Info)) std::fprintf(stderr, "[breakline] %s\n", msg.c_str());
}

void debug(const std::string& msg) {
    if (enabled(Level::Debug)) std::fprintf(stderr, "[breakline] %s\n", msg.c_str());
}

}  // namespace breakline::log
