#ifndef ORDMATCH_LOG_HPP
#define ORDMATCH_LOG_HPP

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace ordmatch {

// Diagnostics on stderr, gated by ORDMATCH_LOG=error|info|debug.
// Default: error.
enum class LogLevel { error = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("ORDMATCH_LOG");
    if (env == nullptr) return LogLevel::error;
    if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
    if (std::strcmp(env, "info") == 0) return LogLevel::info;
    return LogLevel::error;
  }();
  return level;
}

template <typename... Args>
void log_at(LogLevel lvl, const char* tag, const char* fmt, Args... args) {
  if (static_cast<int>(lvl) > static_cast<int>(log_level())) return;
  std::fprintf(stderr, "[%s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fputc('\n', stderr);
}

template <typename... Args>
void log_error(const char* fmt, Args... args) {
  log_at(LogLevel::error, "error", fmt, args...);
}
template <typename... Args>
void log_info(const char* fmt, Args... args) {
  log_at(LogLevel::info, "info", fmt, args...);
}
template <typename... Args>
void log_debug(const char* fmt, Args... args) {
  log_at(LogLevel::debug, "debug", fmt, args...);
}

}  // namespace ordmatch

#endif
