#ifndef ANTISGD_LOG_HPP
#define ANTISGD_LOG_HPP

#include <cstdlib>
#include <iostream>
#include <string>

// Verbosity is controlled by the ANTISGD_LOG environment variable:
// off, error, warn (default), info, debug.
namespace antisgd::log {

enum class Level : int { Off = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

inline Level level_from_env() {
  const char* raw = std::getenv("ANTISGD_LOG");
  if (!raw) return Level::Warn;
  std::string v(raw);
  if (v == "off") return Level::Off;
  if (v == "error") return Level::Error;
  if (v == "warn") return Level::Warn;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Warn;
}

inline Level level() {
  static const Level l = level_from_env();
  return l;
}

inline void emit(Level at, const char* tag, const std::string& msg) {
  if (static_cast<int>(at) <= static_cast<int>(level()))
    std::cerr << "[antisgd " << tag << "] " << msg << '\n';
}

inline void error(const std::string& msg) { emit(Level::Error, "error", msg); }
inline void warn(const std::string& msg) { emit(Level::Warn, "warn", msg); }
inline void info(const std::string& msg) { emit(Level::Info, "info", msg); }
inline void debug(const std::string& msg) { emit(Level::Debug, "debug", msg); }

}  // namespace antisgd::log

#endif
