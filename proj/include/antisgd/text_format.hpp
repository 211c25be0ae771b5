#ifndef ANTISGD_TEXT_FORMAT_HPP
#define ANTISGD_TEXT_FORMAT_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace antisgd {

// Shortest decimal string that parses back to the same double. All file
// formats (tables, stats, CSV traces) go through this so that rebuilding an
// output is byte-identical.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Strict full-token parses: the whole token must be consumed.
inline std::optional<double> parse_double(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  // from_chars rejects a leading '+', which LIBSVM labels commonly carry.
  if (tok.front() == '+') tok.remove_prefix(1);
  double v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    return std::nullopt;
  return v;
}

inline std::optional<std::int64_t> parse_int(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  if (tok.front() == '+') tok.remove_prefix(1);
  std::int64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    return std::nullopt;
  return v;
}

}  // namespace antisgd

#endif
