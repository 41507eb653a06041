#ifndef BRANCHKIT_FORMAT_HPP
#define BRANCHKIT_FORMAT_HPP

#include <charconv>
#include <cstdint>
#include <string>

namespace branchkit {

/// Shortest round-trip decimal form, deterministic across runs.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

inline std::string format_int(std::int64_t v) { return std::to_string(v); }

}  // namespace branchkit

#endif  // BRANCHKIT_FORMAT_HPP
