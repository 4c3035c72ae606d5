#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>

#include "gmk/error.hpp"

namespace gmk {

// Size caps for the exhaustive routines. GMK_MAX_N, when set, replaces all of
// them with a single value.
struct limits {
  std::size_t max_code_chords = 8;
  std::size_t max_oracle_chords = 10;
  std::size_t max_meander_points = 12;

  static std::optional<std::size_t> env_override() {
    const char* raw = std::getenv("GMK_MAX_N");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') return std::nullopt;
    return static_cast<std::size_t>(v);
  }

  static limits current() {
    limits l;
    if (auto v = env_override()) {
      l.max_code_chords = *v;
      l.max_oracle_chords = *v;
      l.max_meander_points = *v;
    }
    return l;
  }
};

inline void require_within(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) {
    throw error(errc::limit_exceeded, std::string(what) + " " + std::to_string(value) +
                                          " exceeds the configured maximum " + std::to_string(cap) +
                                          " (set GMK_MAX_N to raise it)");
  }
}

}  // namespace gmk
