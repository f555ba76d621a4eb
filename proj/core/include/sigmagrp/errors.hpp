#pragma once

#include <stdexcept>
#include <string>

namespace sigmagrp {

/// Malformed notation, degree mismatches, violated call preconditions.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap was exceeded; the computation was refused, not approximated.
class cap_error : public std::runtime_error {
public:
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant check. Failure means a bug, never bad input.
inline void internal_check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

}  // namespace sigmagrp
