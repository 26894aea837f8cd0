#pragma once

#include <stdexcept>
#include <string>

namespace gaussalg {

/// Malformed input: bad files, violated preconditions, dimension mismatches.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured budget. Never silently truncated.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
  throw internal_error(std::string("internal check failed: ") + expr + " at " + file + ":" +
                       std::to_string(line));
}
} // namespace detail

} // namespace gaussalg

// Internal invariant check. Stays enabled in release builds; everything this
// library computes is cheap enough to re-verify.
#define GAUSSALG_CHECK(expr) \
  ((expr) ? (void)0 : ::gaussalg::detail::check_failed(#expr, __FILE__, __LINE__))
