#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amalg {

enum class Errc {
  syntax,             // malformed element text
  index_out_of_range, // H_n index beyond the configured primes
  precondition,       // caller violated an operation's precondition
  not_asserted,       // the requested claim is outside the range where it is asserted
  size_guard,         // enumeration would exceed the configured point budget
  invalid_config,
};

inline const char* to_string(Errc c)
{
  switch (c) {
  case Errc::syntax: return "syntax";
  case Errc::index_out_of_range: return "index_out_of_range";
  case Errc::precondition: return "precondition";
  case Errc::not_asserted: return "not_asserted";
  case Errc::size_guard: return "size_guard";
  case Errc::invalid_config: return "invalid_config";
  }
  return "unknown";
}

class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Error(Errc code, const std::string& what, std::size_t position)
  : std::runtime_error(what + " at position " + std::to_string(position)), code_(code),
    position_(position)
  {}

  Errc code() const noexcept { return code_; }

  /// Offset into the parsed text for syntax errors, npos otherwise.
  std::size_t position() const noexcept { return position_; }

private:
  Errc code_;
  std::size_t position_ = std::string::npos;
};

} // namespace amalg
