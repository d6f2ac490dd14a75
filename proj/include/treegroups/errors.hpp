#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tg {

/// Error categories surfaced by the library. The CLI prints `kind_name()`
/// under `--json`, so the names are part of the external interface.
enum class ErrorKind {
  range,
  undecidable,
  parse,
  depth,
  exactness,
  order_cap,
  resource,
  size_cap,
  level_mismatch,
  length_mismatch,
  degenerate_truncation,
  malformed_triple,
  inconsistent_triple,
  not_in_subgroup,
  not_found,
};

std::string_view kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Syntax errors carry the 0-based byte offset of the offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::parse, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace tg
