#include "treegroups/errors.hpp"

namespace tg {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::range: return "range";
    case ErrorKind::undecidable: return "undecidable";
    case ErrorKind::parse: return "parse";
    case ErrorKind::depth: return "depth";
    case ErrorKind::exactness: return "exactness";
    case ErrorKind::order_cap: return "order_cap";
    case ErrorKind::resource: return "resource";
    case ErrorKind::size_cap: return "size_cap";
    case ErrorKind::level_mismatch: return "level_mismatch";
    case ErrorKind::length_mismatch: return "length_mismatch";
    case ErrorKind::degenerate_truncation: return "degenerate_truncation";
    case ErrorKind::malformed_triple: return "malformed_triple";
    case ErrorKind::inconsistent_triple: return "inconsistent_triple";
    case ErrorKind::not_in_subgroup: return "not_in_subgroup";
    case ErrorKind::not_found: return "not_found";
  }
  return "unknown";
}

}  // namespace tg
