#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treegroups/word.hpp"

namespace tg {

/// Truncation of the level-parity vector p(g): bit n is the number of active
/// vertices on level n modulo 2, level 0 (the root) first.
class ParityVector {
public:
  ParityVector() = default;
  explicit ParityVector(std::vector<std::uint8_t> bits);
  static ParityVector parse(std::string_view bits);
  static ParityVector zero(std::size_t length) { return ParityVector(std::vector<std::uint8_t>(length)); }

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_.at(i); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  bool is_zero() const noexcept;

  /// Coordinatewise XOR; lengths must agree (ErrorKind::length_mismatch).
  ParityVector operator^(const ParityVector& rhs) const;
  ParityVector& operator^=(const ParityVector& rhs);

  std::string to_string() const;

  auto operator<=>(const ParityVector&) const = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Bit-valued forms of the assignment rows: 1 where the row entry is `a`.
struct BitTables {
  static constexpr std::array<std::uint8_t, 3> beta = {1, 1, 0};
  static constexpr std::array<std::uint8_t, 3> delta = {0, 1, 1};
};

enum class LGenerator { ab, d };

/// Closed forms p(ab) = (1, β(ω₁), β(ω₂), …) and p(d) = (0, δ(ω₁), δ(ω₂), …),
/// truncated to `depth` coordinates.
ParityVector parity_formula(LGenerator gen, const OmegaSeq& omega, std::size_t depth);

/// Counts active vertices on levels 0..depth−1 of the portrait.
ParityVector parity_by_count(const Word& w, std::size_t depth);

/// XOR of per-letter parities.
ParityVector parity_hom(const Word& w, std::size_t depth);

/// The three nonzero elements {p(ab), p(d), p(ab)+p(d)}, sorted.
struct InvariantTriple {
  std::array<ParityVector, 3> vectors;

  /// Sorts, checks equal lengths, distinct nonzero entries, XOR to zero.
  /// Throws ErrorKind::malformed_triple otherwise.
  static InvariantTriple from(std::array<ParityVector, 3> v);

  std::string to_string() const;
  bool operator==(const InvariantTriple&) const = default;
};

/// Throws ErrorKind::degenerate_truncation when p(d) truncates to zero, and
/// ErrorKind::range when depth < 2.
InvariantTriple invariant_triple(const OmegaSeq& omega, std::size_t depth);

/// The nonzero elements of the truncated image p(L_ω), sorted. Has three
/// elements when the triple is defined, and one (p(ab)) when p(d) truncates
/// to zero.
std::vector<ParityVector> parity_image(const OmegaSeq& omega, std::size_t depth);

/// Both candidate prefixes ω₁…ω_{depth−1}, lexicographically ordered; they
/// differ by the symbol swap 1 ↔ 2.
std::pair<std::string, std::string> reconstruct_omega(const InvariantTriple& t);

/// Same, from the nonzero image elements (three, or the single vector p(ab)
/// when p(d) vanishes).
std::pair<std::string, std::string> reconstruct_from_image(const std::vector<ParityVector>& image);

struct Verdict {
  bool equivalent = false;
  std::size_t depth = 0;
  /// "EQUIVALENT (consistent up to depth d)" or "DISTINCT".
  std::string to_string() const;
};

/// Compares the truncated images p(L_ω) and p(L_η). DISTINCT is conclusive;
/// EQUIVALENT only says the truncations agree.
Verdict distinguish(const OmegaSeq& omega, const OmegaSeq& eta, std::size_t depth);

}  // namespace tg
