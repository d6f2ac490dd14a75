#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

using Symbol = std::uint8_t;  // one of 0, 1, 2

/// A permutation of {0,1,2}, stored as the image of each symbol.
class PermThree {
public:
  constexpr PermThree() noexcept : image_{0, 1, 2} {}
  explicit PermThree(std::array<Symbol, 3> image);

  static PermThree identity() noexcept { return {}; }
  /// The transposition swapping 1 and 2.
  static PermThree swap12() noexcept;

  Symbol operator()(Symbol s) const noexcept { return image_[s]; }

  /// (this ∘ inner)(s) = this(inner(s)).
  PermThree after(const PermThree& inner) const noexcept;

  const std::array<Symbol, 3>& image() const noexcept { return image_; }
  bool operator==(const PermThree&) const = default;

private:
  std::array<Symbol, 3> image_;
};

/// An eventually periodic sequence ω = ω₁ω₂… over {0,1,2}: a finite prefix
/// followed by a repeating period. An empty period means only the prefix is
/// known; reading past it is a depth error rather than silent padding.
///
/// Values are kept in canonical form: the period is primitive and the prefix
/// is as short as possible (a prefix tail equal to the period's tail is
/// folded into the period). Two sequences are equal iff their canonical forms
/// are equal.
///
/// Public positional accessors use 1-based indexing to match ω₁ω₂…; `at0`
/// is the 0-based variant used by the recursion code.
class OmegaSeq {
public:
  OmegaSeq() = default;
  OmegaSeq(std::vector<Symbol> prefix, std::vector<Symbol> period);

  /// Parses `PREFIX(PERIOD)`, e.g. `(012)`, `01(2)`, `012`.
  static OmegaSeq parse(std::string_view text);

  const std::vector<Symbol>& prefix() const noexcept { return prefix_; }
  const std::vector<Symbol>& period() const noexcept { return period_; }
  bool is_periodic() const noexcept { return !period_.empty(); }

  /// Number of symbols available, or SIZE_MAX for periodic sequences.
  std::size_t available() const noexcept;

  /// ω_i for 1-based i. Throws ErrorKind::depth past a finite prefix.
  Symbol symbol(std::size_t i) const;
  Symbol at0(std::size_t i) const;

  /// σᵏω. Throws ErrorKind::range if k exceeds a finite prefix.
  OmegaSeq shift(std::size_t k) const;

  /// True iff every symbol recurs infinitely often (ω ∈ Ω_∞).
  /// Throws ErrorKind::undecidable when the period is empty.
  bool is_omega_infinity() const;

  OmegaSeq apply_perm(const PermThree& pi) const;

  /// Reduces a shift count to a representative with the same suffix:
  /// positions past the prefix are taken modulo the period length.
  std::size_t canonical_phase(std::size_t phase) const noexcept;

  /// First n symbols as a string of digits.
  std::string prefix_string(std::size_t n) const;

  std::string to_string() const;

  bool operator==(const OmegaSeq&) const = default;

private:
  void canonicalize();

  std::vector<Symbol> prefix_;
  std::vector<Symbol> period_;
};

/// Number of orbits of {0,1,2}^k under the coordinatewise action of ⟨(12)⟩.
/// Requires 1 ≤ k ≤ 12.
std::uint64_t count_pi_classes(int k);

}  // namespace tg
