#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "treegroups/word.hpp"

namespace tg {

/// Generators of L_ω: A = ab, A⁻¹ = ba, D = d.
enum class LGen : std::uint8_t { A, Ainv, D };

/// A freely reduced word over {A, A⁻¹, D} (D is an involution).
class LWord {
public:
  LWord() = default;
  explicit LWord(std::vector<LGen> gens);

  /// Tokens `A`, `A^-1` (or `I`), `D`, separated by optional whitespace.
  static LWord parse(std::string_view text);

  const std::vector<LGen>& gens() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }
  std::size_t size() const noexcept { return gens_.size(); }

  LWord operator*(const LWord& rhs) const;
  LWord inverse() const;
  /// Image under conjugation by `a`: A ↔ A⁻¹, D ↦ A D A⁻¹.
  LWord conj_a() const;

  /// Space separated, e.g. "A D A^-1"; the identity prints as "".
  std::string to_string() const;

  bool operator==(const LWord&) const = default;

private:
  std::vector<LGen> gens_;
};

/// Letters over {a,b,c,d} for an L-word, reduced, read over σ^phase ω.
Word flatten(const LWord& w, const OmegaSeq& omega, std::size_t phase = 0);

/// Rewrites an element of L_ω into the generators {A, A⁻¹, D}.
/// Throws ErrorKind::not_in_subgroup when in_L(w) is false.
LWord to_lgen(const Word& w);

/// One displayed row "element ↦ (section at 0, section at 1)" of the level-one
/// tables, with everything spelled in plain letters (primes are implicit: the
/// sections live one level down).
struct CaseRow {
  std::string element;
  std::string section0;
  std::string section1;
};

/// The three substitution tables used for section realization, indexed by
/// the first sequence symbol.
std::vector<CaseRow> lemma1_case_tables(Symbol first);

/// The four rows for the squares chain when the first symbol is 0, with
/// r = (ab)² and s = (ac)²: r, r^a, (rs⁻¹)^{aba}, (rs⁻¹)^{ab}, sections as
/// displayed in the source. The last two display (ad, d) and (d, ad); the
/// level-1 parity of a product of squares is 0, so the true sections are
/// (d, d) in both rows. The realizers only rely on the d coordinate.
std::vector<CaseRow> squares_case_rows();

/// h ∈ St_L(u) with h_u = g, built by per-letter substitution: the level-one
/// table realizes each generator at the last vertex bit, and the recursion
/// pushes the result up one level at a time. Only the vertex u is guaranteed
/// to be fixed.
Word lemma1_realizer(const OmegaSeq& omega, const VertexPath& u, const LWord& g);

/// h ∈ L_ω fixing level |u| pointwise with h_u = g (exact).
///
/// Returns the substitution witness when it already fixes the level. Otherwise
/// it falls back to a search over the Schreier generators of the level
/// stabilizer: their sections at u generate the whole section group at u,
/// so g is sought as a short product of those sections. Throws
/// ErrorKind::not_found if the bounded search fails.
Word section_realizer(const OmegaSeq& omega, const VertexPath& u, const LWord& g);

/// A product of squares certificate for the chain L_{0,ω} = L_ω,
/// L_{n,ω} = ⟨squares of L_{n−1,ω}⟩. At level 0 the certificate is a base
/// L-word; at level n ≥ 1 it is an ordered list of level-(n−1) certificates,
/// each one squared.
struct SquaresCert {
  unsigned level = 0;
  LWord base;
  std::vector<SquaresCert> factors;

  /// Level 0: the base word as a string. Level n: {"sq": [factor, ...]}.
  nlohmann::json to_json() const;
};

Word flatten(const SquaresCert& cert, const OmegaSeq& omega, std::size_t phase = 0);

/// Level-one table for the squares chain: for a generator of L_{σω}, a list
/// t₁, …, t_m of L_ω-words with (t₁²⋯t_m²) ∈ St(1) having section the
/// generator at vertex `child`. Empty optional when no entry is known.
std::optional<std::vector<LWord>> squares_entry(Symbol first, std::uint8_t child, LGen gen);

/// h ∈ L_{|u|,ω} with h_u = g, as a certificate. The table recursion is
/// tried first; when it gets stuck, a search in the level-(|u|+3) quotient
/// proposes candidates that are then checked exactly. Throws
/// ErrorKind::not_found when neither succeeds.
SquaresCert square_realizer(const OmegaSeq& omega, const VertexPath& u, const LWord& g);

/// True when no element of L_{|u|,ω} fixing level |u| can have section g at
/// u, certified by the finite quotient at level |u| + 3.
bool squares_obstructed(const OmegaSeq& omega, const VertexPath& u, const LWord& g);

/// w ∈ L_ω with w(u) = v. Throws ErrorKind::length_mismatch if |u| ≠ |v|.
Word transitive_mapper(const OmegaSeq& omega, const VertexPath& u, const VertexPath& v);

}  // namespace tg
