#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "treegroups/omega.hpp"

namespace tg {

/// Generator letters. b, c, d use the Klein four-group encoding so that the
/// product of two of them is their XOR (b·c = d, b·d = c, c·d = b, x·x = e).
enum class Letter : std::uint8_t { b = 1, c = 2, d = 3, a = 4 };

inline bool is_klein(Letter x) noexcept { return x != Letter::a; }
char letter_char(Letter x) noexcept;

/// Assignment rows β, ζ, δ: whether the section of b, c, d at vertex 0 is `a`
/// (true) or `e` (false), given the current sequence symbol.
///   β = (a, a, e), ζ = (a, e, a), δ = (e, a, a)   for symbols 0, 1, 2.
bool row_is_a(Letter x, Symbol s) noexcept;

/// Frees-reduced word with the Klein merge applied: the fixed point of
/// xx → ε and bc → d (and permutations). Nonempty results alternate between
/// `a` and a letter of {b, c, d}.
std::vector<Letter> reduce_letters(std::span<const Letter> letters);

/// Parses plain letters `a b c d e`; `e` is dropped. Whitespace is ignored.
std::vector<Letter> parse_letters(std::string_view text);

/// A vertex of the binary tree: a bit string, root = empty.
class VertexPath {
public:
  VertexPath() = default;
  explicit VertexPath(std::vector<std::uint8_t> bits);
  static VertexPath parse(std::string_view text);
  /// Vertex with index `index` in lexicographic order on level `level`.
  static VertexPath from_index(std::uint32_t index, unsigned level);

  std::size_t level() const noexcept { return bits_.size(); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  std::uint32_t index() const noexcept;
  std::string to_string() const;

  VertexPath prefix(std::size_t n) const;
  VertexPath suffix_from(std::size_t n) const;
  VertexPath child(std::uint8_t bit) const;

  auto operator<=>(const VertexPath&) const = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// A tree automorphism given by a reduced word over {a, b, c, d} whose
/// letters b, c, d are read as b_{σ^phase ω}, c_{σ^phase ω}, d_{σ^phase ω}.
///
/// Products act as functions composed right to left: (gh)(v) = g(h(v)).
class Word {
public:
  Word(std::vector<Letter> letters, OmegaSeq omega, std::size_t phase = 0);
  Word(std::string_view letters, OmegaSeq omega, std::size_t phase = 0);
  static Word identity(OmegaSeq omega, std::size_t phase = 0);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t phase() const noexcept { return phase_; }
  const OmegaSeq& omega() const noexcept { return *omega_; }
  const std::shared_ptr<const OmegaSeq>& omega_ptr() const noexcept { return omega_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Letters as a string; the identity prints as "".
  std::string to_string() const;

  /// Throws ErrorKind::range unless both words share sequence and phase.
  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(long long n) const;
  /// g^h = h⁻¹ g h.
  Word conj(const Word& h) const;

  /// Same letters, same group element family; only structural equality.
  bool same_letters(const Word& other) const noexcept {
    return letters_ == other.letters_ && phase_ == other.phase_;
  }

private:
  Word(std::vector<Letter> reduced, std::shared_ptr<const OmegaSeq> omega, std::size_t phase,
       bool already_reduced);

  std::vector<Letter> letters_;
  std::shared_ptr<const OmegaSeq> omega_;
  std::size_t phase_ = 0;

  friend std::pair<Word, Word> sections(const Word& w);
};

/// Finite portrait: the root-activity bit of every vertex on levels 0..depth.
/// A depth-0 portrait is a single leaf carrying the root activity.
class Portrait {
public:
  explicit Portrait(std::vector<std::vector<std::uint8_t>> levels);

  std::size_t depth() const noexcept { return levels_.size() - 1; }
  bool active() const noexcept { return levels_[0][0] != 0; }
  bool is_leaf() const noexcept { return depth() == 0; }
  Portrait child(std::uint8_t bit) const;

  /// Activity bits of level j in lexicographic vertex order.
  const std::vector<std::uint8_t>& level(std::size_t j) const { return levels_.at(j); }
  std::size_t active_count(std::size_t j) const;
  bool all_inactive() const;

  /// {"active":0|1,"children":[left,right]|null}
  nlohmann::json to_json() const;

  bool operator==(const Portrait&) const = default;

private:
  std::vector<std::vector<std::uint8_t>> levels_;
};

bool root_active(const Word& w) noexcept;

/// (w_0, w_1), both at phase + 1.
std::pair<Word, Word> sections(const Word& w);
Word section_at(const Word& w, const VertexPath& u);

VertexPath act(const Word& w, const VertexPath& v);

Portrait portrait(const Word& w, std::size_t depth);

struct ClosureStats {
  bool trivial = true;
  std::size_t states = 0;
  /// Largest BFS distance from the root state at which a new state appears.
  std::size_t depth = 0;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Exact word problem by state closure. Requires a periodic sequence.
bool is_trivial(const Word& w, std::size_t cap = kDefaultClosureCap);
ClosureStats closure_stats(const Word& w, std::size_t cap = kDefaultClosureCap);

/// True iff portrait(w, n) has no active vertex.
bool is_trivial_to_depth(const Word& w, std::size_t n);

/// Exact equality of the automorphisms, possibly over different sequences.
bool equal_auto(const Word& lhs, const Word& rhs, std::size_t cap = kDefaultClosureCap);

inline constexpr unsigned kDefaultOrderCapExp = 14;

/// Least 2^k with w^(2^k) = e, found by repeated squaring.
/// Throws ErrorKind::order_cap when k would exceed cap_exp.
std::uint64_t order(const Word& w, unsigned cap_exp = kDefaultOrderCapExp);

/// d(g, h) = 2^{-m}, m the last level on which g and h act identically.
struct Distance {
  bool zero = false;
  unsigned exponent = 0;
  /// Set when a depth bound was exhausted without a difference:
  /// the true distance is at most 2^{-exponent}.
  bool upper_bound = false;

  std::string to_string() const;
  bool operator==(const Distance&) const = default;
};

/// Exact when both sequences are periodic and no bound is given; otherwise
/// differences are searched for on levels ≤ depth_bound only.
Distance metric_distance(const Word& lhs, const Word& rhs,
                         std::optional<std::size_t> depth_bound = std::nullopt);

/// Membership in L_ω = ⟨ab, d⟩ via the index-2 parity (#a + #b + #c) mod 2.
bool in_L(const Word& w) noexcept;

}  // namespace tg
