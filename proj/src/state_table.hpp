#pragma once

// Interned section states shared by the closure-based decision procedures.

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "treegroups/word.hpp"

namespace tg::detail {

struct RawState {
  std::vector<Letter> letters;
  std::size_t phase = 0;
};

/// Appends `x` to a reduced stack, keeping it reduced.
void push_reduced(std::vector<Letter>& stack, Letter x);

/// Sections of a reduced letter list at vertices 0 and 1, given the sequence
/// symbol read at the current phase. Outputs are reduced.
void raw_sections(const std::vector<Letter>& letters, Symbol s, std::vector<Letter>& out0,
                  std::vector<Letter>& out1);

inline bool raw_active(const std::vector<Letter>& letters) noexcept {
  std::size_t n = 0;
  for (Letter x : letters) n += x == Letter::a;
  return (n & 1U) != 0;
}

class StateTable {
public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  StateTable(const OmegaSeq& omega, std::size_t cap) : omega_(omega), cap_(cap) {}

  std::uint32_t intern(std::vector<Letter> letters, std::size_t phase);
  std::array<std::uint32_t, 2> expand(std::uint32_t id);

  bool active(std::uint32_t id) const { return active_[id] != 0; }
  const RawState& state(std::uint32_t id) const { return states_[id]; }
  std::size_t size() const noexcept { return states_.size(); }

private:
  const OmegaSeq& omega_;
  std::size_t cap_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<RawState> states_;
  std::vector<std::uint8_t> active_;
  std::vector<std::array<std::uint32_t, 2>> children_;
};

}  // namespace tg::detail
