#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "treegroups/construct.hpp"
#include "treegroups/perm_group.hpp"
#include "treegroups/word.hpp"

namespace tg {

inline constexpr unsigned kMaxQuotientLevel = 14;

/// The action of a set of words on the 2ⁿ vertices of level n, points in
/// lexicographic order (vertex index = its bit string read as a binary number).
class LevelQuotient {
public:
  LevelQuotient(unsigned level, std::vector<std::string> labels, std::vector<Perm> perms);

  unsigned level() const noexcept { return level_; }
  std::size_t points() const noexcept { return std::size_t{1} << level_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Perm>& perms() const noexcept { return perms_; }

  /// Order of the generated permutation group, computed once.
  const boost::multiprecision::cpp_int& order() const;
  const StabilizerChain& chain() const;

  /// {"level": n, "points": [...], "generators": {label: "cycles"}}.
  nlohmann::json to_json() const;

private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
    boost::multiprecision::cpp_int order;
  };

  unsigned level_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
  std::shared_ptr<Cache> cache_;
};

/// Cycle notation over vertex strings, e.g. "(00 01)(10 11)"; "()" for the
/// identity.
std::string cycle_string(const Perm& p, unsigned level);

/// Builds the quotient with the point loop parallelized across threads.
/// Requires 1 ≤ n ≤ 14 (ErrorKind::size_cap otherwise).
LevelQuotient build_quotient(const std::vector<Word>& gens, unsigned n);
/// Single-threaded reference for the same computation.
LevelQuotient build_quotient_serial(const std::vector<Word>& gens, unsigned n);

/// The standard generating sets: G = {a, b, c, d} and L = {ab, d}.
std::vector<Word> g_generators(const OmegaSeq& omega);
std::vector<Word> l_generators(const OmegaSeq& omega);

/// Sorted orbit of v. Throws ErrorKind::level_mismatch if |v| ≠ level.
std::vector<VertexPath> orbit(const LevelQuotient& q, const VertexPath& v);

bool is_level_transitive(const std::vector<Word>& gens, unsigned n);

boost::multiprecision::cpp_int group_order(const LevelQuotient& q);

/// |G/St(n)| / |L/St_L(n)|, which is 1 or 2.
unsigned index_in_quotient(const OmegaSeq& omega, unsigned n);

/// True iff w fixes every vertex of level n.
bool fixes_level(const Word& w, unsigned n);

struct RistWitness {
  Word word;
  LWord lword;
  VertexPath vertex;
  /// Largest section-closure depth used by the exact certification.
  std::size_t depth = 0;
};

inline constexpr std::size_t kDefaultRistMaxLen = 10;

/// First freely reduced word over {A, A⁻¹, D} (by length, then A < A⁻¹ < D)
/// that fixes the path to u, is exactly trivial at every sibling vertex off
/// that path, and is nontrivial at u. Throws ErrorKind::not_found after
/// exhausting max_len.
RistWitness rist_search(const OmegaSeq& omega, const VertexPath& u,
                        std::size_t max_len = kDefaultRistMaxLen);

}  // namespace tg
