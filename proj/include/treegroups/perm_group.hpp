#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tg {

/// A permutation of {0, …, n−1} as its image list. Composition is left
/// action: compose(g, h)(x) = g(h(x)).
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
Perm compose(const Perm& g, const Perm& h);
Perm invert(const Perm& g);
bool is_identity(const Perm& g) noexcept;

/// Deterministic Schreier–Sims stabilizer chain. Base points are chosen as the
/// smallest point moved by the first element that needs a new level.
class StabilizerChain {
public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  boost::multiprecision::cpp_int order() const;
  bool contains(const Perm& g) const;

  std::size_t degree() const noexcept { return degree_; }
  std::vector<std::uint32_t> base() const;
  std::size_t strong_generator_count() const noexcept;

private:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Perm> gens;
    // transversal[β] maps the base point to β; empty when β is not in the orbit.
    std::vector<Perm> transversal;
    std::vector<std::uint32_t> orbit;
  };

  // Strips g through levels from `start` on; returns the residue and the
  // level where sifting stopped (levels_.size() if it passed all of them).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t start) const;
  void rebuild_orbit(Level& level) const;
  void add_generator(std::size_t level, const Perm& g);
  void run();

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace tg
