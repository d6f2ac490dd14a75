#include "treegroups/perm_group.hpp"

#include <numeric>
#include <unordered_set>

#include "treegroups/errors.hpp"

namespace tg {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

Perm compose(const Perm& g, const Perm& h) {
  Perm out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
  return out;
}

Perm invert(const Perm& g) {
  Perm out(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) out[g[x]] = x;
  return out;
}

bool is_identity(const Perm& g) noexcept {
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (g[x] != x) return false;
  }
  return true;
}

namespace {

std::uint32_t first_moved(const Perm& g) {
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (g[x] != x) return x;
  }
  return 0;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  // A base never exceeds the degree; reserving keeps level references stable.
  levels_.reserve(degree + 1);
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(ErrorKind::range, "generator degree mismatch");
    if (is_identity(g)) continue;
    std::size_t j = 0;
    while (j < levels_.size() && g[levels_[j].base_point] == levels_[j].base_point) ++j;
    if (j == levels_.size()) {
      levels_.push_back({});
      levels_.back().base_point = first_moved(g);
    }
    for (std::size_t i = 0; i <= j; ++i) levels_[i].gens.push_back(g);
  }
  for (auto& level : levels_) rebuild_orbit(level);
  run();
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  // Extends the orbit without touching transversal elements already chosen,
  // so Schreier generators tested earlier stay valid.
  if (level.transversal.empty()) {
    level.transversal.assign(degree_, Perm{});
    level.transversal[level.base_point] = identity_perm(degree_);
    level.orbit = {level.base_point};
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      const std::uint32_t gamma = level.orbit[k];
      for (const auto& s : level.gens) {
        const std::uint32_t delta = s[gamma];
        if (level.transversal[delta].empty()) {
          level.transversal[delta] = compose(s, level.transversal[gamma]);
          level.orbit.push_back(delta);
          grew = true;
        }
      }
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t start) const {
  for (std::size_t j = start; j < levels_.size(); ++j) {
    const auto& level = levels_[j];
    const std::uint32_t beta = g[level.base_point];
    if (level.transversal[beta].empty()) return {std::move(g), j};
    g = compose(invert(level.transversal[beta]), g);
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::add_generator(std::size_t level, const Perm& g) {
  levels_[level].gens.push_back(g);
}

void StabilizerChain::run() {
  std::vector<std::unordered_set<std::uint64_t>> tested(levels_.size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    auto& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < level.orbit.size() && !extended; ++k) {
      const std::uint32_t beta = level.orbit[k];
      for (std::size_t s = 0; s < level.gens.size() && !extended; ++s) {
        const std::uint64_t key = static_cast<std::uint64_t>(beta) * 1'000'003ULL + s;
        if (!tested[static_cast<std::size_t>(i)].insert(key).second) continue;
        const Perm& gen = level.gens[s];
        const std::uint32_t image = gen[beta];
        Perm h = compose(invert(level.transversal[image]), compose(gen, level.transversal[beta]));
        auto [residue, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (is_identity(residue)) continue;
        if (j == levels_.size()) {
          levels_.push_back({});
          levels_.back().base_point = first_moved(residue);
          tested.emplace_back();
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          add_generator(l, residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

boost::multiprecision::cpp_int StabilizerChain::order() const {
  boost::multiprecision::cpp_int n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.size() != degree_) return false;
  return is_identity(strip(g, 0).first);
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::size_t StabilizerChain::strong_generator_count() const noexcept {
  std::size_t n = 0;
  for (const auto& level : levels_) n += level.gens.size();
  return n;
}

}  // namespace tg
