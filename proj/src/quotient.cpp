#include "treegroups/quotient.hpp"

#include <algorithm>
#include <deque>

#include "treegroups/errors.hpp"

namespace tg {

LevelQuotient::LevelQuotient(unsigned level, std::vector<std::string> labels, std::vector<Perm> perms)
    : level_(level), labels_(std::move(labels)), perms_(std::move(perms)), cache_(std::make_shared<Cache>()) {
  if (labels_.size() != perms_.size()) throw Error(ErrorKind::range, "one label per generator");
}

const StabilizerChain& LevelQuotient::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(points(), perms_);
    cache_->order = cache_->chain->order();
  });
  return *cache_->chain;
}

const boost::multiprecision::cpp_int& LevelQuotient::order() const {
  chain();
  return cache_->order;
}

std::string cycle_string(const Perm& p, unsigned level) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out.push_back('(');
    for (std::uint32_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      if (y != x) out.push_back(' ');
      out += VertexPath::from_index(y, level).to_string();
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

nlohmann::json LevelQuotient::to_json() const {
  nlohmann::json points_json = nlohmann::json::array();
  for (std::uint32_t i = 0; i < points(); ++i) points_json.push_back(VertexPath::from_index(i, level_).to_string());
  nlohmann::json gens = nlohmann::json::object();
  for (std::size_t i = 0; i < perms_.size(); ++i) gens[labels_[i]] = cycle_string(perms_[i], level_);
  return {{"level", level_}, {"points", std::move(points_json)}, {"generators", std::move(gens)}};
}

namespace {

void check_level(unsigned n) {
  if (n < 1 || n > kMaxQuotientLevel) {
    throw Error(ErrorKind::size_cap,
                "quotient level must lie in [1, " + std::to_string(kMaxQuotientLevel) + "]");
  }
}

std::vector<std::string> labels_of(const std::vector<Word>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.empty() ? "e" : g.to_string());
  return out;
}

void check_depth(const std::vector<Word>& gens, unsigned n) {
  for (const auto& g : gens) {
    if (n >= 2) (void)g.omega().at0(g.phase() + n - 2);
  }
}

}  // namespace

LevelQuotient build_quotient_serial(const std::vector<Word>& gens, unsigned n) {
  check_level(n);
  check_depth(gens, n);
  const std::uint32_t points = 1U << n;
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    Perm p(points);
    for (std::uint32_t i = 0; i < points; ++i) p[i] = act(g, VertexPath::from_index(i, n)).index();
    perms.push_back(std::move(p));
  }
  return LevelQuotient(n, labels_of(gens), std::move(perms));
}

LevelQuotient build_quotient(const std::vector<Word>& gens, unsigned n) {
  check_level(n);
  check_depth(gens, n);
  const std::int64_t points = std::int64_t{1} << n;
  std::vector<Perm> perms(gens.size(), Perm(static_cast<std::size_t>(points)));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Word& g = gens[k];
    Perm& p = perms[k];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < points; ++i) {
      p[static_cast<std::size_t>(i)] = act(g, VertexPath::from_index(static_cast<std::uint32_t>(i), n)).index();
    }
  }
  return LevelQuotient(n, labels_of(gens), std::move(perms));
}

std::vector<Word> g_generators(const OmegaSeq& omega) {
  return {Word("a", omega), Word("b", omega), Word("c", omega), Word("d", omega)};
}

std::vector<Word> l_generators(const OmegaSeq& omega) {
  return {Word("ab", omega), Word("d", omega)};
}

std::vector<VertexPath> orbit(const LevelQuotient& q, const VertexPath& v) {
  if (v.level() != q.level()) {
    throw Error(ErrorKind::level_mismatch, "vertex " + v.to_string() + " is not on level " +
                                               std::to_string(q.level()));
  }
  std::vector<bool> seen(q.points());
  std::deque<std::uint32_t> queue{v.index()};
  seen[v.index()] = true;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (const auto& p : q.perms()) {
      if (!seen[p[x]]) {
        seen[p[x]] = true;
        queue.push_back(p[x]);
      }
    }
  }
  std::vector<VertexPath> out;
  for (std::uint32_t i = 0; i < q.points(); ++i) {
    if (seen[i]) out.push_back(VertexPath::from_index(i, q.level()));
  }
  return out;
}

bool is_level_transitive(const std::vector<Word>& gens, unsigned n) {
  const LevelQuotient q = build_quotient(gens, n);
  return orbit(q, VertexPath(std::vector<std::uint8_t>(n, 0))).size() == q.points();
}

boost::multiprecision::cpp_int group_order(const LevelQuotient& q) { return q.order(); }

unsigned index_in_quotient(const OmegaSeq& omega, unsigned n) {
  const auto g = build_quotient(g_generators(omega), n).order();
  const auto l = build_quotient(l_generators(omega), n).order();
  return static_cast<unsigned>(g / l);
}

bool fixes_level(const Word& w, unsigned n) {
  if (n >= 2) (void)w.omega().at0(w.phase() + n - 2);
  for (std::uint32_t i = 0; i < (1U << n); ++i) {
    const auto v = VertexPath::from_index(i, n);
    if (act(w, v) != v) return false;
  }
  return true;
}

namespace {

// Exact check that w is a rigid element at u; fills the closure depth.
bool is_rigid_at(const Word& w, const VertexPath& u, std::size_t& depth) {
  if (act(w, u) != u) return false;
  depth = 0;
  Word cur = w;
  for (std::size_t j = 0; j < u.level(); ++j) {
    auto [s0, s1] = sections(cur);
    const Word& off = u[j] == 0 ? s1 : s0;
    const ClosureStats st = closure_stats(off);
    if (!st.trivial) return false;
    depth = std::max(depth, st.depth + j + 1);
    cur = u[j] == 0 ? std::move(s0) : std::move(s1);
  }
  const ClosureStats st = closure_stats(cur);
  depth = std::max(depth, st.depth + u.level());
  return !st.trivial;
}

}  // namespace

RistWitness rist_search(const OmegaSeq& omega, const VertexPath& u, std::size_t max_len) {
  if (!omega.is_periodic()) throw Error(ErrorKind::exactness, "rist_search needs a periodic sequence");
  static const LGen kOrder[3] = {LGen::A, LGen::Ainv, LGen::D};
  std::vector<std::vector<LGen>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<LGen>> next;
    for (const auto& w : layer) {
      for (LGen x : kOrder) {
        if (!w.empty()) {
          const LGen last = w.back();
          if ((last == LGen::A && x == LGen::Ainv) || (last == LGen::Ainv && x == LGen::A) ||
              (last == LGen::D && x == LGen::D)) {
            continue;
          }
        }
        auto v = w;
        v.push_back(x);
        LWord lw(v);
        Word flat = flatten(lw, omega);
        std::size_t depth = 0;
        if (is_rigid_at(flat, u, depth)) return {std::move(flat), std::move(lw), u, depth};
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  throw Error(ErrorKind::not_found, "no rigid element at " + u.to_string() + " among L-words of length <= " +
                                        std::to_string(max_len));
}

}  // namespace tg
