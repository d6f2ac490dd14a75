#include "treegroups/construct.hpp"

#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "treegroups/errors.hpp"
#include "treegroups/perm_group.hpp"

namespace tg {

namespace {

LGen inverse_gen(LGen x) {
  switch (x) {
    case LGen::A: return LGen::Ainv;
    case LGen::Ainv: return LGen::A;
    case LGen::D: return LGen::D;
  }
  return x;
}

void push_free(std::vector<LGen>& out, LGen x) {
  if (!out.empty() && out.back() == inverse_gen(x)) out.pop_back();
  else out.push_back(x);
}

const LWord kA({LGen::A});
const LWord kI({LGen::Ainv});
const LWord kD({LGen::D});

}  // namespace

LWord::LWord(std::vector<LGen> gens) {
  for (LGen x : gens) push_free(gens_, x);
}

LWord LWord::parse(std::string_view text) {
  std::vector<LGen> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '*') {
      ++i;
    } else if (ch == 'D') {
      out.push_back(LGen::D);
      ++i;
    } else if (ch == 'I') {
      out.push_back(LGen::Ainv);
      ++i;
    } else if (ch == 'A') {
      if (text.substr(i, 4) == "A^-1") {
        out.push_back(LGen::Ainv);
        i += 4;
      } else {
        out.push_back(LGen::A);
        ++i;
      }
    } else {
      throw ParseError("L-word: unexpected character '" + std::string(1, ch) + "' at position " +
                           std::to_string(i),
                       i);
    }
  }
  return LWord(std::move(out));
}

LWord LWord::operator*(const LWord& rhs) const {
  LWord out = *this;
  for (LGen x : rhs.gens_) push_free(out.gens_, x);
  return out;
}

LWord LWord::inverse() const {
  std::vector<LGen> out;
  out.reserve(gens_.size());
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) out.push_back(inverse_gen(*it));
  return LWord(std::move(out));
}

LWord LWord::conj_a() const {
  std::vector<LGen> out;
  for (LGen x : gens_) {
    switch (x) {
      case LGen::A: push_free(out, LGen::Ainv); break;
      case LGen::Ainv: push_free(out, LGen::A); break;
      case LGen::D:
        push_free(out, LGen::A);
        push_free(out, LGen::D);
        push_free(out, LGen::Ainv);
        break;
    }
  }
  return LWord(std::move(out));
}

std::string LWord::to_string() const {
  std::string s;
  for (LGen x : gens_) {
    if (!s.empty()) s.push_back(' ');
    s += x == LGen::A ? "A" : x == LGen::Ainv ? "A^-1" : "D";
  }
  return s;
}

Word flatten(const LWord& w, const OmegaSeq& omega, std::size_t phase) {
  std::vector<Letter> letters;
  letters.reserve(2 * w.size());
  for (LGen x : w.gens()) {
    switch (x) {
      case LGen::A: letters.insert(letters.end(), {Letter::a, Letter::b}); break;
      case LGen::Ainv: letters.insert(letters.end(), {Letter::b, Letter::a}); break;
      case LGen::D: letters.push_back(Letter::d); break;
    }
  }
  return Word(std::move(letters), omega, phase);
}

LWord to_lgen(const Word& w) {
  if (!in_L(w)) {
    throw Error(ErrorKind::not_in_subgroup, "word " + w.to_string() + " is not in L");
  }
  // b = a·A, c = a·A·D, d = D; then move every a to the right end using
  // a·X = X^a·a. The a's pair off because the word lies in L.
  std::vector<LGen> out;
  bool pending = false;
  auto emit = [&](const LWord& x) {
    const LWord y = pending ? x.conj_a() : x;
    for (LGen g : y.gens()) push_free(out, g);
  };
  for (Letter x : w.letters()) {
    switch (x) {
      case Letter::a: pending = !pending; break;
      case Letter::b:
        pending = !pending;
        emit(kA);
        break;
      case Letter::c:
        pending = !pending;
        emit(kA);
        emit(kD);
        break;
      case Letter::d: emit(kD); break;
    }
  }
  return LWord(std::move(out));
}

std::vector<CaseRow> lemma1_case_tables(Symbol first) {
  switch (first) {
    case 0:
      return {{"abab", "ba", "ab"}, {"baba", "ab", "ba"}, {"d", "", "d"}, {"ada", "d", ""}};
    case 1:
      return {{"abab", "ba", "ab"}, {"baba", "ab", "ba"}, {"d", "a", "d"}, {"ada", "d", "a"}};
    case 2:
      return {{"abab", "b", "b"},
              {"d", "a", "d"},
              {"ada", "d", "a"},
              {"dabab", "ab", "c"},
              {"adaabab", "c", "ab"}};
    default: throw Error(ErrorKind::range, "sequence symbol outside {0,1,2}");
  }
}

std::vector<CaseRow> squares_case_rows() {
  // r = (ab)², s = (ac)², rs⁻¹ = abab·caca.
  return {{"abab", "ba", "ab"},
          {"a abab a", "ab", "ba"},
          {"aba abab caca aba", "ad", "d"},
          {"ba abab caca ab", "d", "ad"}};
}

namespace {

// Substitution entry realizing a generator of L_{σω} at `child`, as an
// element of St_L(child).
LWord lemma1_entry(Symbol first, std::uint8_t child, LGen gen) {
  if (gen == LGen::Ainv) return lemma1_entry(first, child, LGen::A).inverse();
  if (gen == LGen::D) return child == 1 ? kD : kA * kD * kI;  // d, ada
  if (first == 2) return child == 1 ? kA * kD * kA : kD * kA * kA;  // ada(ab)², d(ab)²
  return child == 1 ? kA * kA : kI * kI;  // (ab)², (ba)²
}

LWord substitute(const LWord& g, Symbol first, std::uint8_t child) {
  LWord out;
  for (LGen x : g.gens()) out = out * lemma1_entry(first, child, x);
  return out;
}

// Realizes g (over σ^{phase+|u|}ω) at u, over σ^phase ω.
LWord lemma1_lword(const OmegaSeq& omega, std::size_t phase, const VertexPath& u, LWord g) {
  for (std::size_t n = u.level(); n > 0; --n) {
    g = substitute(g, omega.at0(phase + n - 1), u[n - 1]);
  }
  return g;
}

bool fixes_level_exact(const Word& h, unsigned n) {
  for (std::uint32_t i = 0; i < (1U << n); ++i) {
    auto v = VertexPath::from_index(i, n);
    if (act(h, v) != v) return false;
  }
  return true;
}

std::vector<std::uint32_t> level_perm(const Word& w, unsigned n) {
  std::vector<std::uint32_t> p(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = act(w, VertexPath::from_index(i, n)).index();
  return p;
}

constexpr unsigned kSchreierLevelCap = 10;
constexpr std::size_t kProductFactors = 4;
constexpr std::size_t kFrontierCap = 20000;

// Searches St_L(n) for an element with section exactly g at u, using the
// Schreier generators t·s·rep(ts)⁻¹ of the level stabilizer.
std::optional<LWord> schreier_realizer(const OmegaSeq& omega, const VertexPath& u,
                                       const LWord& g) {
  const auto n = static_cast<unsigned>(u.level());
  if (n > kSchreierLevelCap) return std::nullopt;

  std::map<std::vector<std::uint32_t>, LWord> reps;
  std::deque<std::vector<std::uint32_t>> queue;
  auto id = level_perm(Word::identity(omega), n);
  reps.emplace(id, LWord());
  queue.push_back(id);
  const LWord gens[2] = {kA, kD};
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      LWord t = reps.at(p) * s;
      auto q = level_perm(flatten(t, omega), n);
      if (reps.emplace(q, t).second) queue.push_back(std::move(q));
    }
  }

  struct Candidate {
    Word section;
    LWord element;
  };
  std::vector<Candidate> pool;
  std::unordered_set<std::string> seen_sections;
  for (const auto& [p, t] : reps) {
    for (const auto& s : gens) {
      LWord ts = t * s;
      LWord z = ts * reps.at(level_perm(flatten(ts, omega), n)).inverse();
      if (z.empty()) continue;
      Word sec = section_at(flatten(z, omega), u);
      for (int inv = 0; inv < 2; ++inv) {
        if (seen_sections.insert(sec.to_string()).second) pool.push_back({sec, z});
        sec = sec.inverse();
        z = z.inverse();
      }
    }
  }

  const Word target = flatten(g, omega, n);
  std::vector<Candidate> frontier{{Word::identity(omega, n), LWord()}};
  std::unordered_set<std::string> seen{""};
  for (std::size_t len = 0; len < kProductFactors; ++len) {
    std::vector<Candidate> next;
    for (const auto& x : frontier) {
      for (const auto& y : pool) {
        Word prod = x.section * y.section;
        LWord elem = x.element * y.element;
        if (equal_auto(prod, target)) return elem;
        if (next.size() < kFrontierCap && seen.insert(prod.to_string()).second) {
          next.push_back({std::move(prod), std::move(elem)});
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

Word lemma1_realizer(const OmegaSeq& omega, const VertexPath& u, const LWord& g) {
  return flatten(lemma1_lword(omega, 0, u, g), omega);
}

Word section_realizer(const OmegaSeq& omega, const VertexPath& u, const LWord& g) {
  const auto n = static_cast<unsigned>(u.level());
  Word h = lemma1_realizer(omega, u, g);
  if (fixes_level_exact(h, n)) return h;
  if (auto z = schreier_realizer(omega, u, g)) return flatten(*z, omega);
  throw Error(ErrorKind::not_found, "no level-stabilizing realizer found for " + g.to_string() +
                                        " at vertex " + u.to_string());
}

nlohmann::json SquaresCert::to_json() const {
  if (level == 0) return base.to_string();
  auto list = nlohmann::json::array();
  for (const auto& f : factors) list.push_back(f.to_json());
  return nlohmann::json{{"sq", std::move(list)}};
}

Word flatten(const SquaresCert& cert, const OmegaSeq& omega, std::size_t phase) {
  if (cert.level == 0) return flatten(cert.base, omega, phase);
  Word out = Word::identity(omega, phase);
  for (const auto& f : cert.factors) {
    Word t = flatten(f, omega, phase);
    out = out * t * t;
  }
  return out;
}

std::optional<std::vector<LWord>> squares_entry(Symbol first, std::uint8_t child, LGen gen) {
  if (first > 2) throw Error(ErrorKind::range, "sequence symbol outside {0,1,2}");
  if (gen == LGen::Ainv) {
    auto e = squares_entry(first, child, LGen::A);
    if (!e) return std::nullopt;
    std::vector<LWord> out;
    for (auto it = e->rbegin(); it != e->rend(); ++it) out.push_back(it->inverse());
    return out;
  }
  if (first == 2) return std::nullopt;
  if (gen == LGen::A) return std::vector<LWord>{child == 1 ? kA : kI};  // r, r^a
  if (first == 1) return std::nullopt;
  // rs⁻¹ = A²·(D A⁻¹)², conjugated by ab (child 0) or by aba (child 1).
  auto conj_ab = [](const LWord& x) { return kI * x * kA; };
  const LWord dI = kD * kI;
  if (child == 0) return std::vector<LWord>{conj_ab(kA), conj_ab(dI)};
  return std::vector<LWord>{conj_ab(kA).conj_a(), conj_ab(dI).conj_a()};
}

namespace {

SquaresCert square_cert(const OmegaSeq& omega, const VertexPath& u, const LWord& g) {
  const auto n = static_cast<unsigned>(u.level());
  if (n == 0) return {0, g, {}};
  const std::uint8_t x = u[n - 1];
  const Symbol first = omega.at0(n - 1);
  std::vector<LWord> ts;
  for (LGen gen : g.gens()) {
    auto e = squares_entry(first, x, gen);
    if (!e) {
      throw Error(ErrorKind::not_found,
                  "no product of squares in L realizes " + LWord({gen}).to_string() +
                      " at child " + std::to_string(x) + " when the sequence symbol is " +
                      std::to_string(first));
    }
    ts.insert(ts.end(), e->begin(), e->end());
  }
  SquaresCert cert{n, {}, {}};
  const VertexPath v = u.prefix(n - 1);
  for (const auto& t : ts) cert.factors.push_back(square_cert(omega, v, t));
  return cert;
}

}  // namespace

namespace {

using PermVec = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const PermVec& p) const noexcept { return boost::hash_range(p.begin(), p.end()); }
};

constexpr unsigned kObstructionDepth = 3;
constexpr std::size_t kSquaresSearchCap = std::size_t{1} << 18;

// Smallest subgroup containing `seeds` and closed under conjugation by `by`.
std::vector<Perm> normal_closure(const std::vector<Perm>& seeds, const std::vector<Perm>& by, std::size_t degree) {
  std::vector<Perm> gens;
  auto add = [&](const Perm& p) {
    if (is_identity(p) || (!gens.empty() && StabilizerChain(degree, gens).contains(p))) return false;
    gens.push_back(p);
    return true;
  };
  for (const auto& s : seeds) add(s);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const auto& b : by) grew = add(compose(invert(b), compose(gens[i], b))) || grew;
    }
  }
  return gens;
}

// The subgroup generated by all squares. For a finite 2-group this is the
// Frattini subgroup: the normal closure of s² and (st)² over generators.
std::vector<Perm> squares_subgroup(const std::vector<Perm>& gens, std::size_t degree) {
  std::vector<Perm> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(compose(gens[i], gens[i]));
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm st = compose(gens[i], gens[j]);
      seeds.push_back(compose(st, st));
    }
  }
  return normal_closure(seeds, gens, degree);
}

// Generators of the subgroup mapping each block of `block` consecutive
// points to itself, by Schreier's lemma one block at a time.
std::vector<Perm> block_kernel(std::vector<Perm> gens, std::size_t degree, std::size_t block) {
  const std::size_t blocks = degree / block;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<std::optional<Perm>> rep(blocks);
    rep[b] = identity_perm(degree);
    std::vector<std::size_t> orbit{b};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : gens) {
        const std::size_t c = g[orbit[i] * block] / block;
        if (!rep[c]) {
          rep[c] = compose(g, *rep[orbit[i]]);
          orbit.push_back(c);
        }
      }
    }
    std::vector<Perm> next;
    for (std::size_t o : orbit) {
      for (const auto& g : gens) {
        Perm t = compose(g, *rep[o]);
        Perm z = compose(invert(*rep[t[b * block] / block]), t);
        if (!is_identity(z) && (next.empty() || !StabilizerChain(degree, next).contains(z))) next.push_back(z);
      }
    }
    gens = std::move(next);
  }
  return gens;
}

std::vector<SquaresCert> squares_pool(unsigned level) {
  constexpr std::size_t kBase = 10;
  std::vector<SquaresCert> pool;
  if (level == 0) {
    pool.push_back({0, {}, {}});
    for (const char* w : {"A", "A^-1", "D", "A A", "A D", "A^-1 A^-1", "A^-1 D", "D A", "D A^-1"}) {
      pool.push_back({0, LWord::parse(w), {}});
    }
    return pool;
  }
  auto lower = squares_pool(level - 1);
  lower.resize(std::min(lower.size(), kBase));
  auto trivial = [](const SquaresCert& c) { return c.level == 0 ? c.base.empty() : c.factors.empty(); };
  for (const auto& x : lower) {
    for (const auto& y : lower) {
      SquaresCert c{level, {}, {}};
      if (!trivial(x)) c.factors.push_back(x);
      if (!trivial(y)) c.factors.push_back(y);
      if (!c.factors.empty()) pool.push_back(std::move(c));
    }
  }
  return pool;
}

// Breadth-first search through the image of L_{n,ω} in a finite quotient,
// generated by squares of a fixed pool of L_{n−1,ω} elements; candidates
// that match below u in the quotient are then checked exactly.
std::optional<SquaresCert> squares_search(const OmegaSeq& omega, const VertexPath& u, const LWord& g) {
  const auto n = static_cast<unsigned>(u.level());
  const unsigned big = n + kObstructionDepth;
  const std::size_t degree = std::size_t{1} << big;
  const std::size_t block = degree >> n;
  const auto pool = squares_pool(n - 1);
  std::vector<PermVec> gens;
  for (const auto& c : pool) {
    Word t = flatten(c, omega);
    gens.push_back(level_perm(t * t, big));
  }
  const PermVec target_perm = level_perm(flatten(g, omega, n), big - n);
  const Word target = flatten(g, omega, n);

  std::unordered_map<PermVec, std::pair<PermVec, std::size_t>, PermHash> parent;
  const PermVec id = identity_perm(degree);
  parent.emplace(id, std::make_pair(id, pool.size()));
  std::deque<PermVec> queue{id};
  const std::size_t base = u.index() * block;
  while (!queue.empty() && parent.size() < kSquaresSearchCap) {
    PermVec x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      PermVec y = compose(x, gens[i]);
      if (!parent.emplace(y, std::make_pair(x, i)).second) continue;
      bool match = true;
      for (std::size_t p = 0; p < degree && match; ++p) match = y[p] / block == p / block;
      for (std::size_t w = 0; w < block && match; ++w) match = y[base + w] - base == target_perm[w];
      if (match) {
        std::vector<std::size_t> path;
        for (PermVec cur = y; parent.at(cur).second < pool.size(); cur = parent.at(cur).first) {
          path.push_back(parent.at(cur).second);
        }
        SquaresCert cert{n, {}, {}};
        for (auto it = path.rbegin(); it != path.rend(); ++it) cert.factors.push_back(pool[*it]);
        if (equal_auto(section_at(flatten(cert, omega), u), target)) return cert;
      }
      queue.push_back(std::move(y));
    }
  }
  return std::nullopt;
}

}  // namespace

bool squares_obstructed(const OmegaSeq& omega, const VertexPath& u, const LWord& g) {
  const auto n = static_cast<unsigned>(u.level());
  if (n == 0) return false;
  const unsigned big = n + kObstructionDepth;
  const std::size_t degree = std::size_t{1} << big;
  const std::size_t block = degree >> n;
  std::vector<Perm> gens = {level_perm(flatten(kA, omega), big), level_perm(flatten(kD, omega), big)};
  for (unsigned k = 0; k < n; ++k) gens = squares_subgroup(gens, degree);
  std::vector<Perm> restricted;
  const std::size_t base = u.index() * block;
  for (const auto& k : block_kernel(gens, degree, block)) {
    Perm r(block);
    for (std::size_t w = 0; w < block; ++w) r[w] = k[base + w] - static_cast<std::uint32_t>(base);
    restricted.push_back(std::move(r));
  }
  return !StabilizerChain(block, restricted).contains(level_perm(flatten(g, omega, n), big - n));
}

SquaresCert square_realizer(const OmegaSeq& omega, const VertexPath& u, const LWord& g) {
  try {
    return square_cert(omega, u, g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_found) throw;
    if (squares_obstructed(omega, u, g)) {
      throw Error(ErrorKind::not_found, std::string(e.what()) + "; no element of the level-" +
                                            std::to_string(u.level() + kObstructionDepth) +
                                            " quotient of the squares subgroup has this section, so none exists");
    }
    if (auto c = squares_search(omega, u, g)) return *c;
    throw;
  }
}

namespace {

LWord mapper_lword(const OmegaSeq& omega, std::size_t phase, const VertexPath& u,
                   const VertexPath& v) {
  const std::size_t n = u.level();
  if (n == 0) return {};
  const std::uint8_t x = u[0];
  const std::uint8_t y = v[0];
  if (n == 1) return x == y ? LWord() : kA;
  const VertexPath ut = u.suffix_from(1);
  const VertexPath vt = v.suffix_from(1);
  if (x == y) {
    LWord g = mapper_lword(omega, phase + 1, ut, vt);
    return lemma1_lword(omega, phase, VertexPath({x}), g);
  }
  // (h·ab)(xu) = h(y·(ab)_x(u)) = y·h_y((ab)_x(u)).
  const Word ab("ab", omega, phase);
  const VertexPath moved = act(section_at(ab, VertexPath({x})), ut);
  LWord g = mapper_lword(omega, phase + 1, moved, vt);
  return lemma1_lword(omega, phase, VertexPath({y}), g) * kA;
}

}  // namespace

Word transitive_mapper(const OmegaSeq& omega, const VertexPath& u, const VertexPath& v) {
  if (u.level() != v.level()) {
    throw Error(ErrorKind::length_mismatch, "transitive_mapper: vertices on different levels");
  }
  if (u.level() >= 2) (void)omega.at0(u.level() - 2);
  return flatten(mapper_lword(omega, 0, u, v), omega);
}

}  // namespace tg
