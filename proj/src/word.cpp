#include "treegroups/word.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_set>

#include "state_table.hpp"
#include "treegroups/errors.hpp"

namespace tg {

char letter_char(Letter x) noexcept {
  switch (x) {
    case Letter::a: return 'a';
    case Letter::b: return 'b';
    case Letter::c: return 'c';
    case Letter::d: return 'd';
  }
  return '?';
}

bool row_is_a(Letter x, Symbol s) noexcept {
  // Each row has exactly one `e` entry: β at 2, ζ at 1, δ at 0.
  static constexpr Symbol identity_at[4] = {0, 2, 1, 0};
  return s != identity_at[static_cast<int>(x) & 3];
}

namespace detail {

void push_reduced(std::vector<Letter>& stack, Letter x) {
  if (stack.empty()) {
    stack.push_back(x);
    return;
  }
  Letter top = stack.back();
  if (x == Letter::a) {
    if (top == Letter::a) stack.pop_back();
    else stack.push_back(x);
    return;
  }
  if (top == Letter::a) {
    stack.push_back(x);
    return;
  }
  stack.pop_back();
  auto merged = static_cast<std::uint8_t>(static_cast<std::uint8_t>(top) ^ static_cast<std::uint8_t>(x));
  if (merged != 0) stack.push_back(static_cast<Letter>(merged));
}

void raw_sections(const std::vector<Letter>& letters, Symbol s, std::vector<Letter>& out0,
                  std::vector<Letter>& out1) {
  // Letters are applied right to left; the section of the product at u is the
  // product, in word order, of each letter's section at the point it is
  // applied to. Reduction is symmetric, so reduce in application order and
  // reverse afterwards.
  std::vector<Letter>* outs[2] = {&out0, &out1};
  for (std::uint8_t u = 0; u < 2; ++u) {
    auto& out = *outs[u];
    out.clear();
    std::uint8_t pos = u;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      Letter x = *it;
      if (x == Letter::a) {
        pos ^= 1U;
        continue;
      }
      if (pos == 1) push_reduced(out, x);
      else if (row_is_a(x, s)) push_reduced(out, Letter::a);
    }
    std::reverse(out.begin(), out.end());
  }
}

std::uint32_t StateTable::intern(std::vector<Letter> letters, std::size_t phase) {
  phase = omega_.canonical_phase(phase);
  std::string key(sizeof(std::size_t) + letters.size(), '\0');
  std::memcpy(key.data(), &phase, sizeof(std::size_t));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    key[sizeof(std::size_t) + i] = static_cast<char>(letters[i]);
  }
  auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<std::uint32_t>(states_.size()));
  if (inserted) {
    if (states_.size() >= cap_) {
      throw Error(ErrorKind::resource,
                  "state closure exceeded cap of " + std::to_string(cap_) + " states");
    }
    active_.push_back(detail::raw_active(letters) ? 1 : 0);
    states_.push_back({std::move(letters), phase});
    children_.push_back({npos, npos});
  }
  return it->second;
}

std::array<std::uint32_t, 2> StateTable::expand(std::uint32_t id) {
  if (children_[id][0] != npos) return children_[id];
  const Symbol s = omega_.at0(states_[id].phase);
  std::vector<Letter> l0, l1;
  raw_sections(states_[id].letters, s, l0, l1);
  const std::size_t next = states_[id].phase + 1;
  std::uint32_t c0 = intern(std::move(l0), next);
  std::uint32_t c1 = intern(std::move(l1), next);
  children_[id] = {c0, c1};
  return children_[id];
}

}  // namespace detail

std::vector<Letter> reduce_letters(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter x : letters) detail::push_reduced(out, x);
  return out;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a': out.push_back(Letter::a); break;
      case 'b': out.push_back(Letter::b); break;
      case 'c': out.push_back(Letter::c); break;
      case 'd': out.push_back(Letter::d); break;
      case 'e': case ' ': case '\t': break;
      default:
        throw ParseError("unknown letter '" + std::string(1, text[i]) + "' at position " +
                             std::to_string(i),
                         i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

VertexPath::VertexPath(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorKind::range, "vertex bits must be 0 or 1");
  }
}

VertexPath VertexPath::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("vertex: expected 0 or 1 at position " + std::to_string(i), i);
    }
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return VertexPath(std::move(bits));
}

VertexPath VertexPath::from_index(std::uint32_t index, unsigned level) {
  std::vector<std::uint8_t> bits(level);
  for (unsigned i = 0; i < level; ++i) bits[i] = (index >> (level - 1 - i)) & 1U;
  return VertexPath(std::move(bits));
}

std::uint32_t VertexPath::index() const noexcept {
  std::uint32_t idx = 0;
  for (auto b : bits_) idx = (idx << 1U) | b;
  return idx;
}

std::string VertexPath::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

VertexPath VertexPath::prefix(std::size_t n) const {
  return VertexPath(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

VertexPath VertexPath::suffix_from(std::size_t n) const {
  return VertexPath(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(n), bits_.end()));
}

VertexPath VertexPath::child(std::uint8_t bit) const {
  auto bits = bits_;
  bits.push_back(bit);
  return VertexPath(std::move(bits));
}

// ---------------------------------------------------------------------------

Word::Word(std::vector<Letter> reduced, std::shared_ptr<const OmegaSeq> omega, std::size_t phase, bool)
    : letters_(std::move(reduced)), omega_(std::move(omega)), phase_(phase) {}

Word::Word(std::vector<Letter> letters, OmegaSeq omega, std::size_t phase)
    : letters_(reduce_letters(letters)),
      omega_(std::make_shared<const OmegaSeq>(std::move(omega))),
      phase_(phase) {}

Word::Word(std::string_view letters, OmegaSeq omega, std::size_t phase)
    : Word(parse_letters(letters), std::move(omega), phase) {}

Word Word::identity(OmegaSeq omega, std::size_t phase) {
  return Word(std::vector<Letter>{}, std::move(omega), phase);
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(letter_char(x));
  return s;
}

Word Word::operator*(const Word& rhs) const {
  if (phase_ != rhs.phase_ || !(omega_ == rhs.omega_ || *omega_ == *rhs.omega_)) {
    throw Error(ErrorKind::range, "product of words over different sequences or phases");
  }
  std::vector<Letter> out(letters_);
  for (Letter x : rhs.letters_) detail::push_reduced(out, x);
  return Word(std::move(out), omega_, phase_, true);
}

Word Word::inverse() const {
  // Every generator is an involution.
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()), omega_, phase_, true);
}

Word Word::pow(long long n) const {
  Word base = n < 0 ? inverse() : *this;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Word result(std::vector<Letter>{}, omega_, phase_, true);
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Word Word::conj(const Word& h) const { return h.inverse() * *this * h; }

// ---------------------------------------------------------------------------

Portrait::Portrait(std::vector<std::vector<std::uint8_t>> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(ErrorKind::range, "portrait needs at least the root level");
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (levels_[j].size() != (std::size_t{1} << j)) {
      throw Error(ErrorKind::range, "portrait level " + std::to_string(j) + " has wrong width");
    }
  }
}

Portrait Portrait::child(std::uint8_t bit) const {
  if (is_leaf()) throw Error(ErrorKind::depth, "leaf portrait has no children");
  std::vector<std::vector<std::uint8_t>> sub(levels_.size() - 1);
  for (std::size_t j = 1; j < levels_.size(); ++j) {
    const std::size_t half = std::size_t{1} << (j - 1);
    auto first = levels_[j].begin() + static_cast<std::ptrdiff_t>(bit * half);
    sub[j - 1].assign(first, first + static_cast<std::ptrdiff_t>(half));
  }
  return Portrait(std::move(sub));
}

std::size_t Portrait::active_count(std::size_t j) const {
  const auto& lv = levels_.at(j);
  return static_cast<std::size_t>(std::count(lv.begin(), lv.end(), std::uint8_t{1}));
}

bool Portrait::all_inactive() const {
  for (const auto& lv : levels_) {
    if (std::find(lv.begin(), lv.end(), std::uint8_t{1}) != lv.end()) return false;
  }
  return true;
}

nlohmann::json Portrait::to_json() const {
  nlohmann::json node;
  node["active"] = active() ? 1 : 0;
  if (is_leaf()) node["children"] = nullptr;
  else node["children"] = nlohmann::json::array({child(0).to_json(), child(1).to_json()});
  return node;
}

// ---------------------------------------------------------------------------

bool root_active(const Word& w) noexcept { return detail::raw_active(w.letters()); }

std::pair<Word, Word> sections(const Word& w) {
  const Symbol s = w.omega().at0(w.phase());
  std::vector<Letter> l0, l1;
  detail::raw_sections(w.letters(), s, l0, l1);
  return {Word(std::move(l0), w.omega_ptr(), w.phase() + 1, true),
          Word(std::move(l1), w.omega_ptr(), w.phase() + 1, true)};
}

Word section_at(const Word& w, const VertexPath& u) {
  Word cur = w;
  for (auto bit : u.bits()) {
    auto [s0, s1] = sections(cur);
    cur = bit == 0 ? std::move(s0) : std::move(s1);
  }
  return cur;
}

VertexPath act(const Word& w, const VertexPath& v) {
  std::vector<std::uint8_t> bits = v.bits();
  const std::size_t n = bits.size();
  if (n >= 2) (void)w.omega().at0(w.phase() + n - 2);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (n == 0) break;
    if (*it == Letter::a) {
      bits[0] ^= 1U;
      continue;
    }
    // A Klein letter descends along 1s and, at the first 0, applies its row
    // entry to the next bit.
    std::size_t j = 0;
    while (j < n && bits[j] == 1) ++j;
    if (j + 1 < n && row_is_a(*it, w.omega().at0(w.phase() + j))) bits[j + 1] ^= 1U;
  }
  return VertexPath(std::move(bits));
}

Portrait portrait(const Word& w, std::size_t depth) {
  detail::StateTable table(w.omega(), std::numeric_limits<std::size_t>::max());
  std::vector<std::uint32_t> ids{table.intern(w.letters(), w.phase())};
  std::vector<std::vector<std::uint8_t>> levels;
  levels.reserve(depth + 1);
  for (std::size_t j = 0;; ++j) {
    std::vector<std::uint8_t> bits(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) bits[i] = table.active(ids[i]) ? 1 : 0;
    levels.push_back(std::move(bits));
    if (j == depth) break;
    std::vector<std::uint32_t> next(ids.size() * 2);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto ch = table.expand(ids[i]);
      next[2 * i] = ch[0];
      next[2 * i + 1] = ch[1];
    }
    ids = std::move(next);
  }
  return Portrait(std::move(levels));
}

namespace {

void require_periodic(const OmegaSeq& omega, const char* what) {
  if (!omega.is_periodic()) {
    throw Error(ErrorKind::exactness,
                std::string(what) + " needs a periodic sequence; use a depth-bounded variant");
  }
}

}  // namespace

ClosureStats closure_stats(const Word& w, std::size_t cap) {
  require_periodic(w.omega(), "closure");
  detail::StateTable table(w.omega(), cap);
  ClosureStats stats;
  std::vector<std::uint32_t> frontier{table.intern(w.letters(), w.phase())};
  std::vector<std::uint8_t> seen{1};
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    std::vector<std::uint32_t> next;
    for (auto id : frontier) {
      if (table.active(id)) stats.trivial = false;
      for (auto ch : table.expand(id)) {
        if (ch >= seen.size()) seen.resize(ch + 1, 0);
        if (!seen[ch]) {
          seen[ch] = 1;
          next.push_back(ch);
          stats.depth = level + 1;
        }
      }
    }
    frontier = std::move(next);
  }
  stats.states = table.size();
  return stats;
}

bool is_trivial(const Word& w, std::size_t cap) {
  require_periodic(w.omega(), "is_trivial");
  detail::StateTable table(w.omega(), cap);
  std::vector<std::uint32_t> stack{table.intern(w.letters(), w.phase())};
  std::vector<std::uint8_t> seen{1};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    if (table.active(id)) return false;
    for (auto ch : table.expand(id)) {
      if (ch >= seen.size()) seen.resize(ch + 1, 0);
      if (!seen[ch]) {
        seen[ch] = 1;
        stack.push_back(ch);
      }
    }
  }
  return true;
}

bool is_trivial_to_depth(const Word& w, std::size_t n) {
  detail::StateTable table(w.omega(), std::numeric_limits<std::size_t>::max());
  std::vector<std::uint32_t> level{table.intern(w.letters(), w.phase())};
  for (std::size_t j = 0;; ++j) {
    for (auto id : level) {
      if (table.active(id)) return false;
    }
    if (j == n) return true;
    std::vector<std::uint32_t> next;
    for (auto id : level) {
      for (auto ch : table.expand(id)) next.push_back(ch);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
}

namespace {

// Level-synchronous BFS over pairs of sections taken at the same vertex.
// Returns the first level holding a pair with different root activity.
std::optional<std::size_t> first_mismatch_level(const Word& lhs, const Word& rhs, std::size_t cap,
                                                std::optional<std::size_t> max_level) {
  detail::StateTable t1(lhs.omega(), cap);
  detail::StateTable t2(rhs.omega(), cap);
  auto key = [](std::uint32_t x, std::uint32_t y) {
    return (static_cast<std::uint64_t>(x) << 32U) | y;
  };
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frontier{
      {t1.intern(lhs.letters(), lhs.phase()), t2.intern(rhs.letters(), rhs.phase())}};
  seen.insert(key(frontier[0].first, frontier[0].second));
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    for (auto [x, y] : frontier) {
      if (t1.active(x) != t2.active(y)) return level;
    }
    if (max_level && level == *max_level) return std::nullopt;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    for (auto [x, y] : frontier) {
      auto cx = t1.expand(x);
      auto cy = t2.expand(y);
      for (int i = 0; i < 2; ++i) {
        if (seen.insert(key(cx[i], cy[i])).second) {
          if (seen.size() > cap) {
            throw Error(ErrorKind::resource, "pair closure exceeded cap of " + std::to_string(cap));
          }
          next.emplace_back(cx[i], cy[i]);
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

bool equal_auto(const Word& lhs, const Word& rhs, std::size_t cap) {
  require_periodic(lhs.omega(), "equal_auto");
  require_periodic(rhs.omega(), "equal_auto");
  return !first_mismatch_level(lhs, rhs, cap, std::nullopt).has_value();
}

std::uint64_t order(const Word& w, unsigned cap_exp) {
  require_periodic(w.omega(), "order");
  Word cur = w;
  for (unsigned k = 0; k <= cap_exp; ++k) {
    if (is_trivial(cur)) return std::uint64_t{1} << k;
    if (k == cap_exp) break;
    cur = cur * cur;
  }
  throw Error(ErrorKind::order_cap, "order exceeds 2^" + std::to_string(cap_exp) + " (cap reached)");
}

std::string Distance::to_string() const {
  if (zero) return "0";
  std::string v = exponent == 0 ? "1" : "1/2^" + std::to_string(exponent);
  if (exponent > 0 && exponent < 63) v = "1/" + std::to_string(std::uint64_t{1} << exponent);
  return upper_bound ? "<= " + v : v;
}

Distance metric_distance(const Word& lhs, const Word& rhs, std::optional<std::size_t> depth_bound) {
  if (!depth_bound) {
    require_periodic(lhs.omega(), "metric_distance");
    require_periodic(rhs.omega(), "metric_distance");
  }
  auto level = first_mismatch_level(lhs, rhs, kDefaultClosureCap, depth_bound);
  Distance d;
  if (level) {
    // Activity differs at a level-L vertex: actions agree up to level L and
    // differ on level L + 1.
    d.exponent = static_cast<unsigned>(*level);
  } else if (depth_bound) {
    d.exponent = static_cast<unsigned>(*depth_bound + 1);
    d.upper_bound = true;
  } else {
    d.zero = true;
  }
  return d;
}

bool in_L(const Word& w) noexcept {
  std::size_t n = 0;
  for (Letter x : w.letters()) n += x != Letter::d;
  return (n & 1U) == 0;
}

}  // namespace tg
