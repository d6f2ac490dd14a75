#include "treegroups/omega.hpp"

#include <algorithm>
#include <limits>

#include "treegroups/errors.hpp"

namespace tg {

PermThree::PermThree(std::array<Symbol, 3> image) : image_(image) {
  std::array<bool, 3> seen{};
  for (Symbol s : image_) {
    if (s > 2 || seen[s]) {
      throw Error(ErrorKind::range, "PermThree: image is not a permutation of {0,1,2}");
    }
    seen[s] = true;
  }
}

PermThree PermThree::swap12() noexcept {
  PermThree p;
  p.image_ = {0, 2, 1};
  return p;
}

PermThree PermThree::after(const PermThree& inner) const noexcept {
  PermThree p;
  for (Symbol s = 0; s < 3; ++s) p.image_[s] = image_[inner.image_[s]];
  return p;
}

namespace {

void check_symbols(const std::vector<Symbol>& v) {
  for (Symbol s : v) {
    if (s > 2) throw Error(ErrorKind::range, "sequence symbol outside {0,1,2}");
  }
}

// Smallest p dividing |v| such that v is a power of its first p symbols.
std::size_t primitive_length(const std::vector<Symbol>& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
    if (ok) return p;
  }
  return n;
}

}  // namespace

OmegaSeq::OmegaSeq(std::vector<Symbol> prefix, std::vector<Symbol> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  check_symbols(prefix_);
  check_symbols(period_);
  canonicalize();
}

void OmegaSeq::canonicalize() {
  if (period_.empty()) return;
  period_.resize(primitive_length(period_));
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

OmegaSeq OmegaSeq::parse(std::string_view text) {
  std::vector<Symbol> prefix, period;
  std::size_t i = 0;
  auto digit = [&](char ch, std::size_t pos) -> Symbol {
    if (ch < '0' || ch > '2') {
      throw ParseError("sequence: unexpected character '" + std::string(1, ch) +
                           "' at position " + std::to_string(pos),
                       pos);
    }
    return static_cast<Symbol>(ch - '0');
  };
  for (; i < text.size() && text[i] != '('; ++i) prefix.push_back(digit(text[i], i));
  if (i < text.size()) {
    ++i;
    for (; i < text.size() && text[i] != ')'; ++i) period.push_back(digit(text[i], i));
    if (i == text.size()) throw ParseError("sequence: missing ')'", i);
    ++i;
    if (i != text.size()) throw ParseError("sequence: trailing characters after ')'", i);
  }
  if (prefix.empty() && period.empty()) throw ParseError("sequence: empty", 0);
  return OmegaSeq(std::move(prefix), std::move(period));
}

std::size_t OmegaSeq::available() const noexcept {
  return period_.empty() ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

Symbol OmegaSeq::at0(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (period_.empty()) {
    throw Error(ErrorKind::depth, "sequence symbol " + std::to_string(i + 1) +
                                      " requested but only " +
                                      std::to_string(prefix_.size()) + " are known");
  }
  return period_[(i - prefix_.size()) % period_.size()];
}

Symbol OmegaSeq::symbol(std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::range, "sequence positions are 1-based");
  return at0(i - 1);
}

OmegaSeq OmegaSeq::shift(std::size_t k) const {
  if (k <= prefix_.size()) {
    return OmegaSeq(std::vector<Symbol>(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()),
                    period_);
  }
  if (period_.empty()) {
    throw Error(ErrorKind::range, "shift by " + std::to_string(k) + " exceeds finite prefix of length " +
                                      std::to_string(prefix_.size()));
  }
  std::vector<Symbol> rotated(period_);
  const std::size_t r = (k - prefix_.size()) % period_.size();
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(r), rotated.end());
  return OmegaSeq({}, std::move(rotated));
}

bool OmegaSeq::is_omega_infinity() const {
  if (period_.empty()) {
    throw Error(ErrorKind::undecidable, "recurrence of symbols is undecidable from a finite prefix");
  }
  std::array<bool, 3> seen{};
  for (Symbol s : period_) seen[s] = true;
  return seen[0] && seen[1] && seen[2];
}

OmegaSeq OmegaSeq::apply_perm(const PermThree& pi) const {
  std::vector<Symbol> pre(prefix_), per(period_);
  for (auto& s : pre) s = pi(s);
  for (auto& s : per) s = pi(s);
  return OmegaSeq(std::move(pre), std::move(per));
}

std::size_t OmegaSeq::canonical_phase(std::size_t phase) const noexcept {
  if (period_.empty() || phase < prefix_.size()) return phase;
  return prefix_.size() + (phase - prefix_.size()) % period_.size();
}

std::string OmegaSeq::prefix_string(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>('0' + at0(i)));
  return out;
}

std::string OmegaSeq::to_string() const {
  std::string out;
  for (Symbol s : prefix_) out.push_back(static_cast<char>('0' + s));
  if (!period_.empty()) {
    out.push_back('(');
    for (Symbol s : period_) out.push_back(static_cast<char>('0' + s));
    out.push_back(')');
  }
  return out;
}

std::uint64_t count_pi_classes(int k) {
  if (k < 1 || k > 12) throw Error(ErrorKind::range, "count_pi_classes: k must lie in [1, 12]");
  // Burnside: the identity fixes 3^k strings, (12) fixes only 0^k.
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  return (total + 1) / 2;
}

}  // namespace tg
