#include "treegroups/invariant.hpp"

#include <algorithm>

#include "treegroups/errors.hpp"

namespace tg {

ParityVector::ParityVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorKind::range, "parity vector entries must be 0 or 1");
  }
}

ParityVector ParityVector::parse(std::string_view bits) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw ParseError("parity vector: unexpected character at position " + std::to_string(i), i);
    }
    out.push_back(static_cast<std::uint8_t>(bits[i] - '0'));
  }
  return ParityVector(std::move(out));
}

bool ParityVector::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

ParityVector& ParityVector::operator^=(const ParityVector& rhs) {
  if (rhs.size() != size()) throw Error(ErrorKind::length_mismatch, "parity vectors of different lengths");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= rhs.bits_[i];
  return *this;
}

ParityVector ParityVector::operator^(const ParityVector& rhs) const {
  ParityVector out = *this;
  out ^= rhs;
  return out;
}

std::string ParityVector::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

ParityVector parity_formula(LGenerator gen, const OmegaSeq& omega, std::size_t depth) {
  std::vector<std::uint8_t> bits(depth);
  if (depth == 0) return ParityVector(bits);
  bits[0] = gen == LGenerator::ab ? 1 : 0;
  const auto& row = gen == LGenerator::ab ? BitTables::beta : BitTables::delta;
  for (std::size_t n = 1; n < depth; ++n) bits[n] = row[omega.symbol(n)];
  return ParityVector(std::move(bits));
}

ParityVector parity_by_count(const Word& w, std::size_t depth) {
  if (depth == 0) return {};
  const Portrait p = portrait(w, depth - 1);
  std::vector<std::uint8_t> bits(depth);
  for (std::size_t j = 0; j < depth; ++j) bits[j] = static_cast<std::uint8_t>(p.active_count(j) & 1U);
  return ParityVector(std::move(bits));
}

ParityVector parity_hom(const Word& w, std::size_t depth) {
  // a is active at the root only. A Klein letter x is active on level n ≥ 1
  // only at the vertex 1^{n−1}0, where its section is the row entry of x at
  // the n-th symbol read from its phase.
  std::vector<std::uint8_t> bits(depth);
  if (depth > 1) (void)w.omega().at0(w.phase() + depth - 2);
  for (Letter x : w.letters()) {
    if (x == Letter::a) {
      if (depth > 0) bits[0] ^= 1U;
      continue;
    }
    for (std::size_t n = 1; n < depth; ++n) {
      bits[n] ^= row_is_a(x, w.omega().at0(w.phase() + n - 1)) ? 1U : 0U;
    }
  }
  return ParityVector(std::move(bits));
}

InvariantTriple InvariantTriple::from(std::array<ParityVector, 3> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v[0].size();
  for (const auto& x : v) {
    if (x.size() != n) throw Error(ErrorKind::malformed_triple, "triple vectors differ in length");
    if (x.is_zero()) throw Error(ErrorKind::malformed_triple, "triple contains the zero vector");
  }
  if (v[0] == v[1] || v[1] == v[2]) throw Error(ErrorKind::malformed_triple, "triple vectors are not distinct");
  if (!(v[0] ^ v[1] ^ v[2]).is_zero()) {
    throw Error(ErrorKind::malformed_triple, "triple vectors do not sum to zero");
  }
  return InvariantTriple{std::move(v)};
}

std::string InvariantTriple::to_string() const {
  return "{" + vectors[0].to_string() + ", " + vectors[1].to_string() + ", " + vectors[2].to_string() + "}";
}

InvariantTriple invariant_triple(const OmegaSeq& omega, std::size_t depth) {
  if (depth < 2) throw Error(ErrorKind::range, "invariant triple needs depth at least 2");
  ParityVector pab = parity_formula(LGenerator::ab, omega, depth);
  ParityVector pd = parity_formula(LGenerator::d, omega, depth);
  if (pd.is_zero()) {
    throw Error(ErrorKind::degenerate_truncation,
                "p(d) truncates to zero at depth " + std::to_string(depth));
  }
  return InvariantTriple::from({pab, pd, pab ^ pd});
}

std::vector<ParityVector> parity_image(const OmegaSeq& omega, std::size_t depth) {
  if (depth < 2) throw Error(ErrorKind::range, "parity image needs depth at least 2");
  ParityVector pab = parity_formula(LGenerator::ab, omega, depth);
  ParityVector pd = parity_formula(LGenerator::d, omega, depth);
  if (pd.is_zero()) return {pab};
  auto t = InvariantTriple::from({pab, pd, pab ^ pd});
  return {t.vectors.begin(), t.vectors.end()};
}

namespace {

std::string decode(const ParityVector& pab, const ParityVector& pd) {
  std::string out;
  for (std::size_t i = 1; i < pd.size(); ++i) {
    const bool delta = pd[i] != 0;
    const bool beta = pab[i] != 0;
    if (!delta) {
      if (!beta) {
        throw Error(ErrorKind::inconsistent_triple,
                    "coordinate " + std::to_string(i) + " has δ = 0 and β = 0");
      }
      out.push_back('0');
    } else {
      out.push_back(beta ? '1' : '2');
    }
  }
  return out;
}

std::pair<std::string, std::string> ordered(std::string x, std::string y) {
  if (y < x) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

}  // namespace

std::pair<std::string, std::string> reconstruct_omega(const InvariantTriple& t) {
  const ParityVector* pd = nullptr;
  std::vector<const ParityVector*> rest;
  for (const auto& v : t.vectors) {
    if (v.size() < 2) throw Error(ErrorKind::malformed_triple, "triple vectors are too short");
    if (v[0] == 0) {
      if (pd != nullptr) throw Error(ErrorKind::malformed_triple, "two vectors with first bit 0");
      pd = &v;
    } else {
      rest.push_back(&v);
    }
  }
  if (pd == nullptr) throw Error(ErrorKind::malformed_triple, "no vector with first bit 0");
  return ordered(decode(*rest[0], *pd), decode(*rest[1], *pd));
}

std::pair<std::string, std::string> reconstruct_from_image(const std::vector<ParityVector>& image) {
  if (image.size() == 3) {
    return reconstruct_omega(InvariantTriple::from({image[0], image[1], image[2]}));
  }
  if (image.size() == 1 && image[0].size() >= 2 && image[0][0] == 1) {
    std::string s = decode(image[0], ParityVector::zero(image[0].size()));
    return {s, s};
  }
  throw Error(ErrorKind::malformed_triple, "image must have one or three nonzero elements");
}

std::string Verdict::to_string() const {
  return equivalent ? "EQUIVALENT (consistent up to depth " + std::to_string(depth) + ")" : "DISTINCT";
}

Verdict distinguish(const OmegaSeq& omega, const OmegaSeq& eta, std::size_t depth) {
  return {parity_image(omega, depth) == parity_image(eta, depth), depth};
}

}  // namespace tg
