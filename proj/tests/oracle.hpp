#pragma once

// Independent reference implementations used to check the library. They work
// on plain strings straight from the generator definitions and share no code
// with the library's recursion engine.

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Sequence symbols as digits, position 0 = ω₁. Long enough for the depth used.
inline std::string unroll(const std::string& prefix, const std::string& period, std::size_t n) {
  std::string s = prefix;
  while (s.size() < n) s += period;
  return s.substr(0, n);
}

// Row entry for generator x ∈ {b,c,d} at symbol s: true means `a`.
inline bool row(char x, char s) {
  if (x == 'b') return s != '2';
  if (x == 'c') return s != '1';
  return s != '0';
}

// Image of vertex v (bit string) under one letter, reading ω from `omega`.
//   a(0v) = 1v, a(1v) = 0v
//   x(0v) = 0·row_x(ω₁)(v),  x(1v) = 1·x_{σω}(v)
inline std::string act_letter(char x, const std::string& omega, std::string v) {
  if (v.empty() || x == 'e') return v;
  if (x == 'a') {
    v[0] = v[0] == '0' ? '1' : '0';
    return v;
  }
  std::size_t i = 0;
  while (true) {
    if (i >= v.size()) return v;
    if (v[i] == '0') {
      if (i + 1 < v.size() && row(x, omega[i])) v[i + 1] = v[i + 1] == '0' ? '1' : '0';
      return v;
    }
    ++i;  // x(1w) = 1 x_{σω}(w)
  }
}

// Left action: the rightmost letter acts first.
inline std::string act(const std::string& word, const std::string& omega, std::string v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act_letter(*it, omega, v);
  return v;
}

// Recursive restatement of act_letter, used to cross-check it.
inline std::string act_letter_rec(char x, const std::string& omega, const std::string& v) {
  if (v.empty()) return v;
  if (x == 'a') return std::string(1, v[0] == '0' ? '1' : '0') + v.substr(1);
  if (v[0] == '1') return "1" + act_letter_rec(x, omega.substr(1), v.substr(1));
  std::string rest = v.substr(1);
  if (row(x, omega[0])) rest = act_letter_rec('a', omega.substr(1), rest);
  return "0" + rest;
}

inline std::string vertex(std::uint32_t index, unsigned level) {
  std::string s(level, '0');
  for (unsigned j = 0; j < level; ++j) {
    if ((index >> (level - 1 - j)) & 1U) s[j] = '1';
  }
  return s;
}

// Activity bits of levels 0..depth: vertex u is active iff g(u0) ends in 1.
inline std::vector<std::vector<int>> portrait(const std::string& word, const std::string& omega,
                                              unsigned depth) {
  std::vector<std::vector<int>> out;
  for (unsigned j = 0; j <= depth; ++j) {
    std::vector<int> lv;
    for (std::uint32_t i = 0; i < (1U << j); ++i) {
      std::string u = vertex(i, j);
      std::string img = act(word, omega, u + "0");
      lv.push_back(img.back() == '1' ? 1 : 0);
    }
    out.push_back(lv);
  }
  return out;
}

inline bool trivial_to_level(const std::string& word, const std::string& omega, unsigned level) {
  for (std::uint32_t i = 0; i < (1U << level); ++i) {
    auto v = vertex(i, level);
    if (act(word, omega, v) != v) return false;
  }
  return true;
}

using Perm = std::vector<std::uint32_t>;

inline Perm perm_of(const std::string& word, const std::string& omega, unsigned level) {
  Perm p(1U << level);
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = std::stoul(act(word, omega, vertex(i, level)), nullptr, 2);
  if (level == 0) p = {0};
  return p;
}

// Group size by closure under right multiplication by generators.
inline std::size_t enumerate_group(const std::vector<Perm>& gens, std::size_t degree, std::size_t cap) {
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm q(degree);
      for (std::uint32_t i = 0; i < degree; ++i) q[i] = p[g[i]];
      if (seen.insert(q).second) {
        if (seen.size() > cap) return 0;
        queue.push_back(std::move(q));
      }
    }
  }
  return seen.size();
}

inline std::string random_word(std::mt19937& rng, std::size_t max_len) {
  static const char letters[] = "abcd";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::string w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

}  // namespace oracle
