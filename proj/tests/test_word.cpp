#include <doctest.h>

#include <functional>
#include <random>

#include "oracle.hpp"
#include "treegroups/errors.hpp"
#include "treegroups/word.hpp"

using namespace tg;

namespace {

const OmegaSeq k012 = OmegaSeq::parse("(012)");

std::string digits(const OmegaSeq& w, std::size_t n) { return w.prefix_string(n); }

// Reduced words of length exactly n (alternating a / Klein letter).
void reduced_words(std::size_t n, const std::function<void(const std::string&)>& f) {
  std::function<void(std::string)> rec = [&](std::string w) {
    if (w.size() == n) {
      f(w);
      return;
    }
    if (w.empty() || w.back() != 'a') rec(w + "a");
    if (w.empty() || w.back() == 'a') {
      for (char x : {'b', 'c', 'd'}) rec(w + x);
    }
  };
  rec("");
}

std::vector<OmegaSeq> small_periods(std::size_t max_len) {
  std::vector<OmegaSeq> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::size_t x = 0; x < total; ++x) {
      std::vector<Symbol> p;
      for (std::size_t i = 0, y = x; i < len; ++i, y /= 3) p.push_back(static_cast<Symbol>(y % 3));
      out.emplace_back(std::vector<Symbol>{}, p);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("treeauto") {

TEST_CASE("reduction") {
  CHECK(Word("aa", k012).to_string() == "");
  CHECK(Word("bc", k012).to_string() == "d");
  CHECK(Word("abab", k012).to_string() == "abab");
  CHECK(Word("abba", k012).to_string() == "");
  CHECK(Word("bcd", k012).to_string() == "");
  CHECK(Word("a e b", k012).to_string() == "ab");
  CHECK(Word("abcadda", k012).to_string() == "ad");
  CHECK_THROWS_AS(Word("abx", k012), ParseError);
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    std::string raw = oracle::random_word(rng, 20);
    Word w(raw, k012);
    const auto& l = w.letters();
    for (std::size_t j = 1; j < l.size(); ++j) CHECK((l[j] == Letter::a) != (l[j - 1] == Letter::a));
    // Reduction does not change the automorphism.
    const std::string om = digits(k012, 8);
    for (std::uint32_t v = 0; v < 256; v += 7) {
      CHECK(oracle::act(raw, om, oracle::vertex(v, 8)) == oracle::act(w.to_string(), om, oracle::vertex(v, 8)));
    }
  }
}

TEST_CASE("root activity") {
  CHECK(root_active(Word("a", k012)));
  CHECK_FALSE(root_active(Word("b", k012)));
  CHECK_FALSE(root_active(Word("aba", k012)));
}

TEST_CASE("sections") {
  auto [x0, x1] = sections(Word("abab", k012));
  CHECK(x0.to_string() == "ba");
  CHECK(x1.to_string() == "ab");
  CHECK(x0.phase() == 1);
  auto [a0, a1] = sections(Word("a", k012));
  CHECK(a0.empty());
  CHECK(a1.empty());
  auto [d0, d1] = sections(Word("d", OmegaSeq::parse("(120)")));
  CHECK(d0.to_string() == "a");
  CHECK(d1.to_string() == "d");
  CHECK_THROWS_AS(sections(Word("b", OmegaSeq::parse("01"), 2)), Error);
}

TEST_CASE("action against the string oracle") {
  const auto v = [](const char* s) { return VertexPath::parse(s); };
  CHECK(act(Word("a", k012), v("01")).to_string() == "11");
  CHECK(act(Word("", k012), v("0110")).to_string() == "0110");
  // b(1v) = 1·b_{σω}(v) and b_{σω} fixes level 1, so 10 is fixed.
  CHECK(act(Word("b", k012), v("10")).to_string() == "10");
  CHECK(act(Word("b", k012), v("00")).to_string() == "01");
  CHECK(oracle::act("b", "012", "10") == "10");

  std::mt19937 rng(11);
  for (const char* text : {"(012)", "1(20)", "(0112)", "(2)", "21(0)"}) {
    auto om = OmegaSeq::parse(text);
    const std::string s = digits(om, 12);
    for (int i = 0; i < 300; ++i) {
      std::string w = oracle::random_word(rng, 12);
      std::uniform_int_distribution<unsigned> lv(0, 10);
      const unsigned n = lv(rng);
      std::uniform_int_distribution<std::uint32_t> pt(0, (1U << n) - 1);
      std::string vert = oracle::vertex(pt(rng), n);
      CHECK(act(Word(w, om), v(vert.c_str())).to_string() == oracle::act(w, s, vert));
      for (char x : {'a', 'b', 'c', 'd'}) {
        CHECK(oracle::act_letter(x, s, vert) == oracle::act_letter_rec(x, s, vert));
      }
    }
  }
  CHECK_THROWS_AS(act(Word("b", OmegaSeq::parse("01")), v("0000")), Error);
}

TEST_CASE("action is a left action") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word g(oracle::random_word(rng, 10), k012);
    Word h(oracle::random_word(rng, 10), k012);
    auto vert = VertexPath::from_index(static_cast<std::uint32_t>(rng() % 256), 8);
    CHECK(act(g * h, vert) == act(g, act(h, vert)));
  }
}

TEST_CASE("portraits") {
  auto p = portrait(Word("a", k012), 1);
  CHECK(p.active());
  CHECK(p.level(1) == std::vector<std::uint8_t>{0, 0});
  CHECK(portrait(Word("", k012), 4).all_inactive());
  CHECK(portrait(Word("a", k012), 0).is_leaf());
  auto d = portrait(Word("d", k012), 2);
  CHECK(d.level(0) == std::vector<std::uint8_t>{0});
  CHECK(d.level(1) == std::vector<std::uint8_t>{0, 0});
  CHECK(d.level(2) == std::vector<std::uint8_t>{0, 0, 1, 0});
  CHECK(d.to_json().dump() ==
        R"({"active":0,"children":[{"active":0,"children":[{"active":0,"children":null},{"active":0,"children":null}]},{"active":0,"children":[{"active":1,"children":null},{"active":0,"children":null}]}]})");
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::string w = oracle::random_word(rng, 12);
    auto q = portrait(Word(w, k012), 6);
    auto o = oracle::portrait(w, digits(k012, 10), 6);
    for (std::size_t j = 0; j <= 6; ++j) {
      for (std::size_t k = 0; k < o[j].size(); ++k) CHECK(q.level(j)[k] == o[j][k]);
    }
  }
}

TEST_CASE("section twist (gh)_u = g_{h(u)} h_u") {
  std::mt19937 rng(9);
  for (int i = 0; i < 150; ++i) {
    Word g(oracle::random_word(rng, 10), k012);
    Word h(oracle::random_word(rng, 10), k012);
    auto [gh0, gh1] = sections(g * h);
    auto [g0, g1] = sections(g);
    auto [h0, h1] = sections(h);
    const bool swap = root_active(h);
    CHECK(portrait(gh0, 6) == portrait((swap ? g1 : g0) * h0, 6));
    CHECK(portrait(gh1, 6) == portrait((swap ? g0 : g1) * h1, 6));
  }
}

TEST_CASE("section length bound") {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    Word w(oracle::random_word(rng, 30), k012);
    if (w.size() < 2) continue;
    auto [s0, s1] = sections(w);
    CHECK(s0.size() <= w.size() / 2 + 1);
    CHECK(s1.size() <= w.size() / 2 + 1);
  }
}

TEST_CASE("word problem") {
  CHECK(is_trivial(Word("bcd", k012)));
  CHECK(is_trivial(Word("", k012)));
  CHECK_FALSE(is_trivial(Word("ab", k012)));
  CHECK_FALSE(is_trivial(Word("b", k012)));
  for (const auto& om : small_periods(3)) {
    for (const char* r : {"aa", "bb", "cc", "dd", "bcd"}) {
      // Build the relator from raw letters so that reduction is not used.
      std::vector<Letter> raw;
      for (const char* p = r; *p; ++p) raw.push_back(parse_letters(std::string(1, *p)).front());
      CHECK(is_trivial(Word(raw, om)));
    }
  }
  try {
    is_trivial(Word("b", OmegaSeq::parse("012")));
    FAIL("expected exactness error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::exactness);
  }
  CHECK_FALSE(is_trivial_to_depth(Word("a", k012), 3));
  CHECK(is_trivial_to_depth(Word("aa", k012), 5));
  const auto two = OmegaSeq::parse("(2)");
  for (std::size_t n = 0; n < 8; ++n) CHECK(is_trivial_to_depth(Word("b", two), n));
}

TEST_CASE("exact triviality agrees with depth-bounded and oracle checks") {
  for (const auto& om : small_periods(3)) {
    const std::string s = digits(om, 16);
    for (std::size_t len = 0; len <= 8; len += 2) {
      reduced_words(len, [&](const std::string& w) {
        Word x(w, om);
        ClosureStats st = closure_stats(x);
        CHECK(st.trivial == is_trivial(x));
        CHECK(is_trivial(x) == is_trivial_to_depth(x, st.depth));
        if (st.depth + 1 <= 12) CHECK(is_trivial(x) == oracle::trivial_to_level(w, s, static_cast<unsigned>(st.depth + 1)));
      });
    }
  }
}

TEST_CASE("equality across sequences") {
  const auto eta = OmegaSeq::parse("(021)");
  CHECK(equal_auto(Word("b", k012), Word("c", eta)));
  CHECK(equal_auto(Word("b", k012), Word("bd", eta)));
  CHECK(equal_auto(Word("d", k012), Word("d", eta)));
  CHECK_FALSE(equal_auto(Word("a", k012), Word("b", eta)));
  Word w("abacabad", k012);
  CHECK(equal_auto(w, w));
  CHECK_THROWS_AS(equal_auto(Word("b", OmegaSeq::parse("01")), w), Error);
}

TEST_CASE("orders") {
  CHECK(order(Word("a", k012)) == 2);
  CHECK(order(Word("", k012)) == 1);
  CHECK(order(Word("ad", k012)) == 4);
  CHECK(order(Word("ab", k012)) == 16);
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    auto n = order(Word(oracle::random_word(rng, 10), k012));
    CHECK((n & (n - 1)) == 0);
  }
  // On (0) the letter b acts like the infinite dihedral generator: ab has
  // infinite order, so the cap must be reported.
  try {
    order(Word("ab", OmegaSeq::parse("(0)")), 6);
    FAIL("expected order cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::order_cap);
  }
}

TEST_CASE("metric") {
  CHECK(metric_distance(Word("a", k012), Word("", k012)).to_string() == "1");
  CHECK(metric_distance(Word("ab", k012), Word("ab", k012)).zero);
  // Oracle: the first level on which the two actions differ is m + 1.
  auto first_diff = [](const std::string& g, const std::string& h, const std::string& om) {
    for (unsigned n = 1; n <= 12; ++n) {
      for (std::uint32_t i = 0; i < (1U << n); ++i) {
        auto v = oracle::vertex(i, n);
        if (oracle::act(g, om, v) != oracle::act(h, om, v)) return n;
      }
    }
    return 0U;
  };
  const std::string s = digits(k012, 14);
  CHECK(first_diff("b", "c", s) == 3);
  CHECK(metric_distance(Word("b", k012), Word("c", k012)).to_string() == "1/4");
  std::mt19937 rng(19);
  std::vector<Word> pool;
  for (int i = 0; i < 40; ++i) pool.emplace_back(oracle::random_word(rng, 8), k012);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      auto dij = metric_distance(pool[i], pool[j]);
      CHECK(dij == metric_distance(pool[j], pool[i]));
      unsigned fd = first_diff(pool[i].to_string(), pool[j].to_string(), s);
      if (fd != 0) CHECK(dij.exponent == fd - 1);
      for (std::size_t k = 0; k < pool.size(); k += 7) {
        auto dik = metric_distance(pool[i], pool[k]);
        auto dkj = metric_distance(pool[k], pool[j]);
        if (!dij.zero && !dik.zero && !dkj.zero) CHECK(dij.exponent >= std::min(dik.exponent, dkj.exponent));
      }
    }
  }
  auto bounded = metric_distance(Word("b", OmegaSeq::parse("0120")), Word("b", OmegaSeq::parse("0120")), 3);
  CHECK(bounded.upper_bound);
  CHECK_THROWS_AS(metric_distance(Word("b", OmegaSeq::parse("01")), Word("c", OmegaSeq::parse("01"))), Error);
}

TEST_CASE("membership in L") {
  CHECK(in_L(Word("ab", k012)));
  CHECK(in_L(Word("d", k012)));
  CHECK_FALSE(in_L(Word("a", k012)));
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    Word g(oracle::random_word(rng, 12), k012);
    Word h(oracle::random_word(rng, 12), k012);
    CHECK(in_L(g * h) == (in_L(g) == in_L(h)));
  }
  // Relators lie in the kernel.
  for (const char* r : {"aa", "bb", "cc", "dd"}) {
    std::vector<Letter> raw = parse_letters(r);
    std::size_t n = 0;
    for (Letter x : raw) n += x != Letter::d;
    CHECK(n % 2 == 0);
  }
  std::size_t n = 0;
  for (Letter x : parse_letters("bcd")) n += x != Letter::d;
  CHECK(n % 2 == 0);
}

}
