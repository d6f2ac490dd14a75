#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "treegroups/errors.hpp"
#include "treegroups/quotient.hpp"

using namespace tg;

namespace {

const OmegaSeq k012 = OmegaSeq::parse("(012)");

std::size_t bfs_order(const LevelQuotient& q, std::size_t cap = 1'000'000) {
  std::vector<oracle::Perm> gens(q.perms().begin(), q.perms().end());
  return oracle::enumerate_group(gens, q.points(), cap);
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("permutation basics") {
  Perm g = {1, 2, 0};
  Perm h = {0, 2, 1};
  CHECK(compose(g, h) == Perm{1, 0, 2});
  CHECK(is_identity(compose(g, invert(g))));
}

TEST_CASE("generator permutations") {
  auto q1 = build_quotient(g_generators(k012), 1);
  CHECK(q1.perms()[0] == Perm{1, 0});
  for (int i = 1; i < 4; ++i) CHECK(is_identity(q1.perms()[i]));
  auto q2 = build_quotient(g_generators(k012), 2);
  // With ω₁ = 0, b and c swap below 0 only and d moves nothing until level 3.
  CHECK(cycle_string(q2.perms()[1], 2) == "(00 01)");
  CHECK(cycle_string(q2.perms()[2], 2) == "(00 01)");
  CHECK(cycle_string(q2.perms()[3], 2) == "()");
  auto q3 = build_quotient(g_generators(k012), 3);
  CHECK(cycle_string(q3.perms()[3], 3) == "(100 101)");
  CHECK(cycle_string(q2.perms()[0], 2) == "(00 10)(01 11)");
  auto empty = build_quotient({}, 3);
  CHECK(group_order(empty) == 1);
  CHECK(q3.to_json()["generators"]["d"] == "(100 101)");
  CHECK_THROWS_AS(build_quotient(g_generators(k012), 15), Error);
  CHECK_THROWS_AS(build_quotient(g_generators(k012), 0), Error);
}

TEST_CASE("threaded build matches the serial reference and the oracle") {
  for (const char* p : {"(012)", "(0112)", "2(10)"}) {
    auto om = OmegaSeq::parse(p);
    std::vector<Word> gens = g_generators(om);
    gens.emplace_back("abacd", om);
    for (unsigned n = 1; n <= 10; ++n) {
      auto a = build_quotient(gens, n);
      auto b = build_quotient_serial(gens, n);
      CHECK(a.perms() == b.perms());
      if (n <= 6) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
          CHECK(a.perms()[k] == oracle::perm_of(gens[k].to_string(), om.prefix_string(n), n));
        }
      }
    }
  }
}

TEST_CASE("inverse system compatibility") {
  for (unsigned n = 2; n <= 8; ++n) {
    auto hi = build_quotient(g_generators(k012), n);
    auto lo = build_quotient(g_generators(k012), n - 1);
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::uint32_t x = 0; x < hi.points(); ++x) CHECK((hi.perms()[k][x] >> 1) == lo.perms()[k][x >> 1]);
    }
  }
}

TEST_CASE("orbits and transitivity") {
  auto q = build_quotient(l_generators(k012), 3);
  CHECK(orbit(q, VertexPath::parse("000")).size() == 8);
  auto qd = build_quotient({Word("d", k012)}, 1);
  CHECK(orbit(qd, VertexPath::parse("0")).size() == 1);
  auto qa = build_quotient({Word("a", k012)}, 1);
  CHECK(orbit(qa, VertexPath::parse("0")).size() == 2);
  CHECK_THROWS_AS(orbit(q, VertexPath::parse("00")), Error);
  CHECK_FALSE(is_level_transitive({Word("d", k012)}, 1));
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(is_level_transitive(l_generators(k012), n));
    CHECK(is_level_transitive(g_generators(k012), n));
  }
  for (const char* p : {"(0112)", "(210)", "1(021)"}) {
    for (unsigned n = 1; n <= 10; ++n) CHECK(is_level_transitive(l_generators(OmegaSeq::parse(p)), n));
  }
}

TEST_CASE("group orders agree with enumeration") {
  CHECK(group_order(build_quotient(g_generators(k012), 1)) == 2);
  CHECK(group_order(build_quotient(g_generators(k012), 2)) == 8);
  for (const char* p : {"(012)", "(0112)", "(01)", "(2)"}) {
    auto om = OmegaSeq::parse(p);
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& gens : {g_generators(om), l_generators(om)}) {
        auto q = build_quotient(gens, n);
        const std::size_t bfs = bfs_order(q);
        if (bfs != 0) CHECK(q.order() == bfs);
      }
    }
  }
  // Random permutation groups on a few points.
  std::mt19937 rng(43);
  for (int t = 0; t < 30; ++t) {
    const std::size_t deg = 3 + rng() % 5;
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      Perm p = identity_perm(deg);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    StabilizerChain chain(deg, gens);
    std::vector<oracle::Perm> og(gens.begin(), gens.end());
    CHECK(chain.order() == oracle::enumerate_group(og, deg, 10'000));
  }
}

TEST_CASE("orders grow and the index settles at 2") {
  boost::multiprecision::cpp_int prev = 1;
  for (unsigned n = 1; n <= 6; ++n) {
    auto o = build_quotient(g_generators(k012), n).order();
    CHECK(o >= prev);
    prev = o;
  }
  CHECK(index_in_quotient(k012, 1) == 1);
  for (unsigned n = 2; n <= 6; ++n) CHECK(index_in_quotient(k012, n) == 2);
}

TEST_CASE("level stabilizers") {
  CHECK(fixes_level(Word("abab", k012), 1));
  CHECK_FALSE(fixes_level(Word("a", k012), 1));
  CHECK_FALSE(fixes_level(Word("abab", k012), 2));
}

TEST_CASE("rigid stabilizer witnesses") {
  auto r1 = rist_search(k012, VertexPath::parse("1"));
  CHECK(r1.word.to_string() == "d");
  auto r0 = rist_search(k012, VertexPath::parse("0"));
  CHECK(r0.word.to_string() == "ada");
  CHECK(r0.lword.to_string() == "A D A^-1");
  // With ω₁ = 1, d moves vertices below 0, so the first witness is longer.
  auto r = rist_search(OmegaSeq::parse("(120)"), VertexPath::parse("1"), 8);
  CHECK(r.lword.size() > 1);
  CHECK(r.lword.to_string() == "A A D A A D");
  // Oracle: fixed outside u to a finite depth, and moving something below u.
  const std::string s = OmegaSeq::parse("(120)").prefix_string(10);
  bool moves_below = false;
  for (std::uint32_t i = 0; i < 512; ++i) {
    auto v = oracle::vertex(i, 9);
    auto img = oracle::act(r.word.to_string(), s, v);
    if (v[0] == '0') CHECK(img == v);
    else moves_below = moves_below || img != v;
  }
  CHECK(moves_below);
  try {
    rist_search(k012, VertexPath::parse("00"), 1);
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_found);
  }
}

}
