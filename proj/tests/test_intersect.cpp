#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "sg/balgebra.hpp"
#include "sg/common.hpp"
#include "sg/homlin.hpp"
#include "sg/intersect.hpp"
#include "sg/io.hpp"
#include "sg/repr.hpp"

using namespace sg;
using doctest::Contains;

static Algebra load(const std::string& name) {
  return Algebra::build(parse_algebra_file(std::string(TEST_DATA_DIR) + "/" +
                                           name));
}

static const char* kGamma1 = "z(6,-)^- f e e5 e^- z(4,-)";
static const char* kGamma2 = "z(1,-)^- b^- z(2,-) @tags=1";
static const char* kGamma3 = "z(1,-)^- b^- c^- d f^- g h^- a^- z(1,-) @tags=0,0";
static const char* kTau3 = "z(1,-)^- b^- c^- d f^- g h^- a^- z(1,-) @tags=1,1";

TEST_CASE("reference intersection numbers") {
  Algebra a = load("ex6.alg");
  Words ws(a);
  TaggedWord g1 = ws.parse_tagged(kGamma1);
  TaggedWord g2 = ws.parse_tagged(kGamma2);
  TaggedWord g3 = ws.parse_tagged(kGamma3);

  CHECK(int_number(ws, g1, g3) == 1);
  CHECK(int_number(ws, g2, g3) == 2);
  CHECK(int_number(ws, g3, g3) == 0);

  // the directed halves: dim Hom(M_x, tau M_y)
  CHECK(black_int(ws, g1, g3) == 1);
  CHECK(black_int(ws, g2, g3) == 1);
  CHECK(black_int(ws, g3, g1) == 0);
  CHECK(black_int(ws, g3, g2) == 1);

  // more values around the same curves
  CHECK(int_number(ws, g1, g1) == 0);
  CHECK(int_number(ws, g1, g2) == 0);
  CHECK(int_number(ws, g2, g2) == 0);
  TaggedWord t3 = ws.parse_tagged(kTau3);
  CHECK(int_number(ws, g3, t3) == 4);
  CHECK(int_number(ws, g2, t3) == 0);
  TaggedWord sp = ws.parse_tagged("z(1,-)^- z(1,+) @tags=0");
  TaggedWord sm = ws.parse_tagged("z(1,-)^- z(1,+) @tags=1");
  CHECK(int_number(ws, sp, sm) == 0);
  CHECK(int_number(ws, g2, sp) == 2);
  CHECK(int_number(ws, g2, sm) == 1);
  CHECK(int_number(ws, g3, sm) == 3);
}

TEST_CASE("combinatorial hom dimension equals the linear one") {
  Algebra a = load("ex6.alg");
  Words ws(a);
  std::vector<TaggedWord> tws;
  for (const char* s :
       {kGamma1, kGamma2, kGamma3, kTau3, "z(3,-)^- c b e1 a h g^- f e e5 z(5,+)",
        "z(1,-)^- b^- h g^- z(6,+) @tags=0", "z(1,-)^- z(1,+) @tags=0",
        "z(1,-)^- z(1,+) @tags=1"})
    tws.push_back(ws.parse_tagged(s));
  std::vector<Module> mods;
  for (const auto& tw : tws) mods.push_back(build_module(ws, tw));
  for (std::size_t i = 0; i < tws.size(); ++i)
    for (std::size_t j = 0; j < tws.size(); ++j)
      CHECK(hom_dim_words(ws, tws[i], tws[j]) ==
            hom_dim_linear(a, mods[i], mods[j]));
  // a couple of frozen values
  CHECK(hom_dim_words(ws, tws[0], tws[2]) == 1);  // gamma1 -> gamma3
  CHECK(hom_dim_words(ws, tws[2], tws[2]) == 2);  // End(gamma3)
  CHECK(hom_dim_words(ws, tws[1], tws[3]) == 1);  // gamma2 -> tau gamma3
}

TEST_CASE("symmetry and consistency of the breakdown") {
  Algebra a = load("ex6.alg");
  Words ws(a);
  std::vector<TaggedWord> tws;
  for (const char* s : {kGamma1, kGamma2, kGamma3, kTau3,
                        "z(1,-)^- z(1,+) @tags=0", "z(5,+)^- e5 z(5,+)"})
    tws.push_back(ws.parse_tagged(s));
  for (const auto& x : tws) {
    for (const auto& y : tws) {
      CHECK(int_number(ws, x, y) == int_number(ws, y, x));
      IntBreakdown bd = int_breakdown(ws, x, y);
      CHECK(bd.black_ab == black_int(ws, x, y));
      CHECK(bd.black_ba == black_int(ws, y, x));
      CHECK(bd.total() == int_number(ws, x, y));
      CHECK(bd.tagged_ab <= bd.black_ab);
      CHECK(bd.tagged_ba <= bd.black_ba);
      // the words index modules: either direction of a word gives the same
      // numbers
      CHECK(int_number(ws, ws.inverse(x), y) == int_number(ws, x, y));
    }
  }
  IntBreakdown bd = int_breakdown(ws, tws[1], tws[2]);
  CHECK(bd.black_ab == 1);
  CHECK(bd.tagged_ab == 1);
  CHECK(bd.black_ba == 1);
  CHECK(bd.tagged_ba == 1);
}

TEST_CASE("two-simple examples by hand") {
  Algebra a2 = load("a2.alg");
  Words ws(a2);
  TaggedWord s1 = ws.parse_tagged("z(1,+)^- z(1,-)");
  TaggedWord s2 = ws.parse_tagged("z(2,+)^- z(2,-)");
  TaggedWord p1 = ws.parse_tagged("z(1,-)^- a z(2,-)");
  // tau S_1 = S_2, so the only crossing is S_2 -> tau S_1
  CHECK(int_number(ws, s1, s2) == 1);
  CHECK(black_int(ws, s1, s2) == 0);
  CHECK(black_int(ws, s2, s1) == 1);
  CHECK(int_number(ws, s1, s1) == 0);
  CHECK(int_number(ws, p1, s1) == 0);
  CHECK(int_number(ws, p1, s2) == 0);
  CHECK(int_number(ws, p1, p1) == 0);
}

TEST_CASE("plain wrapper for algebras without special vertices") {
  for (const char* name : {"a2.alg", "a3.alg"}) {
    Algebra a = load(name);
    Words ws(a);
    auto all = ws.enumerate_admissible(8);
    for (const auto& x : all)
      for (const auto& y : all)
        CHECK(int_number_gentle(ws, x, y) == int_number(ws, x, y));
  }
  Algebra ex = load("ex6.alg");
  Words ws(ex);
  TaggedWord s = ws.parse_tagged("z(2,+)^- z(2,-)");
  CHECK_THROWS_WITH_AS(int_number_gentle(ws, s, s),
                       Contains("without special vertices"), ValidationError);
}

TEST_CASE("totals match the linear-algebra form on all short pairs") {
  Algebra a = load("ex6.alg");
  Words ws(a);
  auto words = ws.enumerate_admissible(5);
  std::vector<Module> mods, taus;
  for (const auto& tw : words) {
    Module m = build_module(ws, tw);
    taus.push_back(tau_transpose(a, m));
    mods.push_back(std::move(m));
  }
  int checked = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      int want = hom_dim_linear(a, mods[i], taus[j]) +
                 hom_dim_linear(a, mods[j], taus[i]);
      CHECK(int_number(ws, words[i], words[j]) == want);
      ++checked;
    }
  }
  CHECK(checked >= 300);
}
