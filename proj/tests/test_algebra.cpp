#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sg/algebra.hpp"
#include "sg/common.hpp"
#include "sg/io.hpp"

using namespace sg;

static std::string data(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

static Algebra load(const std::string& name) {
  return Algebra::build(parse_algebra_file(data(name)));
}

static Algebra from_text(const std::string& text) {
  std::istringstream in(text);
  return Algebra::build(parse_algebra(in));
}

// The sign rules that make the letter order work: opposite sigma on a shared
// source, opposite tau on a shared target, and sigma = +-tau across a
// junction depending on whether the composite is a relation.
static void check_sign_rules(const Algebra& a) {
  int n = a.num_arrows();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Arrow &ax = a.arrow(x), &ay = a.arrow(y);
      if (x != y && ax.source == ay.source) CHECK(a.sigma(x) == -a.sigma(y));
      if (x != y && ax.target == ay.target) CHECK(a.tau(x) == -a.tau(y));
      if (ay.target == ax.source) {
        if (a.relation(x, y))
          CHECK(a.sigma(x) == a.tau(y));
        else
          CHECK(a.sigma(x) == -a.tau(y));
      }
    }
  }
}

TEST_CASE("ex6 quiver structure") {
  Algebra a = load("ex6.alg");
  CHECK(a.vertices() == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(a.special_vertices() == std::vector<int>{1});
  CHECK(a.num_arrows() == 10);
  std::vector<std::string> names;
  for (const Arrow& ar : a.arrows()) names.push_back(ar.name);
  CHECK(names == std::vector<std::string>{"a", "b", "c", "d", "e", "e1", "e5",
                                          "f", "g", "h"});
  auto ends = [&](const char* n) {
    const Arrow& ar = a.arrow(a.arrow_index(n));
    return std::pair{ar.source, ar.target};
  };
  CHECK(ends("a") == std::pair{1, 2});
  CHECK(ends("b") == std::pair{2, 1});
  CHECK(ends("c") == std::pair{3, 2});
  CHECK(ends("d") == std::pair{3, 4});
  CHECK(ends("e") == std::pair{4, 5});
  CHECK(ends("e5") == std::pair{5, 5});
  CHECK(ends("f") == std::pair{6, 4});
  CHECK(ends("g") == std::pair{6, 7});
  CHECK(ends("h") == std::pair{2, 7});
  for (const Arrow& ar : a.arrows()) CHECK(ar.special == (ar.name == "e1"));
  CHECK(a.special_loop(1) == a.arrow_index("e1"));
  CHECK(a.is_special_vertex(1));
  CHECK(!a.is_special_vertex(5));
  CHECK(a.vertex_index(3) == 2);
  CHECK(a.arrow_index("nope") == -1);
  CHECK(!a.has_vertex(8));
}

TEST_CASE("ex6 relations") {
  Algebra a = load("ex6.alg");
  auto ix = [&](const char* n) { return a.arrow_index(n); };
  std::set<std::pair<int, int>> want{{ix("a"), ix("b")},
                                     {ix("b"), ix("a")},
                                     {ix("e"), ix("d")},
                                     {ix("e5"), ix("e5")},
                                     {ix("h"), ix("c")}};
  CHECK(a.declared_relations() == want);
  CHECK(a.relation(ix("a"), ix("b")));
  CHECK(a.relation(ix("h"), ix("c")));
  CHECK(a.relation(ix("e5"), ix("e5")));
  // special loop: only its own square counts as a relation
  CHECK(a.relation(ix("e1"), ix("e1")));
  CHECK(!a.relation(ix("a"), ix("e1")));
  CHECK(!a.relation(ix("e1"), ix("b")));
  // composable but relation-free
  CHECK(!a.relation(ix("b"), ix("c")));
  CHECK(!a.relation(ix("h"), ix("a")));
  CHECK(!a.relation(ix("f"), ix("g")));
}

TEST_CASE("ex6 sign assignment") {
  Algebra a = load("ex6.alg");
  auto sg = [&](const char* n) { return a.sigma(a.arrow_index(n)); };
  auto ta = [&](const char* n) { return a.tau(a.arrow_index(n)); };
  CHECK(sg("a") == 1);
  CHECK(sg("b") == 1);
  CHECK(sg("c") == 1);
  CHECK(sg("d") == -1);
  CHECK(sg("e") == 1);
  CHECK(sg("e1") == -1);
  CHECK(sg("e5") == -1);
  CHECK(sg("f") == 1);
  CHECK(sg("g") == -1);
  CHECK(sg("h") == -1);
  CHECK(ta("a") == 1);
  CHECK(ta("b") == 1);
  CHECK(ta("c") == -1);
  CHECK(ta("d") == 1);
  CHECK(ta("e") == 1);
  CHECK(ta("e1") == -1);
  CHECK(ta("e5") == -1);
  CHECK(ta("f") == -1);
  CHECK(ta("g") == 1);
  CHECK(ta("h") == -1);
  check_sign_rules(a);
}

TEST_CASE("ex6 path basis") {
  Algebra a = load("ex6.alg");
  CHECK(a.dimension() == 30);
  CHECK(a.max_path_length() == 5);
  auto basis = a.path_basis();
  CHECK(basis.size() == 30);
  std::vector<int> by_len(6, 0);
  for (const AlgPath& p : basis) by_len[p.arrows.size()]++;
  CHECK(by_len == std::vector<int>{7, 10, 6, 4, 2, 1});
  // all six relation-free paths of length two; a path [x, y] applies x first
  auto ix = [&](const char* n) { return a.arrow_index(n); };
  std::set<std::vector<int>> two, want{{ix("c"), ix("b")},  // bc
                                       {ix("a"), ix("h")},  // ha
                                       {ix("e1"), ix("a")}, // ae1
                                       {ix("b"), ix("e1")}, // e1b
                                       {ix("f"), ix("e")},  // ef
                                       {ix("e"), ix("e5")}}; // e5e
  for (const AlgPath& p : basis)
    if (p.arrows.size() == 2) two.insert(p.arrows);
  CHECK(two == want);
  // the unique longest path
  for (const AlgPath& p : basis)
    if (p.arrows.size() == 5)
      CHECK(p.arrows == std::vector<int>{ix("c"), ix("b"), ix("e1"), ix("a"),
                                         ix("h")});
  // deterministic: trivial paths first, in vertex order
  for (int i = 0; i < 7; ++i) {
    CHECK(basis[i].arrows.empty());
    CHECK(basis[i].vertex == a.vertices()[i]);
  }
}

TEST_CASE("split idempotents") {
  Algebra a = load("ex6.alg");
  auto idems = a.split_idempotents();
  std::vector<std::string> labels;
  for (const SplitIdem& f : idems) labels.push_back(f.label());
  CHECK(labels == std::vector<std::string>{"1+", "1-", "2", "3", "4", "5", "6",
                                           "7"});
  CHECK(idems[0].kind == IdemKind::Plus);
  CHECK(idems[1].kind == IdemKind::Minus);
  CHECK(idems[2].kind == IdemKind::Plain);
}

TEST_CASE("flipped sign component is an equally valid assignment") {
  Algebra a = load("ex6.alg");
  const SignAssignment& s = a.signs();
  REQUIRE(s.num_components >= 1);
  for (int c = 0; c < s.num_components; ++c) {
    Algebra b = a.with_flipped_component(c);
    bool changed = false;
    for (int i = 0; i < a.num_arrows(); ++i) {
      int fs = s.component[2 * i] == c ? -1 : 1;
      int ft = s.component[2 * i + 1] == c ? -1 : 1;
      CHECK(b.sigma(i) == fs * a.sigma(i));
      CHECK(b.tau(i) == ft * a.tau(i));
      changed = changed || fs < 0 || ft < 0;
    }
    CHECK(changed);
    check_sign_rules(b);
    CHECK(b.dimension() == a.dimension());
    CHECK(b.declared_relations() == a.declared_relations());
  }
}

TEST_CASE("small algebras") {
  Algebra toy = load("toy1.alg");
  CHECK(toy.dimension() == 2);
  CHECK(toy.num_arrows() == 1);
  CHECK(toy.arrow(0).name == "e1");
  CHECK(toy.arrow(0).special);
  CHECK(toy.sigma(0) == 1);
  CHECK(toy.tau(0) == 1);
  check_sign_rules(toy);

  Algebra two = load("twosp.alg");
  CHECK(two.dimension() == 8);
  auto sg = [&](const char* n) { return two.sigma(two.arrow_index(n)); };
  auto ta = [&](const char* n) { return two.tau(two.arrow_index(n)); };
  CHECK((sg("a") == 1 && ta("a") == 1));
  CHECK((sg("e1") == -1 && ta("e1") == -1));
  CHECK((sg("e2") == -1 && ta("e2") == -1));
  check_sign_rules(two);

  CHECK(load("a1.alg").dimension() == 1);
  CHECK(load("a2.alg").dimension() == 3);
  CHECK(load("a3.alg").dimension() == 6);
}

TEST_CASE("rejects inputs that are not skew-gentle") {
  // three parallel arrows: vertex degree too high
  CHECK_THROWS_AS(from_text("vertices 1 2\narrow x 1 2\narrow y 1 2\n"
                            "arrow z 1 2\n"),
                  ValidationError);
  // two relation-free continuations of the same arrow
  CHECK_THROWS_AS(
      from_text("vertices 1 2 3 4\narrow b 1 2\narrow c 2 3\narrow d 2 4\n"),
      ValidationError);
  // two relations ending the same arrow
  CHECK_THROWS_AS(from_text("vertices 1 2 3\narrow a 1 2\narrow b 2 3\n"
                            "arrow c 2 1\nrel b a\nrel c a\n"),
                  ValidationError);
  // ordinary loop without its square relation: infinite dimensional
  CHECK_THROWS_AS(from_text("vertices 1\narrow l 1 1\n"), ValidationError);
  // relation endpoints do not compose
  CHECK_THROWS_AS(
      from_text("vertices 1 2 3\narrow a 1 2\narrow c 1 3\nrel c a\n"),
      ValidationError);
  // relation mentions an unknown arrow
  CHECK_THROWS_AS(from_text("vertices 1\nspecial 1\nrel p q\n"),
                  ValidationError);
  // relation may not involve a special loop
  CHECK_THROWS_AS(
      from_text("vertices 1 2\nspecial 1\narrow a 1 2\nrel a e1\n"),
      ValidationError);
  // special vertex must be a vertex
  CHECK_THROWS_AS(from_text("vertices 1\nspecial 2\n"), ValidationError);
  // declared arrow collides with the implied special loop name
  CHECK_THROWS_AS(from_text("vertices 1\nspecial 1\narrow e1 1 1\n"),
                  ValidationError);
  // duplicates
  CHECK_THROWS_AS(
      from_text("vertices 1 2\narrow a 1 2\narrow a 2 1\n"), ValidationError);
  CHECK_THROWS_AS(from_text("vertices 1 1\n"), ValidationError);
  // arrow endpoint is not a vertex
  CHECK_THROWS_AS(from_text("vertices 1\narrow a 1 2\n"), ValidationError);
}

TEST_CASE("text format round trips") {
  Algebra a = load("ex6.alg");
  std::string canon = write_algebra(a.to_input());
  CHECK(canon ==
        "vertices 1 2 3 4 5 6 7\n"
        "special 1\n"
        "arrow a 1 2\n"
        "arrow b 2 1\n"
        "arrow c 3 2\n"
        "arrow d 3 4\n"
        "arrow e 4 5\n"
        "loop e5 5\n"
        "arrow f 6 4\n"
        "arrow g 6 7\n"
        "arrow h 2 7\n"
        "rel a b\n"
        "rel b a\n"
        "rel e d\n"
        "rel e5 e5\n"
        "rel h c\n");
  std::istringstream back(canon);
  CHECK(write_algebra(Algebra::build(parse_algebra(back)).to_input()) == canon);
  // to_input omits the implied special loop
  for (const Arrow& ar : a.to_input().arrows) CHECK(!ar.special);

  // comments and blank lines are ignored
  std::istringstream sloppy("# header\n\nvertices 1  \n # tail\nspecial 1\n");
  CHECK(Algebra::build(parse_algebra(sloppy)).dimension() == 2);

  std::istringstream bad1("vertices 1\nbogus 1\n");
  CHECK_THROWS_AS(parse_algebra(bad1), ParseError);
  std::istringstream bad2("vertices 1\narrow a 1\n");
  CHECK_THROWS_AS(parse_algebra(bad2), ParseError);
  std::istringstream bad3("vertices x\n");
  CHECK_THROWS_AS(parse_algebra(bad3), ParseError);
  try {
    std::istringstream again("vertices 1\nbogus 1\n");
    parse_algebra(again);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}
