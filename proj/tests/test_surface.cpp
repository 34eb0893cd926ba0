#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>

#include "sg/common.hpp"
#include "sg/io.hpp"
#include "sg/surface.hpp"

using namespace sg;
using doctest::Contains;

static Surface from_file(const std::string& name) {
  Surface s =
      Surface::parse_file(std::string(TEST_DATA_DIR) + "/" + name);
  s.validate();
  return s;
}

static Surface from_text(const std::string& text) {
  std::istringstream in(text);
  Surface s = Surface::parse(in);
  s.validate();
  return s;
}

static std::string algebra_text(const Surface& s) {
  return write_algebra(Algebra::build(s.algebra_input()).to_input());
}

static std::string file_algebra_text(const std::string& name) {
  return write_algebra(
      Algebra::build(parse_algebra_file(std::string(TEST_DATA_DIR) + "/" +
                                        name))
          .to_input());
}

static const char* kToy =
    "boundary B m\n"
    "puncture p\n"
    "arc 1 m m\n"
    "fan m : 1.end0 [e1] 1.end1\n"
    "enclose 1 p\n";

TEST_CASE("running example surface") {
  Surface s = from_file("ex6.surf");
  CHECK(s.summary() ==
        "face 0 sides 1 puncture p\n"
        "face 1 sides 2 two-sided circle Bu2\n"
        "face 2 sides 4 empty\n"
        "face 3 sides 4 empty\n"
        "face 4 sides 3 empty\n"
        "face 5 sides 1 one-sided circle Bu1\n"
        "face 6 sides 3 empty\n"
        "face 7 sides 2 hole Bout\n"
        "face 8 sides 2 hole Bin\n");
  REQUIRE(s.faces.size() == 9);
  CHECK(s.faces[0].type == Surface::FaceType::PunctureMonogon);
  CHECK(s.faces[0].note == "p");
  CHECK(s.faces[1].type == Surface::FaceType::CircleDigon);
  CHECK(s.faces[1].note == "Bu2");
  CHECK(s.faces[5].type == Surface::FaceType::CircleMonogon);
  CHECK(s.faces[5].note == "Bu1");
  CHECK(s.faces[7].type == Surface::FaceType::Hole);
  CHECK(s.faces[8].type == Surface::FaceType::Hole);
  for (int i : {2, 3, 4, 6})
    CHECK(s.faces[i].type == Surface::FaceType::Empty);

  // the derived algebra is exactly the one in the fixture file
  CHECK(algebra_text(s) == file_algebra_text("ex6.alg"));

  // determinism
  Surface again = from_file("ex6.surf");
  CHECK(again.summary() == s.summary());
  CHECK(algebra_text(again) == algebra_text(s));
}

TEST_CASE("disk with an enclosed puncture") {
  Surface s = from_file("toy1.surf");
  CHECK(s.summary() ==
        "face 0 sides 1 puncture p\n"
        "face 1 sides 2 empty\n"
        "face 2 sides 1 hole B\n");
  CHECK(algebra_text(s) == file_algebra_text("toy1.alg"));
  CHECK(algebra_text(from_text(kToy)) == file_algebra_text("toy1.alg"));
}

TEST_CASE("plain annulus") {
  Surface s = from_file("annulus.surf");
  CHECK(s.summary() ==
        "face 0 sides 4 empty\n"
        "face 1 sides 1 hole Bout\n"
        "face 2 sides 1 hole Bin\n");
  CHECK(algebra_text(s) == file_algebra_text("a1.alg"));
}

TEST_CASE("surface validation failures") {
  // puncture with no enclosing loop: its face holds more than the puncture
  CHECK_THROWS_WITH_AS(from_text("boundary B m\n"
                                 "puncture p\n"
                                 "arc 1 m m\n"
                                 "fan m : 1.end0 [e1] 1.end1\n"),
                       Contains("not enclosed"), ValidationError);
  // fan misses an arc end
  CHECK_THROWS_WITH_AS(from_text("boundary B m\n"
                                 "arc 1 m m\n"
                                 "fan m : 1.end0\n"),
                       Contains("appears in no fan"), ValidationError);
  // unknown marked point
  CHECK_THROWS_WITH_AS(from_text("boundary B m\n"
                                 "arc 1 m mx\n"
                                 "fan m : 1.end0\n"),
                       Contains("not a marked point"), ValidationError);
  // an extra unmarked circle with no one- or two-sided face to live in
  CHECK_THROWS_WITH_AS(from_text("boundary Bout m1\n"
                                 "boundary Bin m2\n"
                                 "boundary Bu1\n"
                                 "arc 1 m1 m2\n"
                                 "fan m1 : 1.end0\n"
                                 "fan m2 : 1.end1\n"),
                       Contains("no face left for unmarked circle Bu1"),
                       ValidationError);
  // arc labels become algebra vertices: numbers only
  CHECK_THROWS_WITH_AS(from_text("boundary B m\n"
                                 "arc x m m\n"
                                 "fan m : x.end0 x.end1\n"),
                       Contains("not numeric"), ValidationError);
  // two disks, nothing joining them
  CHECK_THROWS_WITH_AS(from_text("boundary B1 m1 n1\n"
                                 "boundary B2 m2 n2\n"
                                 "arc 1 m1 n1\n"
                                 "arc 2 m2 n2\n"
                                 "fan m1 : 1.end0\n"
                                 "fan n1 : 1.end1\n"
                                 "fan m2 : 2.end0\n"
                                 "fan n2 : 2.end1\n"),
                       Contains("not connected"), ValidationError);
  // the enclosing loop's ends must sit side by side around the point
  CHECK_THROWS_WITH_AS(from_text("boundary B m\n"
                                 "puncture p\n"
                                 "arc 1 m m\n"
                                 "arc 2 m m\n"
                                 "fan m : 1.end0 [e1] 2.end0 [x] 1.end1 [y] "
                                 "2.end1\n"
                                 "enclose 1 p\n"),
                       Contains("adjacent in the fan"), ValidationError);
  // enclose must name a loop and a known puncture, once each
  CHECK_THROWS_WITH_AS(from_text("boundary B m n\n"
                                 "puncture p\n"
                                 "arc 1 m n\n"
                                 "fan m : 1.end0\n"
                                 "fan n : 1.end1\n"
                                 "enclose 1 p\n"),
                       Contains("not a loop"), ValidationError);
  CHECK_THROWS_WITH_AS(from_text("boundary B m\n"
                                 "arc 1 m m\n"
                                 "fan m : 1.end0 [e1] 1.end1\n"
                                 "enclose 1 q\n"),
                       Contains("unknown puncture"), ValidationError);
}

TEST_CASE("algebra extraction failures") {
  // consecutive ordinary fan entries need an arrow name
  Surface s = from_text("boundary Bout m1\n"
                        "boundary Bin m2\n"
                        "arc 1 m1 m2\n"
                        "arc 2 m1 m2\n"
                        "fan m1 : 1.end0 2.end0\n"
                        "fan m2 : 2.end1 [x] 1.end1\n");
  CHECK_THROWS_WITH_AS(s.algebra_input(), Contains("missing arrow name"),
                       ValidationError);
  // the loop around a puncture must carry the reserved name
  Surface t = from_text("boundary B m\n"
                        "puncture p\n"
                        "arc 1 m m\n"
                        "fan m : 1.end0 [q] 1.end1\n"
                        "enclose 1 p\n");
  CHECK_THROWS_WITH_AS(t.algebra_input(), Contains("must be named e1"),
                       ValidationError);
}

TEST_CASE("surface parse errors carry line numbers") {
  auto parse_text = [](const std::string& text) {
    std::istringstream in(text);
    return Surface::parse(in);
  };
  CHECK_THROWS_WITH_AS(parse_text("boundary B m\nbogus 1\n"),
                       Contains("unknown keyword"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text("fan m 1.end0\n"), Contains("fan syntax"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_text("boundary B m\nfan m : 1.endX\n"),
                       Contains("end0 or end1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text("boundary B m\nfan m : [x] 1.end0\n"),
                       Contains("misplaced"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text("boundary B m\nfan m : 1.end0 [x]\n"),
                       Contains("after the last fan entry"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text("arc 1 m\n"), Contains("two endpoints"),
                       ParseError);
  try {
    parse_text("boundary B m\n\nenclose 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  // comments and blank lines are fine
  CHECK_NOTHROW(from_text(std::string("# comment\n\n") + kToy));
}
