#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sg/algebra.hpp"

namespace sg {

// A triangulated-surface style description: boundary circles with marked
// points in counterclockwise order (a circle with none is an unmarked hole),
// punctures, labelled arcs between marked points, per-point fans giving the
// cyclic position of the arc ends with the connecting arrows annotated
// inline, and enclose lines declaring which loop arc wraps which puncture.
struct Surface {
  struct Boundary {
    std::string name;
    std::vector<std::string> marked;
    int line = 0;
  };
  struct ArcDef {
    std::string label;  // numeric: becomes the algebra vertex
    std::string p0, p1;
    int line = 0;
  };
  struct FanEntry {
    std::string arc;
    int end = 0;  // 0 = first endpoint, 1 = second
  };
  struct Fan {
    std::string point;
    std::vector<FanEntry> entries;
    std::vector<std::string> arrows;  // between consecutive entries; "" = none
    int line = 0;
  };
  struct Enclose {
    std::string arc, puncture;
    int line = 0;
  };

  std::vector<Boundary> boundaries;
  std::vector<std::string> punctures;
  std::vector<ArcDef> arcs;
  std::vector<Fan> fans;
  std::vector<Enclose> encloses;

  enum class FaceType { Empty, CircleMonogon, CircleDigon, PunctureMonogon,
                        Other, Hole };
  struct Face {
    std::vector<int> darts;
    FaceType type = FaceType::Other;
    std::string note;  // puncture or circle name when applicable
  };

  // filled by validate()
  std::vector<Face> faces;

  static Surface parse(std::istream& in);
  static Surface parse_file(const std::string& path);

  // Checks the combinatorics (fans cover the arc ends, genus zero, each
  // puncture alone in its monogon, unmarked circles placeable) and fills the
  // face list. Throws ValidationError.
  void validate();

  // The tiling algebra: one vertex per arc, arrows along fans, relations
  // when consecutive arrows pass an arc on different ends, special vertices
  // from enclosing loops. Requires validate().
  AlgebraInput algebra_input() const;

  std::string summary() const;  // deterministic face/region report
};

}  // namespace sg
