#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sg/common.hpp"

namespace sg {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  bool special = false;  // special loop attached to a special vertex
};

// Raw parse of an algebra description: a quiver plus special vertices plus
// quadratic monomial relations. "rel x y" names the path xy, i.e. apply y
// first, then x; it requires t(y) = s(x).
struct AlgebraInput {
  std::vector<int> vertices;
  std::vector<int> special;
  std::vector<Arrow> arrows;  // ordinary arrows/loops only
  std::vector<std::pair<std::string, std::string>> relations;
};

// One sign pair (sigma, tau) per arrow of the extended quiver.
struct SignAssignment {
  std::vector<int> sigma, tau;   // indexed by arrow, values +1/-1
  std::vector<int> component;    // constraint-graph component per variable
                                 // (variable 2*i = sigma_i, 2*i+1 = tau_i)
  int num_components = 0;
};

// A path of the extended quiver, stored in application order: arrows[0] is
// applied first. Empty arrows = the trivial path at `vertex`.
struct AlgPath {
  std::vector<int> arrows;
  int vertex = 0;  // source vertex (== s(arrows[0]) when nonempty)
};

enum class IdemKind { Plain, Plus, Minus };

// Primitive idempotent of the algebra after splitting e = eps + (e - eps) at
// special vertices.
struct SplitIdem {
  int vertex = 0;
  IdemKind kind = IdemKind::Plain;
  std::string label() const;
  bool operator==(const SplitIdem&) const = default;
};

// A validated skew-gentle triple: the extended quiver (ordinary arrows plus
// one special loop per special vertex, sorted by name), the relation set, and
// a deterministic sign assignment. Construction fails with ValidationError if
// the extended pair is not gentle or the algebra is infinite-dimensional.
class Algebra {
 public:
  static Algebra build(const AlgebraInput& in);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& special_vertices() const { return special_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(int v) const;
  bool is_special_vertex(int v) const;
  int vertex_index(int v) const;  // position in vertices()
  int arrow_index(const std::string& name) const;  // -1 if absent
  const Arrow& arrow(int idx) const { return arrows_[idx]; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  // index of the special loop at special vertex v
  int special_loop(int v) const;

  // True iff the length-2 path "apply first, then second" lies in the
  // extended relation set (declared relations plus special-loop squares).
  bool relation(int second, int first) const;
  // Declared relations only (no special-loop squares), as (second, first).
  const std::set<std::pair<int, int>>& declared_relations() const {
    return rels_;
  }

  const SignAssignment& signs() const { return signs_; }
  int sigma(int arrow) const { return signs_.sigma[arrow]; }
  int tau(int arrow) const { return signs_.tau[arrow]; }
  // Copy of this algebra with one sign-constraint component negated: an
  // equally valid assignment, used to test gauge invariance.
  Algebra with_flipped_component(int component) const;

  // Basis of the algebra: all relation-free paths (trivial paths included).
  // Deterministic order: by length, then lexicographically by arrow index.
  std::vector<AlgPath> path_basis() const;
  int dimension() const;
  // Longest relation-free path, in arrows.
  int max_path_length() const;

  std::vector<SplitIdem> split_idempotents() const;

  AlgebraInput to_input() const;

 private:
  Algebra() = default;
  void check_gentle() const;
  void check_finite_dimensional() const;
  void build_signs();

  std::vector<int> vertices_;
  std::vector<int> special_;
  std::vector<Arrow> arrows_;  // name-sorted, includes special loops
  std::set<std::pair<int, int>> rels_;  // declared, as (second, first)
  SignAssignment signs_;
};

}  // namespace sg
