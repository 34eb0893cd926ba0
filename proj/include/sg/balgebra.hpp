#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sg/homlin.hpp"
#include "sg/repr.hpp"

namespace sg {

int path_target(const Algebra& a, const AlgPath& p);

// The algebra as a based vector space: basis = relation-free paths, monomial
// multiplication (a product of basis paths is 0, a basis path, or a shorter
// basis path via the idempotent rewrite of a special loop square).
class PathAlgebra {
 public:
  explicit PathAlgebra(const Algebra& a);
  const Algebra& algebra() const { return *a_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<AlgPath>& basis() const { return basis_; }
  int index(const AlgPath& p) const;  // -1 if not a basis path
  // p * q: apply q first, then p. nullopt = zero.
  std::optional<AlgPath> mul(const AlgPath& p, const AlgPath& q) const;

 private:
  const Algebra* a_;
  std::vector<AlgPath> basis_;
  std::map<std::pair<int, std::vector<int>>, int> index_;
};

// Left projective of a split idempotent with labelled basis: paths for the
// plain and special-loop-headed summands, differences p - p.eps for the
// complementary special summand.
struct ProjInfo {
  Module mod;
  std::vector<AlgPath> labels;
  std::vector<int> fiber;  // vertex index of each label's fiber
  std::vector<int> pos;    // position inside that fiber
  int gen = -1;            // label index of the canonical generator
};
ProjInfo projective_info(const PathAlgebra& pa, const SplitIdem& f);
Module projective_module(const Algebra& a, const SplitIdem& f);
Module simple_module(const Algebra& a, const SplitIdem& f);

// dim Hom(P_f, M) without linear algebra on families.
int hom_from_projective(const Algebra& a, const SplitIdem& f, const Module& m);

// Column bases of rad M = (sum of ordinary arrow images) closed under the
// special loops, one matrix of columns per vertex.
std::vector<Matrix> radical_spans(const Algebra& a, const Module& m);

// Minimal projective presentation P1 -> P0 -> M -> 0. The map is recorded as
// algebra coefficients: y[j][i] over the path basis is the component of
// d(generator of P1 summand j) inside P0 summand i.
struct Presentation {
  std::vector<SplitIdem> p0, p1;
  std::vector<std::vector<std::vector<Rat>>> y;
};
Presentation minimal_presentation(const PathAlgebra& pa, const Module& m);

// Auslander-Reiten translate via the transpose of the presentation:
// tau M = D coker(Hom(P0, A) -> Hom(P1, A)). Projectives go to zero.
Module tau_transpose(const Algebra& a, const Module& m);

// Iso-invariant signature: dimension vector, Hom dims against all split
// projectives and simples from both sides, and dim End.
std::vector<int> fingerprint(const Algebra& a, const Module& m);

}  // namespace sg
