#pragma once

#include <string>
#include <vector>

#include "sg/matrix.hpp"
#include "sg/words.hpp"

namespace sg {

// Finite-dimensional left module: one dimension per vertex (algebra vertex
// order) and one matrix per arrow (algebra arrow order), M_a mapping the
// source fiber into the target fiber (rows = dim target, cols = dim source).
struct Module {
  std::vector<int> dims;
  std::vector<Matrix> mats;
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  bool operator==(const Module&) const = default;
};

Module zero_module(const Algebra& a);

// Shape check plus relation check: declared relations compose to zero and
// every special loop acts idempotently.
void validate_module(const Algebra& a, const Module& m);

Module direct_sum(const Algebra& a, const Module& x, const Module& y);

// String/band-style module of a tagged admissible word: basis element z_j at
// the target of the j-th letter (j = 1..len-1); ordinary arrows shift along
// the word, special loops act by 0/1 on the diagonal with the end tags
// deciding the action on the outermost basis elements.
Module build_module(const Words& ws, const TaggedWord& tw);

// Module of the tagged rotation: zero for a trivial rotation, the rotated
// word's module, or the direct sum of the two taggings of a split pair.
Module tau_module(const Words& ws, const TaggedWord& tw);

std::string format_module(const Algebra& a, const Module& m);

}  // namespace sg
