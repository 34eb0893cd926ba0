#pragma once

#include "sg/words.hpp"

namespace sg {

// Combinatorial dim Hom between the modules of two tagged admissible words:
// weighted count of common subword pairs (equal or mutually inverse spans
// with strict letter comparisons at the span ends, tags matched where a span
// touches a special end).
int hom_dim_words(const Words& ws, const TaggedWord& a, const TaggedWord& b);

// One-sided tagged intersection contribution: Hom into the rotated word.
int black_int(const Words& ws, const TaggedWord& a, const TaggedWord& b);

// Symmetrized tagged intersection number.
int int_number(const Words& ws, const TaggedWord& a, const TaggedWord& b);

// Gentle-case wrapper: only defined when there are no special vertices.
int int_number_gentle(const Words& ws, const TaggedWord& a,
                      const TaggedWord& b);

// Per-direction totals, with the part coming from pairs that touch special
// ends (tag-weighted) singled out.
struct IntBreakdown {
  int black_ab = 0, tagged_ab = 0;
  int black_ba = 0, tagged_ba = 0;
  int total() const { return black_ab + black_ba; }
};
IntBreakdown int_breakdown(const Words& ws, const TaggedWord& a,
                           const TaggedWord& b);

}  // namespace sg
