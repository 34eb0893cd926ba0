#pragma once

#include "sg/balgebra.hpp"
#include "sg/intersect.hpp"
#include "sg/repr.hpp"

namespace sg {

// A full dissection: curves (tagged admissible words) plus shifted
// projectives, |curves| + |shifted| = number of split idempotents. Encodes
// the support tau-tilting pair (direct sum of curve modules, direct sum of
// shifted projectives).
struct Dissection {
  std::vector<TaggedWord> curves;
  std::vector<SplitIdem> shifted;
};

// Canonical tagged words (length <= max_len) whose module is tau-rigid by
// the combinatorial self-intersection test.
std::vector<TaggedWord> enumerate_tau_rigid(const Words& ws, int max_len);

bool compatible_curves(const Words& ws, const TaggedWord& x,
                       const TaggedWord& y);
bool compatible_curve_shifted(const Words& ws, const TaggedWord& x,
                              const SplitIdem& f);

// All dissections over curves of bounded length, deterministic order.
std::vector<Dissection> enumerate_dissections(const Words& ws, int max_len);

// Module part of the support tau-tilting pair of a dissection.
Module dissection_module(const Words& ws, const Dissection& d);

// Independent enumeration with every check done by linear algebra:
// tau-rigidity and curve compatibility via the transpose translate,
// curve/shifted compatibility via Hom from the projective.
std::vector<Dissection> air_oracle_dissections(const Words& ws, int max_len);

// Order-free comparison: multisets of per-element signatures (module
// fingerprints for curves, labelled markers for shifted summands).
std::vector<std::vector<std::vector<int>>> dissection_signatures(
    const Words& ws, const std::vector<Dissection>& ds);
bool same_dissection_sets(const Words& ws, const std::vector<Dissection>& x,
                          const std::vector<Dissection>& y);

}  // namespace sg
