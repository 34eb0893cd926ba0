#pragma once

#include <vector>

#include "sg/algebra.hpp"

namespace sg {

// Deterministic stream of small random triples for differential tests.
// Candidates that fail the shape or finiteness checks are skipped, so every
// returned input builds successfully.
std::vector<AlgebraInput> random_triples(int count, int max_vertices,
                                         unsigned seed = 0);

}  // namespace sg
