#pragma once

#include <vector>

#include "sg/repr.hpp"

namespace sg {

// Linear-algebra Hom functor: families (F_v) with F N_a = M_a F ... i.e.
// intertwiners F: X -> Y, F_{t(a)} X_a = Y_a F_{s(a)} for every arrow.
int hom_dim_linear(const Algebra& a, const Module& x, const Module& y);

// Basis of Hom(X, Y) as per-vertex matrix families.
std::vector<std::vector<Matrix>> hom_basis(const Algebra& a, const Module& x,
                                           const Module& y);

int end_dim(const Algebra& a, const Module& m);

// Endomorphism ring local with scalar residue field (trace-form radical of
// the regular representation has corank 1). Zero module: false.
bool is_indecomposable(const Algebra& a, const Module& m);

}  // namespace sg
