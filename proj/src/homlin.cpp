#include "sg/homlin.hpp"

#include "sg/common.hpp"

namespace sg {

namespace {

// Unknowns: entries of F_v (row-major, vertices in order). Equations: for
// each arrow a, Y_a F_s - F_t X_a = 0.
Matrix intertwiner_constraints(const Algebra& a, const Module& x,
                               const Module& y, std::vector<int>& offset) {
  const int nv = static_cast<int>(a.vertices().size());
  offset.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
  const int unknowns = offset[nv];
  int rows = 0;
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    rows += y.dims[a.vertex_index(ar.target)] *
            x.dims[a.vertex_index(ar.source)];
  }
  Matrix c(rows, unknowns);
  int r = 0;
  auto idx = [&](int v, int yr, int xc) {
    return offset[v] + yr * x.dims[v] + xc;
  };
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    int sv = a.vertex_index(ar.source), tv = a.vertex_index(ar.target);
    for (int p = 0; p < y.dims[tv]; ++p)
      for (int q = 0; q < x.dims[sv]; ++q) {
        // (Y_a F_s)_{p,q} - (F_t X_a)_{p,q} = 0
        for (int k = 0; k < y.dims[sv]; ++k)
          c.at(r, idx(sv, k, q)) += y.mats[i].at(p, k);
        for (int k = 0; k < x.dims[tv]; ++k)
          c.at(r, idx(tv, p, k)) -= x.mats[i].at(k, q);
        ++r;
      }
  }
  SG_ASSERT(r == rows);
  return c;
}

}  // namespace

int hom_dim_linear(const Algebra& a, const Module& x, const Module& y) {
  std::vector<int> offset;
  Matrix c = intertwiner_constraints(a, x, y, offset);
  return c.cols() - rank(c);
}

std::vector<std::vector<Matrix>> hom_basis(const Algebra& a, const Module& x,
                                           const Module& y) {
  std::vector<int> offset;
  Matrix c = intertwiner_constraints(a, x, y, offset);
  Matrix ns = nullspace(c);
  const int nv = static_cast<int>(a.vertices().size());
  std::vector<std::vector<Matrix>> basis;
  for (int col = 0; col < ns.cols(); ++col) {
    std::vector<Matrix> fam;
    for (int v = 0; v < nv; ++v) {
      Matrix f(y.dims[v], x.dims[v]);
      for (int p = 0; p < y.dims[v]; ++p)
        for (int q = 0; q < x.dims[v]; ++q)
          f.at(p, q) = ns.at(offset[v] + p * x.dims[v] + q, col);
      fam.push_back(std::move(f));
    }
    basis.push_back(std::move(fam));
  }
  return basis;
}

int end_dim(const Algebra& a, const Module& m) {
  return hom_dim_linear(a, m, m);
}

bool is_indecomposable(const Algebra& a, const Module& m) {
  if (m.total_dim() == 0) return false;
  auto basis = hom_basis(a, m, m);
  const int d = static_cast<int>(basis.size());
  SG_ASSERT(d >= 1);
  const int nv = static_cast<int>(a.vertices().size());

  // Flatten a family into one coordinate column to solve for coordinates in
  // the endomorphism basis.
  auto flatten = [&](const std::vector<Matrix>& fam) {
    std::vector<Rat> entries;
    for (int v = 0; v < nv; ++v)
      for (int p = 0; p < fam[v].rows(); ++p)
        for (int q = 0; q < fam[v].cols(); ++q)
          entries.push_back(fam[v].at(p, q));
    Matrix col(static_cast<int>(entries.size()), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
      col.at(static_cast<int>(i), 0) = entries[i];
    return col;
  };
  Matrix bm(flatten(basis[0]).rows(), d);
  for (int j = 0; j < d; ++j) {
    Matrix col = flatten(basis[j]);
    for (int i = 0; i < col.rows(); ++i) bm.at(i, j) = col.at(i, 0);
  }
  auto coords = [&](const std::vector<Matrix>& fam) {
    auto [ok, sol] = solve(bm, flatten(fam));
    SG_ASSERT(ok);
    return sol;
  };
  auto compose = [&](const std::vector<Matrix>& f,
                     const std::vector<Matrix>& g) {
    std::vector<Matrix> r;
    for (int v = 0; v < nv; ++v) r.push_back(f[v] * g[v]);
    return r;
  };

  // Structure constants: E_i E_j = sum_k s[i][j](k) E_k.
  std::vector<std::vector<Matrix>> sc(d, std::vector<Matrix>());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      sc[i].push_back(coords(compose(basis[i], basis[j])));

  // Trace form of the regular representation: T_ij = tr(L_{E_i E_j}).
  Matrix t(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rat tr = 0;
      // L_{E_iE_j} E_k = E_i (E_j E_k); take the E_k coordinate.
      for (int k = 0; k < d; ++k) {
        Matrix ejk = sc[j][k];  // coords of E_j E_k
        for (int l = 0; l < d; ++l) tr += ejk.at(l, 0) * sc[i][l].at(k, 0);
      }
      t.at(i, j) = tr;
    }
  // local with scalar residue <=> radical has codimension 1 <=> rank(T) = 1
  return rank(t) == 1;
}

}  // namespace sg
