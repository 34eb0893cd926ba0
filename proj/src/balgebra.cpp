#include "sg/balgebra.hpp"

#include <algorithm>

#include "sg/common.hpp"

namespace sg {

int path_target(const Algebra& a, const AlgPath& p) {
  return p.arrows.empty() ? p.vertex : a.arrow(p.arrows.back()).target;
}

PathAlgebra::PathAlgebra(const Algebra& a) : a_(&a), basis_(a.path_basis()) {
  for (int i = 0; i < dim(); ++i)
    index_[{basis_[i].vertex, basis_[i].arrows}] = i;
}

int PathAlgebra::index(const AlgPath& p) const {
  auto it = index_.find({p.vertex, p.arrows});
  return it == index_.end() ? -1 : it->second;
}

std::optional<AlgPath> PathAlgebra::mul(const AlgPath& p,
                                        const AlgPath& q) const {
  if (p.arrows.empty()) {
    if (p.vertex != path_target(*a_, q)) return std::nullopt;
    return q;
  }
  if (q.arrows.empty()) {
    if (q.vertex != p.vertex) return std::nullopt;
    return p;
  }
  if (path_target(*a_, q) != p.vertex) return std::nullopt;
  int second = p.arrows.front(), first = q.arrows.back();
  AlgPath r;
  r.vertex = q.vertex;
  if (a_->relation(second, first)) {
    if (second != first || !a_->arrow(second).special) return std::nullopt;
    // eps.eps = eps: drop one copy at the junction
    r.arrows = q.arrows;
    r.arrows.insert(r.arrows.end(), p.arrows.begin() + 1, p.arrows.end());
  } else {
    r.arrows = q.arrows;
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  }
  SG_ASSERT(index(r) >= 0);
  return r;
}

namespace {

AlgPath arrow_path(const Algebra& a, int i) {
  return AlgPath{{i}, a.arrow(i).source};
}

bool eps_headed(const Algebra& a, const AlgPath& p) {
  return !p.arrows.empty() && a.arrow(p.arrows.front()).special;
}

bool eps_tailed(const Algebra& a, const AlgPath& p) {
  return !p.arrows.empty() && a.arrow(p.arrows.back()).special;
}

}  // namespace

ProjInfo projective_info(const PathAlgebra& pa, const SplitIdem& f) {
  const Algebra& a = pa.algebra();
  ProjInfo pi;
  int eps = f.kind == IdemKind::Plain ? -1 : a.special_loop(f.vertex);
  for (const AlgPath& p : pa.basis()) {
    if (p.vertex != f.vertex) continue;
    bool headed = !p.arrows.empty() && p.arrows.front() == eps;
    if (f.kind == IdemKind::Plus && !headed) continue;
    if (f.kind == IdemKind::Minus && headed) continue;
    pi.labels.push_back(p);
  }
  pi.mod = zero_module(a);
  for (const AlgPath& p : pi.labels) {
    int vi = a.vertex_index(path_target(a, p));
    pi.fiber.push_back(vi);
    pi.pos.push_back(pi.mod.dims[vi]++);
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    Matrix m(pi.mod.dims[a.vertex_index(ar.target)],
             pi.mod.dims[a.vertex_index(ar.source)]);
    for (std::size_t k = 0; k < pi.labels.size(); ++k) {
      if (path_target(a, pi.labels[k]) != ar.source) continue;
      auto q = pa.mul(arrow_path(a, i), pi.labels[k]);
      if (!q) continue;
      if (f.kind == IdemKind::Minus && eps_headed(a, *q)) continue;
      auto it = std::find_if(pi.labels.begin(), pi.labels.end(),
                             [&](const AlgPath& l) {
                               return l.vertex == q->vertex &&
                                      l.arrows == q->arrows;
                             });
      SG_ASSERT(it != pi.labels.end());
      std::size_t kk = it - pi.labels.begin();
      SG_ASSERT(pi.fiber[kk] == a.vertex_index(ar.target));
      m.at(pi.pos[kk], pi.pos[k]) = 1;
    }
    pi.mod.mats[i] = std::move(m);
  }
  AlgPath gen;
  gen.vertex = f.vertex;
  if (f.kind == IdemKind::Plus) gen.arrows = {eps};
  for (std::size_t k = 0; k < pi.labels.size(); ++k)
    if (pi.labels[k].vertex == gen.vertex && pi.labels[k].arrows == gen.arrows)
      pi.gen = static_cast<int>(k);
  SG_ASSERT(pi.gen >= 0);
  validate_module(a, pi.mod);
  return pi;
}

Module projective_module(const Algebra& a, const SplitIdem& f) {
  PathAlgebra pa(a);
  return projective_info(pa, f).mod;
}

Module simple_module(const Algebra& a, const SplitIdem& f) {
  Module m = zero_module(a);
  int vi = a.vertex_index(f.vertex);
  m.dims[vi] = 1;
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    m.mats[i] = Matrix(m.dims[a.vertex_index(ar.target)],
                       m.dims[a.vertex_index(ar.source)]);
  }
  if (f.kind == IdemKind::Plus)
    m.mats[a.special_loop(f.vertex)].at(0, 0) = 1;
  validate_module(a, m);
  return m;
}

int hom_from_projective(const Algebra& a, const SplitIdem& f,
                        const Module& m) {
  int vi = a.vertex_index(f.vertex);
  if (f.kind == IdemKind::Plain) return m.dims[vi];
  int r = rank(m.mats[a.special_loop(f.vertex)]);
  return f.kind == IdemKind::Plus ? r : m.dims[vi] - r;
}

std::vector<Matrix> radical_spans(const Algebra& a, const Module& m) {
  const int nv = static_cast<int>(a.vertices().size());
  std::vector<Matrix> span(nv, Matrix(0, 0));
  for (int v = 0; v < nv; ++v) span[v] = Matrix(m.dims[v], 0);
  auto absorb = [&](int v, const Matrix& cols) {
    if (cols.cols() == 0) return false;
    Matrix reduced = column_space(span[v].hstack(cols));
    if (reduced.cols() == span[v].cols()) return false;
    span[v] = std::move(reduced);
    return true;
  };
  for (int i = 0; i < a.num_arrows(); ++i) {
    if (a.arrow(i).special) continue;
    absorb(a.vertex_index(a.arrow(i).target), m.mats[i]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < a.num_arrows(); ++i) {
      int sv = a.vertex_index(a.arrow(i).source);
      int tv = a.vertex_index(a.arrow(i).target);
      if (span[sv].cols() == 0) continue;
      if (absorb(tv, m.mats[i] * span[sv])) changed = true;
    }
  }
  return span;
}

namespace {

// A complement of the column space of `sub` inside k^dim, as columns picked
// from the identity (pivot-free coordinates).
Matrix coset_complement(const Matrix& sub, int dim) {
  Matrix joint = sub.hstack(Matrix::identity(dim));
  auto pivots = rref(joint);
  Matrix c(dim, 0);
  for (int p : pivots) {
    if (p < sub.cols()) continue;
    Matrix col(dim, 1);
    col.at(p - sub.cols(), 0) = 1;
    c = c.hstack(col);
  }
  return c;
}

struct CoverData {
  std::vector<SplitIdem> summands;
  std::vector<Matrix> gens;  // generator image in its fiber, per summand
};

// Generators of M over the algebra: a complement of rad M, split by the
// special-loop eigenvalue at special vertices.
CoverData top_generators(const Algebra& a, const Module& m) {
  CoverData cd;
  auto rad = radical_spans(a, m);
  for (std::size_t vi = 0; vi < a.vertices().size(); ++vi) {
    int v = a.vertices()[vi];
    Matrix comp = coset_complement(rad[vi], m.dims[vi]);
    const int td = comp.cols();
    if (td == 0) continue;
    if (!a.is_special_vertex(v)) {
      for (int c = 0; c < td; ++c) {
        cd.summands.push_back({v, IdemKind::Plain});
        Matrix g(m.dims[vi], 1);
        for (int r = 0; r < m.dims[vi]; ++r) g.at(r, 0) = comp.at(r, c);
        cd.gens.push_back(std::move(g));
      }
      continue;
    }
    const Matrix& me = m.mats[a.special_loop(v)];
    // induced idempotent on top coordinates: me * comp = rad*x + comp*ebar
    Matrix ebar(td, td);
    for (int c = 0; c < td; ++c) {
      Matrix col(m.dims[vi], 1);
      for (int r = 0; r < m.dims[vi]; ++r) col.at(r, 0) = comp.at(r, c);
      auto [ok, sol] = solve(rad[vi].hstack(comp), me * col);
      SG_ASSERT(ok);
      for (int r = 0; r < td; ++r) ebar.at(r, c) = sol.at(rad[vi].cols() + r, 0);
    }
    SG_ASSERT(ebar * ebar == ebar);
    Matrix plus = column_space(ebar);
    for (int c = 0; c < plus.cols(); ++c) {
      Matrix y(td, 1);
      for (int r = 0; r < td; ++r) y.at(r, 0) = plus.at(r, c);
      SG_ASSERT(ebar * y == y);
      cd.summands.push_back({v, IdemKind::Plus});
      cd.gens.push_back(me * (comp * y));
    }
    Matrix minus = nullspace(ebar);
    for (int c = 0; c < minus.cols(); ++c) {
      Matrix y(td, 1);
      for (int r = 0; r < td; ++r) y.at(r, 0) = minus.at(r, c);
      Matrix m0 = comp * y;
      cd.summands.push_back({v, IdemKind::Minus});
      cd.gens.push_back(m0 - me * m0);
    }
    SG_ASSERT(plus.cols() + minus.cols() == td);
  }
  return cd;
}

Matrix apply_path(const Module& m, const AlgPath& p, Matrix x) {
  for (int arr : p.arrows) x = m.mats[arr] * x;
  return x;
}

// Projective cover assembled as one module with per-vertex surjection onto M.
struct Cover {
  std::vector<SplitIdem> summands;
  std::vector<ProjInfo> infos;           // per distinct idem, cached
  std::vector<int> info_of;              // summand -> info index
  Module p0;                             // direct sum module
  std::vector<std::vector<int>> offset;  // [summand][vertex] fiber offset
  std::vector<Matrix> phi;               // per-vertex map onto M
};

Cover build_cover(const PathAlgebra& pa, const Module& m) {
  const Algebra& a = pa.algebra();
  Cover cv;
  CoverData cd = top_generators(a, m);
  cv.summands = cd.summands;
  std::vector<SplitIdem> distinct;
  for (const auto& f : cv.summands) {
    auto it = std::find(distinct.begin(), distinct.end(), f);
    if (it == distinct.end()) {
      distinct.push_back(f);
      cv.infos.push_back(projective_info(pa, f));
      cv.info_of.push_back(static_cast<int>(distinct.size()) - 1);
    } else {
      cv.info_of.push_back(static_cast<int>(it - distinct.begin()));
    }
  }
  cv.p0 = zero_module(a);
  const int nv = static_cast<int>(a.vertices().size());
  for (std::size_t s = 0; s < cv.summands.size(); ++s) {
    const Module& pm = cv.infos[cv.info_of[s]].mod;
    cv.offset.emplace_back(nv, 0);
    for (int v = 0; v < nv; ++v) {
      cv.offset[s][v] = cv.p0.dims[v];
      cv.p0.dims[v] += pm.dims[v];
    }
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    int sv = a.vertex_index(ar.source), tv = a.vertex_index(ar.target);
    Matrix mat(cv.p0.dims[tv], cv.p0.dims[sv]);
    for (std::size_t s = 0; s < cv.summands.size(); ++s) {
      const Matrix& blk = cv.infos[cv.info_of[s]].mod.mats[i];
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c)
          mat.at(cv.offset[s][tv] + r, cv.offset[s][sv] + c) = blk.at(r, c);
    }
    cv.p0.mats[i] = std::move(mat);
  }
  // phi: basis label p of summand s maps to p . gen_s
  cv.phi.assign(nv, Matrix(0, 0));
  for (int v = 0; v < nv; ++v) cv.phi[v] = Matrix(m.dims[v], cv.p0.dims[v]);
  for (std::size_t s = 0; s < cv.summands.size(); ++s) {
    const ProjInfo& pi = cv.infos[cv.info_of[s]];
    for (std::size_t k = 0; k < pi.labels.size(); ++k) {
      Matrix img = apply_path(m, pi.labels[k], cd.gens[s]);
      int v = pi.fiber[k];
      for (int r = 0; r < m.dims[v]; ++r)
        cv.phi[v].at(r, cv.offset[s][v] + pi.pos[k]) = img.at(r, 0);
    }
  }
  for (int v = 0; v < nv; ++v) SG_ASSERT(rank(cv.phi[v]) == m.dims[v]);
  return cv;
}

// Kernel of the cover map, as a module plus its embedding into P0.
struct KernelData {
  Module k;
  std::vector<Matrix> incl;  // per-vertex columns inside P0
};

KernelData cover_kernel(const Algebra& a, const Cover& cv) {
  const int nv = static_cast<int>(a.vertices().size());
  KernelData kd;
  kd.k = zero_module(a);
  kd.incl.assign(nv, Matrix(0, 0));
  for (int v = 0; v < nv; ++v) {
    kd.incl[v] = nullspace(cv.phi[v]);
    kd.k.dims[v] = kd.incl[v].cols();
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    int sv = a.vertex_index(ar.source), tv = a.vertex_index(ar.target);
    Matrix img = cv.p0.mats[i] * kd.incl[sv];
    auto [ok, sol] = solve(kd.incl[tv], img);
    SG_ASSERT(ok);
    kd.k.mats[i] = std::move(sol);
  }
  validate_module(a, kd.k);
  return kd;
}

}  // namespace

Presentation minimal_presentation(const PathAlgebra& pa, const Module& m) {
  const Algebra& a = pa.algebra();
  validate_module(a, m);
  Presentation pr;
  Cover cv = build_cover(pa, m);
  pr.p0 = cv.summands;
  KernelData kd = cover_kernel(a, cv);
  CoverData kc = top_generators(a, kd.k);
  pr.p1 = kc.summands;
  // d(gen_j) = inclusion of the j-th kernel generator, decomposed over the
  // P0 summands as algebra coefficients.
  for (std::size_t j = 0; j < pr.p1.size(); ++j) {
    int vj = a.vertex_index(pr.p1[j].vertex);
    Matrix vec = kd.incl[vj] * kc.gens[j];  // inside P0 fiber at vj
    std::vector<std::vector<Rat>> comps(
        pr.p0.size(), std::vector<Rat>(pa.dim(), Rat(0)));
    for (std::size_t s = 0; s < cv.summands.size(); ++s) {
      const ProjInfo& pi = cv.infos[cv.info_of[s]];
      for (std::size_t k = 0; k < pi.labels.size(); ++k) {
        if (pi.fiber[k] != vj) continue;
        Rat c = vec.at(cv.offset[s][vj] + pi.pos[k], 0);
        if (c == 0) continue;
        int bi = pa.index(pi.labels[k]);
        SG_ASSERT(bi >= 0);
        comps[s][bi] += c;
      }
    }
    pr.y.push_back(std::move(comps));
  }
  return pr;
}

namespace {

// Right projective f.A with labelled basis: paths ending at f's vertex; the
// special-loop-tailed ones for Plus, differences p - eps.p for Minus.
struct RightProjInfo {
  std::vector<int> dims;             // per vertex (source of the path)
  std::vector<Matrix> mats;          // mats[a]: fiber t(a) -> fiber s(a)
  std::vector<AlgPath> labels;
  std::vector<int> fiber, pos;
};

RightProjInfo right_projective_info(const PathAlgebra& pa,
                                    const SplitIdem& f) {
  const Algebra& a = pa.algebra();
  RightProjInfo ri;
  int eps = f.kind == IdemKind::Plain ? -1 : a.special_loop(f.vertex);
  for (const AlgPath& p : pa.basis()) {
    if (path_target(a, p) != f.vertex) continue;
    bool tailed = !p.arrows.empty() && p.arrows.back() == eps;
    if (f.kind == IdemKind::Plus && !tailed) continue;
    if (f.kind == IdemKind::Minus && tailed) continue;
    ri.labels.push_back(p);
  }
  const int nv = static_cast<int>(a.vertices().size());
  ri.dims.assign(nv, 0);
  for (const AlgPath& p : ri.labels) {
    int vi = a.vertex_index(p.vertex);
    ri.fiber.push_back(vi);
    ri.pos.push_back(ri.dims[vi]++);
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    Matrix m(ri.dims[a.vertex_index(ar.source)],
             ri.dims[a.vertex_index(ar.target)]);
    for (std::size_t k = 0; k < ri.labels.size(); ++k) {
      if (ri.labels[k].vertex != ar.target) continue;
      auto q = pa.mul(ri.labels[k], arrow_path(a, i));
      if (!q) continue;
      if (f.kind == IdemKind::Minus && eps_tailed(a, *q)) continue;
      auto it = std::find_if(ri.labels.begin(), ri.labels.end(),
                             [&](const AlgPath& l) {
                               return l.vertex == q->vertex &&
                                      l.arrows == q->arrows;
                             });
      SG_ASSERT(it != ri.labels.end());
      std::size_t kk = it - ri.labels.begin();
      SG_ASSERT(ri.fiber[kk] == a.vertex_index(ar.source));
      m.at(ri.pos[kk], ri.pos[k]) = 1;
    }
    ri.mats.push_back(std::move(m));
  }
  return ri;
}

// Express an algebra element (coefficients over the path basis) in the label
// coordinates of f.A. For Minus the coefficient of x_q is the raw
// coefficient of q; special-loop-tailed raw terms are redundant.
Matrix right_coords(const PathAlgebra& pa, const SplitIdem& f,
                    const RightProjInfo& ri, const std::vector<Rat>& el) {
  const Algebra& a = pa.algebra();
  std::vector<Rat> out(ri.labels.size(), Rat(0));
  for (int b = 0; b < pa.dim(); ++b) {
    if (el[b] == 0) continue;
    const AlgPath& p = pa.basis()[b];
    if (f.kind == IdemKind::Minus && eps_tailed(a, p)) continue;
    auto it = std::find_if(ri.labels.begin(), ri.labels.end(),
                           [&](const AlgPath& l) {
                             return l.vertex == p.vertex &&
                                    l.arrows == p.arrows;
                           });
    SG_ASSERT(it != ri.labels.end());
    out[it - ri.labels.begin()] = el[b];
  }
  Matrix col(static_cast<int>(ri.labels.size()), 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    col.at(static_cast<int>(i), 0) = out[i];
  return col;
}

}  // namespace

Module tau_transpose(const Algebra& a, const Module& m) {
  PathAlgebra pa(a);
  Presentation pr = minimal_presentation(pa, m);
  const int nv = static_cast<int>(a.vertices().size());

  std::vector<RightProjInfo> r0, r1;
  for (const auto& f : pr.p0) r0.push_back(right_projective_info(pa, f));
  for (const auto& f : pr.p1) r1.push_back(right_projective_info(pa, f));

  // Fiber layout of the two right modules.
  auto layout = [&](const std::vector<RightProjInfo>& rs,
                    std::vector<std::vector<int>>& off) {
    std::vector<int> dims(nv, 0);
    for (const auto& r : rs) {
      off.emplace_back(nv, 0);
      for (int v = 0; v < nv; ++v) {
        off.back()[v] = dims[v];
        dims[v] += r.dims[v];
      }
    }
    return dims;
  };
  std::vector<std::vector<int>> off0, off1;
  std::vector<int> dims0 = layout(r0, off0);
  std::vector<int> dims1 = layout(r1, off1);

  // d*: block (j, i) sends u in f_i.A to y[j][i] * u in f'_j.A.
  std::vector<Matrix> dstar(nv, Matrix(0, 0));
  for (int v = 0; v < nv; ++v) dstar[v] = Matrix(dims1[v], dims0[v]);
  for (std::size_t i = 0; i < pr.p0.size(); ++i) {
    for (std::size_t k = 0; k < r0[i].labels.size(); ++k) {
      // the dual-basis element: the label path, minus its special-loop
      // post-composition for a Minus summand
      std::vector<std::pair<AlgPath, Rat>> terms{{r0[i].labels[k], Rat(1)}};
      if (pr.p0[i].kind == IdemKind::Minus) {
        AlgPath eu = r0[i].labels[k];
        eu.arrows.push_back(a.special_loop(pr.p0[i].vertex));
        terms.push_back({eu, Rat(-1)});
      }
      int v = r0[i].fiber[k];
      for (std::size_t j = 0; j < pr.p1.size(); ++j) {
        std::vector<Rat> prod(pa.dim(), Rat(0));
        for (int b = 0; b < pa.dim(); ++b) {
          const Rat& c = pr.y[j][i][b];
          if (c == 0) continue;
          for (const auto& [u, sign] : terms) {
            auto q = pa.mul(pa.basis()[b], u);
            if (!q) continue;
            prod[pa.index(*q)] += c * sign;
          }
        }
        Matrix col = right_coords(pa, pr.p1[j], r1[j], prod);
        for (std::size_t kk = 0; kk < r1[j].labels.size(); ++kk) {
          if (r1[j].fiber[kk] != v) continue;
          dstar[v].at(off1[j][v] + r1[j].pos[kk], off0[i][v] + r0[i].pos[k]) =
              col.at(static_cast<int>(kk), 0);
        }
      }
    }
  }

  // Tr M = coker(d*), with the induced right action, then dualize.
  std::vector<Matrix> w(nv, Matrix(0, 0)), comp(nv, Matrix(0, 0));
  Module tm = zero_module(a);
  for (int v = 0; v < nv; ++v) {
    w[v] = column_space(dstar[v]);
    comp[v] = coset_complement(w[v], dims1[v]);
    tm.dims[v] = comp[v].cols();
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    int sv = a.vertex_index(ar.source), tv = a.vertex_index(ar.target);
    // right action of the arrow on the big module fiber tv -> fiber sv
    Matrix act(dims1[sv], dims1[tv]);
    for (std::size_t j = 0; j < pr.p1.size(); ++j) {
      const Matrix& blk = r1[j].mats[i];
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c)
          act.at(off1[j][sv] + r, off1[j][tv] + c) = blk.at(r, c);
    }
    Matrix moved = act * comp[tv];  // coset reps pushed along the action
    auto [ok, sol] = solve(w[sv].hstack(comp[sv]), moved);
    SG_ASSERT(ok);
    Matrix ra(tm.dims[sv], tm.dims[tv]);
    for (int r = 0; r < tm.dims[sv]; ++r)
      for (int c = 0; c < tm.dims[tv]; ++c)
        ra.at(r, c) = sol.at(w[sv].cols() + r, c);
    tm.mats[i] = ra.transpose();
  }
  validate_module(a, tm);
  return tm;
}

std::vector<int> fingerprint(const Algebra& a, const Module& m) {
  std::vector<int> fp = m.dims;
  for (const auto& f : a.split_idempotents()) {
    Module p = projective_module(a, f);
    Module s = simple_module(a, f);
    fp.push_back(hom_dim_linear(a, p, m));
    fp.push_back(hom_dim_linear(a, m, p));
    fp.push_back(hom_dim_linear(a, s, m));
    fp.push_back(hom_dim_linear(a, m, s));
  }
  fp.push_back(end_dim(a, m));
  return fp;
}

}  // namespace sg
