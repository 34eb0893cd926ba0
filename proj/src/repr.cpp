#include "sg/repr.hpp"

#include <sstream>

#include "sg/common.hpp"

namespace sg {

Module zero_module(const Algebra& a) {
  Module m;
  m.dims.assign(a.vertices().size(), 0);
  for (int i = 0; i < a.num_arrows(); ++i) m.mats.emplace_back(0, 0);
  return m;
}

void validate_module(const Algebra& a, const Module& m) {
  if (m.dims.size() != a.vertices().size() ||
      m.mats.size() != static_cast<std::size_t>(a.num_arrows()))
    throw ValidationError("module has wrong number of fibers or matrices");
  for (int d : m.dims)
    if (d < 0) throw ValidationError("negative fiber dimension");
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    int ds = m.dims[a.vertex_index(ar.source)];
    int dt = m.dims[a.vertex_index(ar.target)];
    if (m.mats[i].rows() != dt || m.mats[i].cols() != ds)
      throw ValidationError("matrix shape mismatch for arrow " + ar.name);
  }
  for (const auto& [second, first] : a.declared_relations()) {
    if (!(m.mats[second] * m.mats[first]).is_zero())
      throw ValidationError("relation " + a.arrow(second).name + " " +
                            a.arrow(first).name + " not satisfied");
  }
  for (int v : a.special_vertices()) {
    const Matrix& e = m.mats[a.special_loop(v)];
    if (!(e * e == e))
      throw ValidationError("special loop at vertex " + std::to_string(v) +
                            " does not act idempotently");
  }
}

Module direct_sum(const Algebra& a, const Module& x, const Module& y) {
  Module r = zero_module(a);
  for (std::size_t v = 0; v < r.dims.size(); ++v)
    r.dims[v] = x.dims[v] + y.dims[v];
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Matrix &mx = x.mats[i], &my = y.mats[i];
    Matrix m(mx.rows() + my.rows(), mx.cols() + my.cols());
    for (int r2 = 0; r2 < mx.rows(); ++r2)
      for (int c = 0; c < mx.cols(); ++c) m.at(r2, c) = mx.at(r2, c);
    for (int r2 = 0; r2 < my.rows(); ++r2)
      for (int c = 0; c < my.cols(); ++c)
        m.at(mx.rows() + r2, mx.cols() + c) = my.at(r2, c);
    r.mats[i] = std::move(m);
  }
  return r;
}

Module build_module(const Words& ws, const TaggedWord& tw0) {
  const Algebra& a = ws.algebra();
  const HatQuiver& hq = ws.hatq();
  TaggedWord tw = tw0;
  ws.canonical(tw);  // validates the tag/word fit (result unused)
  const Word& w = tw.w;
  const int m = w.len();
  Module mod = zero_module(a);
  if (m <= 1) return mod;

  // basis element j (1..m-1) lives at t(omega_j); position within its fiber
  std::vector<int> vert(m), pos(m);
  for (int j = 1; j <= m - 1; ++j) {
    Vtx tv = hq.t(w.ls[j - 1]);
    SG_ASSERT(!tv.added());
    int vi = a.vertex_index(tv.v);
    vert[j] = vi;
    pos[j] = mod.dims[vi]++;
  }
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow& ar = a.arrow(i);
    int ds = mod.dims[a.vertex_index(ar.source)];
    int dt = mod.dims[a.vertex_index(ar.target)];
    mod.mats[i] = Matrix(dt, ds);
  }

  for (int i = 0; i < a.num_arrows(); ++i) {
    if (a.arrow(i).special) continue;
    Matrix& mat = mod.mats[i];
    Letter dir = HatQuiver::arrow_letter(i, false);
    Letter inv = HatQuiver::arrow_letter(i, true);
    for (int j = 1; j <= m - 1; ++j) {
      if (j + 1 <= m - 1 && w.ls[j] == dir)
        mat.at(pos[j + 1], pos[j]) = 1;
      if (j - 1 >= 1 && w.ls[j - 1] == inv)
        mat.at(pos[j - 1], pos[j]) = 1;
    }
  }
  for (int v : a.special_vertices()) {
    int ei = a.special_loop(v);
    Matrix& mat = mod.mats[ei];
    Letter dir = HatQuiver::arrow_letter(ei, false);
    Letter inv = HatQuiver::arrow_letter(ei, true);
    for (int j = 1; j <= m - 1; ++j) {
      if (j + 1 <= m - 1 && w.ls[j] == dir) {
        mat.at(pos[j + 1], pos[j]) = 1;
      } else if (j - 1 >= 1 && w.ls[j - 1] == inv) {
        mat.at(pos[j - 1], pos[j]) = 1;
      } else if (w.ls[j] == inv || w.ls[j - 1] == dir) {
        mat.at(pos[j], pos[j]) = 1;
      } else if (j == 1 && ws.first_special(w) && hq.t(w.ls[0]).v == v) {
        mat.at(pos[j], pos[j]) = *tw.tag_start;
      } else if (j == m - 1 && ws.last_special(w) &&
                 hq.s(w.ls[m - 1]).v == v) {
        mat.at(pos[j], pos[j]) = *tw.tag_end;
      }
    }
  }
  validate_module(a, mod);
  return mod;
}

Module tau_module(const Words& ws, const TaggedWord& tw) {
  auto rot = ws.tagged_rotation(tw);
  if (std::holds_alternative<TrivialRotation>(rot))
    return zero_module(ws.algebra());
  if (const auto* t = std::get_if<TaggedWord>(&rot))
    return build_module(ws, *t);
  const auto& sp = std::get<SplitPair>(rot);
  return direct_sum(ws.algebra(),
                    build_module(ws, ws.canonical({sp.n, 0, std::nullopt})),
                    build_module(ws, ws.canonical({sp.n, 1, std::nullopt})));
}

std::string format_module(const Algebra& a, const Module& m) {
  std::ostringstream out;
  out << "dims:";
  for (int d : m.dims) out << ' ' << d;
  out << '\n';
  for (int i = 0; i < a.num_arrows(); ++i) {
    out << a.arrow(i).name << ": " << m.mats[i].to_string() << '\n';
  }
  return out.str();
}

}  // namespace sg
