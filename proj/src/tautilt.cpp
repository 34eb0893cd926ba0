#include "sg/tautilt.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sg/common.hpp"
#include "sg/homlin.hpp"

namespace sg {

std::vector<TaggedWord> enumerate_tau_rigid(const Words& ws, int max_len) {
  std::vector<TaggedWord> out;
  for (const TaggedWord& tw : ws.enumerate_admissible(max_len))
    if (int_number(ws, tw, tw) == 0) out.push_back(tw);
  return out;
}

bool compatible_curves(const Words& ws, const TaggedWord& x,
                       const TaggedWord& y) {
  return int_number(ws, x, y) == 0;
}

bool compatible_curve_shifted(const Words& ws, const TaggedWord& x,
                              const SplitIdem& f) {
  return hom_from_projective(ws.algebra(), f, build_module(ws, x)) == 0;
}

namespace {

// All exact-size index cliques of a symmetric compatibility relation,
// indices increasing.
void cliques(int n, int want,
             const std::function<bool(int, int)>& ok,
             const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == want) {
      emit(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      if (n - i < want - static_cast<int>(cur.size())) break;
      bool fits = true;
      for (int j : cur)
        if (!ok(j, i)) {
          fits = false;
          break;
        }
      if (!fits) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<Dissection> dissections_from_cliques(
    const std::vector<TaggedWord>& curves, const std::vector<SplitIdem>& shs,
    const std::function<bool(int, int)>& ok) {
  const int nc = static_cast<int>(curves.size());
  const int n = nc + static_cast<int>(shs.size());
  const int want = static_cast<int>(shs.size());
  std::vector<Dissection> out;
  cliques(n, want, ok, [&](const std::vector<int>& idx) {
    Dissection d;
    for (int i : idx) {
      if (i < nc)
        d.curves.push_back(curves[i]);
      else
        d.shifted.push_back(shs[i - nc]);
    }
    out.push_back(std::move(d));
  });
  return out;
}

}  // namespace

std::vector<Dissection> enumerate_dissections(const Words& ws, int max_len) {
  const Algebra& a = ws.algebra();
  std::vector<TaggedWord> curves = enumerate_tau_rigid(ws, max_len);
  std::vector<SplitIdem> shs = a.split_idempotents();
  const int nc = static_cast<int>(curves.size());
  const int n = nc + static_cast<int>(shs.size());
  // precomputed symmetric compatibility
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool c;
      if (i < nc && j < nc)
        c = compatible_curves(ws, curves[i], curves[j]);
      else if (i < nc)
        c = compatible_curve_shifted(ws, curves[i], shs[j - nc]);
      else
        c = true;
      ok[i][j] = ok[j][i] = c;
    }
  return dissections_from_cliques(
      curves, shs, [&](int i, int j) { return ok[i][j] != 0; });
}

Module dissection_module(const Words& ws, const Dissection& d) {
  Module m = zero_module(ws.algebra());
  for (const TaggedWord& tw : d.curves)
    m = direct_sum(ws.algebra(), m, build_module(ws, tw));
  return m;
}

std::vector<Dissection> air_oracle_dissections(const Words& ws, int max_len) {
  const Algebra& a = ws.algebra();
  std::vector<TaggedWord> all = ws.enumerate_admissible(max_len);
  std::vector<TaggedWord> curves;
  std::vector<Module> mods, taus;
  for (const TaggedWord& tw : all) {
    Module m = build_module(ws, tw);
    Module t = tau_transpose(a, m);
    if (hom_dim_linear(a, m, t) != 0) continue;  // not tau-rigid
    curves.push_back(tw);
    mods.push_back(std::move(m));
    taus.push_back(std::move(t));
  }
  std::vector<SplitIdem> shs = a.split_idempotents();
  std::vector<Module> projs;
  for (const auto& f : shs) projs.push_back(projective_module(a, f));
  const int nc = static_cast<int>(curves.size());
  const int n = nc + static_cast<int>(shs.size());
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool c;
      if (i < nc && j < nc)
        c = hom_dim_linear(a, mods[i], taus[j]) == 0 &&
            hom_dim_linear(a, mods[j], taus[i]) == 0;
      else if (i < nc)
        c = hom_dim_linear(a, projs[j - nc], mods[i]) == 0;
      else
        c = true;
      ok[i][j] = ok[j][i] = c;
    }
  return dissections_from_cliques(
      curves, shs, [&](int i, int j) { return ok[i][j] != 0; });
}

std::vector<std::vector<std::vector<int>>> dissection_signatures(
    const Words& ws, const std::vector<Dissection>& ds) {
  const Algebra& a = ws.algebra();
  // The same few curves recur across thousands of dissections; compute each
  // fingerprint once.
  std::map<std::string, std::vector<int>> cache;
  auto curve_sig = [&](const TaggedWord& tw) {
    std::string key = ws.format(tw);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<int> fp = fingerprint(a, build_module(ws, tw));
    fp.insert(fp.begin(), 0);  // curve marker
    return cache.emplace(std::move(key), std::move(fp)).first->second;
  };
  std::vector<std::vector<std::vector<int>>> out;
  for (const Dissection& d : ds) {
    std::vector<std::vector<int>> sig;
    for (const TaggedWord& tw : d.curves) sig.push_back(curve_sig(tw));
    for (const SplitIdem& f : d.shifted) {
      std::vector<int> fp{1, a.vertex_index(f.vertex),
                          static_cast<int>(f.kind)};
      sig.push_back(std::move(fp));
    }
    std::sort(sig.begin(), sig.end());
    out.push_back(std::move(sig));
  }
  return out;
}

bool same_dissection_sets(const Words& ws, const std::vector<Dissection>& x,
                          const std::vector<Dissection>& y) {
  auto sx = dissection_signatures(ws, x);
  auto sy = dissection_signatures(ws, y);
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  return sx == sy;
}

}  // namespace sg
