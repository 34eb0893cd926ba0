#include "sg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sg {

std::string SplitIdem::label() const {
  std::string s = std::to_string(vertex);
  if (kind == IdemKind::Plus) s += '+';
  if (kind == IdemKind::Minus) s += '-';
  return s;
}

bool Algebra::has_vertex(int v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Algebra::is_special_vertex(int v) const {
  return std::find(special_.begin(), special_.end(), v) != special_.end();
}

int Algebra::vertex_index(int v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  SG_ASSERT(it != vertices_.end());
  return static_cast<int>(it - vertices_.begin());
}

int Algebra::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].name == name) return i;
  return -1;
}

int Algebra::special_loop(int v) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].special && arrows_[i].source == v) return i;
  SG_ASSERT(false);
  return -1;
}

bool Algebra::relation(int second, int first) const {
  if (arrows_[second].special || arrows_[first].special)
    return second == first;  // only the square of a special loop
  return rels_.count({second, first}) > 0;
}

Algebra Algebra::build(const AlgebraInput& in) {
  Algebra a;
  if (in.vertices.empty()) throw ValidationError("algebra has no vertices");
  a.vertices_ = in.vertices;
  std::sort(a.vertices_.begin(), a.vertices_.end());
  if (std::adjacent_find(a.vertices_.begin(), a.vertices_.end()) !=
      a.vertices_.end())
    throw ValidationError("duplicate vertex label");
  a.special_ = in.special;
  std::sort(a.special_.begin(), a.special_.end());
  if (std::adjacent_find(a.special_.begin(), a.special_.end()) !=
      a.special_.end())
    throw ValidationError("duplicate special vertex");
  for (int v : a.special_)
    if (!a.has_vertex(v))
      throw ValidationError("special vertex " + std::to_string(v) +
                            " is not a declared vertex");

  a.arrows_ = in.arrows;
  for (const Arrow& ar : a.arrows_) {
    if (ar.name.empty()) throw ValidationError("arrow with empty name");
    if (ar.special)
      throw ValidationError("arrow " + ar.name +
                            " declared special; special loops are implied by "
                            "the special vertex list");
    if (!a.has_vertex(ar.source) || !a.has_vertex(ar.target))
      throw ValidationError("arrow " + ar.name + " has undeclared endpoint");
  }
  for (int v : a.special_) {
    Arrow eps;
    eps.name = "e" + std::to_string(v);
    eps.source = eps.target = v;
    eps.special = true;
    a.arrows_.push_back(eps);
  }
  std::sort(a.arrows_.begin(), a.arrows_.end(),
            [](const Arrow& x, const Arrow& y) { return x.name < y.name; });
  for (size_t i = 0; i + 1 < a.arrows_.size(); ++i)
    if (a.arrows_[i].name == a.arrows_[i + 1].name)
      throw ValidationError("duplicate arrow name " + a.arrows_[i].name +
                            " (special loops are auto-named e<vertex>)");

  for (const auto& [x, y] : in.relations) {
    int xi = a.arrow_index(x), yi = a.arrow_index(y);
    if (xi < 0 || yi < 0)
      throw ValidationError("relation references unknown arrow " +
                            (xi < 0 ? x : y));
    if (a.arrows_[xi].special || a.arrows_[yi].special)
      throw ValidationError(
          "relation may not involve a special loop (its square is implicit)");
    if (a.arrows_[yi].target != a.arrows_[xi].source)
      throw ValidationError("relation " + x + " " + y +
                            " is not a composable path (need t(" + y +
                            ") = s(" + x + "))");
    if (!a.rels_.insert({xi, yi}).second)
      throw ValidationError("duplicate relation " + x + " " + y);
  }

  a.check_gentle();
  a.check_finite_dimensional();
  a.build_signs();
  return a;
}

void Algebra::check_gentle() const {
  // Degree bounds and relation-uniqueness for the extended pair: at most two
  // arrows in and out of each vertex; every arrow extends in at most one
  // relation-bound and one relation-free way on each side.
  for (int v : vertices_) {
    int out = 0, in = 0;
    for (const Arrow& ar : arrows_) {
      if (ar.source == v) ++out;
      if (ar.target == v) ++in;
    }
    if (out > 2)
      throw ValidationError("G1: vertex " + std::to_string(v) +
                            " has more than two outgoing arrows");
    if (in > 2)
      throw ValidationError("G1: vertex " + std::to_string(v) +
                            " has more than two incoming arrows");
  }
  int n = num_arrows();
  for (int b = 0; b < n; ++b) {
    int cont_free = 0, cont_rel = 0, pre_free = 0, pre_rel = 0;
    for (int x = 0; x < n; ++x) {
      if (arrows_[x].source == arrows_[b].target)
        (relation(x, b) ? cont_rel : cont_free)++;
      if (arrows_[x].target == arrows_[b].source)
        (relation(b, x) ? pre_rel : pre_free)++;
    }
    if (cont_free > 1)
      throw ValidationError("G2: arrow " + arrows_[b].name +
                            " has two relation-free continuations");
    if (pre_free > 1)
      throw ValidationError("G2: arrow " + arrows_[b].name +
                            " has two relation-free predecessors");
    if (cont_rel > 1)
      throw ValidationError("G3: arrow " + arrows_[b].name +
                            " starts two relations");
    if (pre_rel > 1)
      throw ValidationError("G3: arrow " + arrows_[b].name +
                            " ends two relations");
  }
}

void Algebra::check_finite_dimensional() const {
  // After the gentle checks, each arrow has at most one relation-free
  // continuation. A relation-free path longer than the number of arrows must
  // repeat an arrow, i.e. contains a relation-free cycle, which makes the
  // algebra infinite-dimensional.
  int n = num_arrows();
  for (int start = 0; start < n; ++start) {
    int cur = start;
    for (int len = 1;; ++len) {
      int next = -1;
      for (int x = 0; x < n; ++x)
        if (arrows_[x].source == arrows_[cur].target && !relation(x, cur)) {
          next = x;
          break;
        }
      if (next < 0) break;
      if (len + 1 > n)
        throw ValidationError(
            "infinite-dimensional: relation-free cycle through arrow " +
            arrows_[start].name);
      cur = next;
    }
  }
}

void Algebra::build_signs() {
  // Variables: 2*i = sigma(arrow i), 2*i+1 = tau(arrow i). Edges carry a
  // parity: +1 forces equality, -1 forces opposite signs.
  int n = num_arrows();
  std::vector<std::vector<std::pair<int, int>>> adj(2 * n);
  auto edge = [&](int u, int v, int parity) {
    adj[u].push_back({v, parity});
    adj[v].push_back({u, parity});
  };
  for (int al = 0; al < n; ++al)
    for (int be = 0; be < n; ++be) {
      if (arrows_[be].target == arrows_[al].source)
        edge(2 * al, 2 * be + 1, relation(al, be) ? +1 : -1);
      if (al < be) {
        if (arrows_[al].source == arrows_[be].source)
          edge(2 * al, 2 * be, -1);
        if (arrows_[al].target == arrows_[be].target)
          edge(2 * al + 1, 2 * be + 1, -1);
      }
    }

  std::vector<int> val(2 * n, 0);
  signs_.component.assign(2 * n, -1);
  int comp = 0;
  // Arrows are name-sorted, so visiting variables in index order (sigma
  // before tau) and seeding each new component with +1 is deterministic.
  for (int seed = 0; seed < 2 * n; ++seed) {
    if (val[seed] != 0) continue;
    val[seed] = 1;
    signs_.component[seed] = comp;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, parity] : adj[u]) {
        int want = parity * val[u];
        if (val[v] == 0) {
          val[v] = want;
          signs_.component[v] = comp;
          queue.push_back(v);
        } else if (val[v] != want) {
          throw ValidationError("inconsistent sign constraints at arrow " +
                                arrows_[v / 2].name);
        }
      }
    }
    ++comp;
  }
  signs_.num_components = comp;
  signs_.sigma.resize(n);
  signs_.tau.resize(n);
  for (int i = 0; i < n; ++i) {
    signs_.sigma[i] = val[2 * i];
    signs_.tau[i] = val[2 * i + 1];
  }
}

Algebra Algebra::with_flipped_component(int component) const {
  SG_ASSERT(component >= 0 && component < signs_.num_components);
  Algebra a = *this;
  for (int i = 0; i < num_arrows(); ++i) {
    if (a.signs_.component[2 * i] == component) a.signs_.sigma[i] = -sigma(i);
    if (a.signs_.component[2 * i + 1] == component) a.signs_.tau[i] = -tau(i);
  }
  return a;
}

std::vector<AlgPath> Algebra::path_basis() const {
  std::vector<AlgPath> out;
  for (int v : vertices_) out.push_back({{}, v});
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < num_arrows(); ++i) layer.push_back({i});
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : layer) {
      out.push_back({p, arrows_[p.front()].source});
      int last = p.back();
      for (int x = 0; x < num_arrows(); ++x)
        if (arrows_[x].source == arrows_[last].target && !relation(x, last)) {
          auto q = p;
          q.push_back(x);
          next.push_back(q);
        }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const AlgPath& p, const AlgPath& q) {
    if (p.arrows.size() != q.arrows.size())
      return p.arrows.size() < q.arrows.size();
    if (p.arrows != q.arrows) return p.arrows < q.arrows;
    return p.vertex < q.vertex;
  });
  return out;
}

int Algebra::dimension() const {
  return static_cast<int>(path_basis().size());
}

int Algebra::max_path_length() const {
  size_t m = 0;
  for (const auto& p : path_basis()) m = std::max(m, p.arrows.size());
  return static_cast<int>(m);
}

std::vector<SplitIdem> Algebra::split_idempotents() const {
  std::vector<SplitIdem> out;
  for (int v : vertices_) {
    if (is_special_vertex(v)) {
      out.push_back({v, IdemKind::Plus});
      out.push_back({v, IdemKind::Minus});
    } else {
      out.push_back({v, IdemKind::Plain});
    }
  }
  return out;
}

AlgebraInput Algebra::to_input() const {
  AlgebraInput in;
  in.vertices = vertices_;
  in.special = special_;
  for (const Arrow& ar : arrows_)
    if (!ar.special) in.arrows.push_back(ar);
  for (auto [x, y] : rels_)
    in.relations.push_back({arrows_[x].name, arrows_[y].name});
  return in;
}

}  // namespace sg
