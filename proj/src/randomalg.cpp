#include "sg/randomalg.hpp"

#include <random>
#include <string>

#include "sg/common.hpp"

namespace sg {

std::vector<AlgebraInput> random_triples(int count, int max_vertices,
                                         unsigned seed) {
  std::mt19937 gen(seed);
  auto r = [&](int n) { return (int)(gen() % (unsigned)n); };

  std::vector<AlgebraInput> out;
  int attempts = 0;
  while ((int)out.size() < count) {
    SG_ASSERT(++attempts < 200000);
    AlgebraInput in;
    int nv = 1 + r(max_vertices);
    for (int v = 1; v <= nv; ++v) in.vertices.push_back(v);
    for (int v = 1; v <= nv; ++v)
      if (r(3) == 0) in.special.push_back(v);
    int na = r(2 * nv + 1);
    for (int i = 0; i < na; ++i)
      in.arrows.push_back({"a" + std::to_string(i), 1 + r(nv), 1 + r(nv),
                           false});
    for (const auto& x : in.arrows)
      for (const auto& y : in.arrows)
        if (y.target == x.source && r(2) == 0)
          in.relations.push_back({x.name, y.name});
    try {
      (void)Algebra::build(in);
    } catch (const ValidationError&) {
      continue;
    }
    out.push_back(std::move(in));
  }
  return out;
}

}  // namespace sg
