#include "sg/intersect.hpp"

#include "sg/common.hpp"

namespace sg {

namespace {

struct PairCount {
  int total = 0;
  int tagged = 0;  // contributions whose weight involved a tag comparison
};

// Weighted common-pair count between tagged words (m, km) and (n, kn).
PairCount count_pairs(const Words& ws, const TaggedWord& mt,
                      const TaggedWord& nt) {
  const HatQuiver& hq = ws.hatq();
  const Word& m = mt.w;
  const Word& n = nt.w;
  PairCount out;
  if (m.len() < 2 || n.len() < 2) return out;
  const int ml = m.len(), nl = n.len();

  // strict comparison inside a shared slot; different slots never compare
  auto lt = [&](const Letter& x, const Letter& y) {
    if (x == y) return false;
    auto sx = hq.slot(x), sy = hq.slot(y);
    SG_ASSERT(sx && sy);
    if (*sx != *sy) return false;
    return hq.rank(x) < hq.rank(y);
  };
  auto mL = [&](int i) { return m.ls[i - 1]; };  // 1-based letter access
  auto nL = [&](int i) { return n.ls[i - 1]; };

  // nonempty spans
  for (int i = 0; i <= ml - 1; ++i)
    for (int j = i + 2; j <= ml + 1; ++j) {
      Word sm = ws.subword(m, i, j);
      for (int h = 0; h <= nl - 1; ++h)
        for (int l = h + 2; l <= nl + 1; ++l) {
          Word sn = ws.subword(n, h, l);
          if (sm.len() != sn.len()) continue;
          // condition (1): equal spans, m-side strictly below n-side
          if (sm == sn) {
            bool ia = (i == 0 || h == 0) ||
                      lt(HatQuiver::inverse(mL(i)), HatQuiver::inverse(nL(h)));
            bool ib = (j == ml + 1 || l == nl + 1) || lt(mL(j), nL(l));
            if (ia && ib) {
              int w = 1, touches = 0;
              if (i == 0 && ws.first_special(m)) {
                SG_ASSERT(h == 0 && ws.first_special(n));
                w *= (*mt.tag_start == *nt.tag_start) ? 1 : 0;
                ++touches;
              }
              if (j == ml + 1 && ws.last_special(m)) {
                SG_ASSERT(l == nl + 1 && ws.last_special(n));
                w *= (*mt.tag_end == *nt.tag_end) ? 1 : 0;
                ++touches;
              }
              out.total += w;
              if (touches) out.tagged += w;
            }
          }
          // condition (2): inverse spans
          if (sm == ws.inverse(sn)) {
            bool ia = (i == 0 || l == nl + 1) ||
                      lt(HatQuiver::inverse(mL(i)), nL(l));
            bool ib = (j == ml + 1 || h == 0) ||
                      lt(mL(j), HatQuiver::inverse(nL(h)));
            if (ia && ib) {
              int w = 1, touches = 0;
              if (i == 0 && ws.first_special(m)) {
                SG_ASSERT(l == nl + 1 && ws.last_special(n));
                w *= (*mt.tag_start == *nt.tag_end) ? 1 : 0;
                ++touches;
              }
              if (j == ml + 1 && ws.last_special(m)) {
                SG_ASSERT(h == 0 && ws.first_special(n));
                w *= (*mt.tag_end == *nt.tag_start) ? 1 : 0;
                ++touches;
              }
              out.total += w;
              if (touches) out.tagged += w;
            }
          }
        }
    }

  // empty spans: interior junctions at the same vertex, counted once even if
  // both orientations match
  for (int i = 1; i <= ml - 1; ++i)
    for (int h = 1; h <= nl - 1; ++h) {
      if (hq.t(mL(i)) != hq.t(nL(h))) continue;
      bool c1 = lt(HatQuiver::inverse(mL(i)), HatQuiver::inverse(nL(h))) &&
                lt(mL(i + 1), nL(h + 1));
      bool c2 = lt(HatQuiver::inverse(mL(i)), nL(h + 1)) &&
                lt(mL(i + 1), HatQuiver::inverse(nL(h)));
      if (c1 || c2) out.total += 1;
    }
  return out;
}

PairCount black_count(const Words& ws, const TaggedWord& a,
                      const TaggedWord& b) {
  RotationResult r = ws.tagged_rotation(b);
  PairCount out;
  if (std::holds_alternative<TrivialRotation>(r)) return out;
  if (const TaggedWord* tw = std::get_if<TaggedWord>(&r))
    return count_pairs(ws, a, *tw);
  const SplitPair& sp = std::get<SplitPair>(r);
  for (int tag : {0, 1}) {
    TaggedWord part = ws.canonical(TaggedWord{sp.n, tag, {}});
    PairCount pc = count_pairs(ws, a, part);
    out.total += pc.total;
    out.tagged += pc.tagged;
  }
  return out;
}

}  // namespace

int hom_dim_words(const Words& ws, const TaggedWord& a, const TaggedWord& b) {
  return count_pairs(ws, a, b).total;
}

int black_int(const Words& ws, const TaggedWord& a, const TaggedWord& b) {
  return black_count(ws, a, b).total;
}

int int_number(const Words& ws, const TaggedWord& a, const TaggedWord& b) {
  return black_int(ws, a, b) + black_int(ws, b, a);
}

int int_number_gentle(const Words& ws, const TaggedWord& a,
                      const TaggedWord& b) {
  if (!ws.algebra().special_vertices().empty())
    throw ValidationError(
        "plain intersection form requires an algebra without special "
        "vertices");
  return int_number(ws, a, b);
}

IntBreakdown int_breakdown(const Words& ws, const TaggedWord& a,
                           const TaggedWord& b) {
  IntBreakdown r;
  PairCount ab = black_count(ws, a, b);
  PairCount ba = black_count(ws, b, a);
  r.black_ab = ab.total;
  r.tagged_ab = ab.tagged;
  r.black_ba = ba.total;
  r.tagged_ba = ba.tagged;
  return r;
}

}  // namespace sg
