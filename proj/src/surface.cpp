#include "sg/surface.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sg/common.hpp"

namespace sg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Surface Surface::parse(std::istream& in) {
  Surface s;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "boundary") {
      if (toks.size() < 2) throw ParseError(ln, "boundary needs a name");
      Boundary b;
      b.name = toks[1];
      b.marked.assign(toks.begin() + 2, toks.end());
      b.line = ln;
      s.boundaries.push_back(std::move(b));
    } else if (kw == "puncture") {
      if (toks.size() != 2) throw ParseError(ln, "puncture needs one name");
      s.punctures.push_back(toks[1]);
    } else if (kw == "arc") {
      if (toks.size() != 4)
        throw ParseError(ln, "arc needs a label and two endpoints");
      s.arcs.push_back({toks[1], toks[2], toks[3], ln});
    } else if (kw == "fan") {
      if (toks.size() < 3 || toks[2] != ":")
        throw ParseError(ln, "fan syntax: fan POINT : entries");
      Fan f;
      f.point = toks[1];
      f.line = ln;
      std::string pending;
      bool have_pending = false;
      for (size_t i = 3; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.front() == '[') {
          if (t.back() != ']' || t.size() < 3)
            throw ParseError(ln, "bad arrow annotation " + t);
          if (f.entries.empty() || have_pending)
            throw ParseError(ln, "arrow annotation " + t + " misplaced");
          pending = t.substr(1, t.size() - 2);
          have_pending = true;
        } else {
          auto dot = t.find('.');
          if (dot == std::string::npos)
            throw ParseError(ln, "fan entry " + t + " is not ARC.end0/end1");
          std::string endpart = t.substr(dot + 1);
          int end;
          if (endpart == "end0") end = 0;
          else if (endpart == "end1") end = 1;
          else throw ParseError(ln, "fan entry " + t + " must use end0 or end1");
          if (!f.entries.empty()) {
            f.arrows.push_back(pending);
            pending.clear();
          }
          have_pending = false;
          f.entries.push_back({t.substr(0, dot), end});
        }
      }
      if (have_pending)
        throw ParseError(ln, "arrow annotation after the last fan entry");
      s.fans.push_back(std::move(f));
    } else if (kw == "enclose") {
      if (toks.size() != 3)
        throw ParseError(ln, "enclose needs an arc and a puncture");
      s.encloses.push_back({toks[1], toks[2], ln});
    } else {
      throw ParseError(ln, "unknown keyword " + kw);
    }
  }
  return s;
}

Surface Surface::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return parse(in);
}

void Surface::validate() {
  // -- naming and referential checks -----------------------------------
  std::map<std::string, int> circle_of;       // marked point -> boundary idx
  std::map<std::string, int> pos_of;          // marked point -> position
  std::set<std::string> boundary_names, puncture_names;
  for (size_t b = 0; b < boundaries.size(); ++b) {
    if (!boundary_names.insert(boundaries[b].name).second)
      throw ValidationError("duplicate boundary " + boundaries[b].name);
    for (size_t i = 0; i < boundaries[b].marked.size(); ++i) {
      const std::string& p = boundaries[b].marked[i];
      if (circle_of.count(p))
        throw ValidationError("marked point " + p + " listed twice");
      circle_of[p] = (int)b;
      pos_of[p] = (int)i;
    }
  }
  for (const auto& p : punctures)
    if (!puncture_names.insert(p).second)
      throw ValidationError("duplicate puncture " + p);

  std::map<std::string, int> arc_idx;
  for (size_t a = 0; a < arcs.size(); ++a) {
    const auto& arc = arcs[a];
    bool numeric = !arc.label.empty() &&
                   arc.label.find_first_not_of("0123456789") ==
                       std::string::npos;
    if (!numeric)
      throw ValidationError("arc label " + arc.label + " is not numeric");
    if (arc_idx.count(arc.label))
      throw ValidationError("duplicate arc label " + arc.label);
    arc_idx[arc.label] = (int)a;
    for (const std::string& p : {arc.p0, arc.p1})
      if (!circle_of.count(p))
        throw ValidationError("arc " + arc.label + " endpoint " + p +
                              " is not a marked point");
  }

  auto end_point = [&](int a, int e) -> const std::string& {
    return e == 0 ? arcs[a].p0 : arcs[a].p1;
  };

  // -- fans must cover every arc end exactly once ----------------------
  std::map<std::string, const Fan*> fan_of;
  std::set<std::pair<int, int>> seen_ends;
  for (const auto& f : fans) {
    if (!circle_of.count(f.point))
      throw ValidationError("fan at unknown point " + f.point);
    if (fan_of.count(f.point))
      throw ValidationError("two fans at point " + f.point);
    fan_of[f.point] = &f;
    for (const auto& en : f.entries) {
      auto it = arc_idx.find(en.arc);
      if (it == arc_idx.end())
        throw ValidationError("fan at " + f.point + " mentions unknown arc " +
                              en.arc);
      if (end_point(it->second, en.end) != f.point)
        throw ValidationError("arc " + en.arc + " end" +
                              std::to_string(en.end) + " is not at " + f.point);
      if (!seen_ends.insert({it->second, en.end}).second)
        throw ValidationError("arc " + en.arc + " end" +
                              std::to_string(en.end) + " listed twice");
    }
  }
  for (size_t a = 0; a < arcs.size(); ++a)
    for (int e : {0, 1})
      if (!seen_ends.count({(int)a, e}))
        throw ValidationError("arc " + arcs[a].label + " end" +
                              std::to_string(e) + " appears in no fan");

  // -- enclose lines ---------------------------------------------------
  std::map<int, std::string> puncture_of_arc;  // arc idx -> puncture
  std::set<std::string> enclosed;
  for (const auto& en : encloses) {
    auto it = arc_idx.find(en.arc);
    if (it == arc_idx.end())
      throw ValidationError("enclose mentions unknown arc " + en.arc);
    int a = it->second;
    if (arcs[a].p0 != arcs[a].p1)
      throw ValidationError("enclosing arc " + en.arc + " is not a loop");
    if (!puncture_names.count(en.puncture))
      throw ValidationError("enclose mentions unknown puncture " + en.puncture);
    if (!enclosed.insert(en.puncture).second)
      throw ValidationError("puncture " + en.puncture + " enclosed twice");
    if (puncture_of_arc.count(a))
      throw ValidationError("arc " + en.arc + " encloses two punctures");
    puncture_of_arc[a] = en.puncture;
  }
  for (const auto& p : punctures)
    if (!enclosed.count(p))
      throw ValidationError("puncture " + p + " is not enclosed by any arc");

  // an enclosing loop's two ends must sit side by side in their fan
  // first_dart[a] = dart leaving along the end listed first
  std::map<int, int> first_dart;
  for (const auto& [a, p] : puncture_of_arc) {
    const Fan* f = fan_of.count(arcs[a].p0) ? fan_of.at(arcs[a].p0) : nullptr;
    bool adjacent = false;
    if (f) {
      for (size_t i = 0; i + 1 < f->entries.size(); ++i)
        if (f->entries[i].arc == arcs[a].label &&
            f->entries[i + 1].arc == arcs[a].label &&
            f->entries[i].end != f->entries[i + 1].end) {
          adjacent = true;
          first_dart[a] = 2 * a + f->entries[i].end;
          break;
        }
    }
    if (!adjacent)
      throw ValidationError("enclosing arc " + arcs[a].label +
                            " must have its two ends adjacent in the fan");
  }

  // -- darts and the counterclockwise rotation at each marked point ----
  // arc a: dart 2a leaves along end0, dart 2a+1 along end1.
  // segment s (point i -> next point on its circle, counterclockwise):
  // out-dart 2(NA+s), in-dart 2(NA+s)+1 (based at the target point).
  int na = (int)arcs.size();
  struct Seg { int circle, from, to; };  // positions on the circle
  std::vector<Seg> segs;
  std::map<std::pair<int, int>, int> seg_at;  // (circle,from-pos) -> seg idx
  for (size_t b = 0; b < boundaries.size(); ++b) {
    int k = (int)boundaries[b].marked.size();
    for (int i = 0; i < k; ++i) {
      seg_at[{(int)b, i}] = (int)segs.size();
      segs.push_back({(int)b, i, (i + 1) % k});
    }
  }
  int ndarts = 2 * na + 2 * (int)segs.size();
  auto rev = [](int d) { return d ^ 1; };

  std::map<std::string, std::vector<int>> rot;  // point -> ccw dart list
  for (const auto& [p, b] : circle_of) {
    int k = (int)boundaries[b].marked.size();
    int pos = pos_of[p];
    int sout = seg_at[{b, pos}];
    int sin = seg_at[{b, (pos + k - 1) % k}];
    std::vector<int> r;
    r.push_back(2 * (na + sout));  // boundary segment leaving ccw
    if (fan_of.count(p))
      for (const auto& en : fan_of[p]->entries)
        r.push_back(2 * arc_idx[en.arc] + en.end);
    r.push_back(2 * (na + sin) + 1);  // segment arriving, reversed
    rot[p] = std::move(r);
  }

  auto dart_base = [&](int d) -> std::string {  // point the dart leaves from
    if (d < 2 * na) return end_point(d / 2, d % 2);
    int s = (d - 2 * na) / 2;
    int pos = (d % 2 == 0) ? segs[s].from : segs[s].to;
    return boundaries[segs[s].circle].marked[pos];
  };

  // face successor: the dart counterclockwise-before the reversal
  std::vector<int> nxt(ndarts, -1);
  for (int d = 0; d < ndarts; ++d) {
    int r = rev(d);
    const auto& list = rot.at(dart_base(r));
    auto it = std::find(list.begin(), list.end(), r);
    SG_ASSERT(it != list.end());
    size_t i = it - list.begin();
    nxt[d] = list[(i + list.size() - 1) % list.size()];
  }

  faces.clear();
  std::vector<int> face_of(ndarts, -1);
  for (int d = 0; d < ndarts; ++d) {
    if (face_of[d] != -1) continue;
    Face f;
    for (int e = d; face_of[e] == -1; e = nxt[e]) {
      face_of[e] = (int)faces.size();
      f.darts.push_back(e);
    }
    faces.push_back(std::move(f));
  }

  // -- connectivity and genus ------------------------------------------
  if (circle_of.empty()) throw ValidationError("surface has no marked points");
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& a : arcs) {
    adj[a.p0].push_back(a.p1);
    adj[a.p1].push_back(a.p0);
  }
  for (const auto& s : segs) {
    const auto& m = boundaries[s.circle].marked;
    adj[m[s.from]].push_back(m[s.to]);
    adj[m[s.to]].push_back(m[s.from]);
  }
  std::set<std::string> seen{circle_of.begin()->first};
  std::vector<std::string> queue{circle_of.begin()->first};
  while (!queue.empty()) {
    auto p = queue.back();
    queue.pop_back();
    for (const auto& q : adj[p])
      if (seen.insert(q).second) queue.push_back(q);
  }
  if (seen.size() != circle_of.size())
    throw ValidationError("marked points and arcs are not connected");
  int v = (int)circle_of.size(), e = na + (int)segs.size(),
      fcount = (int)faces.size();
  if (v - e + fcount != 2)
    throw ValidationError("not a sphere-like tiling (V-E+F != 2)");

  // -- classify faces ---------------------------------------------------
  // the hole behind each marked circle: all its arriving segment darts
  for (size_t b = 0; b < boundaries.size(); ++b) {
    if (boundaries[b].marked.empty()) continue;
    int s0 = seg_at[{(int)b, 0}];
    Face& f = faces[face_of[2 * (na + s0) + 1]];
    SG_ASSERT((int)f.darts.size() == (int)boundaries[b].marked.size());
    for (int d : f.darts) SG_ASSERT(d >= 2 * na && d % 2 == 1);
    f.type = FaceType::Hole;
    f.note = boundaries[b].name;
  }

  // punctures: the face inside the enclosing loop must be a monogon
  for (const auto& [a, p] : puncture_of_arc) {
    Face& f = faces[face_of[first_dart[a]]];
    if (f.darts.size() != 1 || f.type != FaceType::Other)
      throw ValidationError("puncture " + p + " is not alone in its face");
    f.type = FaceType::PunctureMonogon;
    f.note = p;
  }

  // remaining monogons need an unmarked circle inside; leftover circles
  // go into two-sided faces, at most one each
  std::vector<std::string> circles;
  for (const auto& b : boundaries)
    if (b.marked.empty()) circles.push_back(b.name);
  size_t next_circle = 0;
  for (auto& f : faces) {
    if (f.type != FaceType::Other || f.darts.size() != 1) continue;
    if (next_circle >= circles.size())
      throw ValidationError("a one-sided face has nothing inside it");
    f.type = FaceType::CircleMonogon;
    f.note = circles[next_circle++];
  }
  for (auto& f : faces) {
    if (next_circle >= circles.size()) break;
    if (f.type != FaceType::Other || f.darts.size() != 2) continue;
    f.type = FaceType::CircleDigon;
    f.note = circles[next_circle++];
  }
  if (next_circle < circles.size())
    throw ValidationError("no face left for unmarked circle " +
                          circles[next_circle]);
  for (auto& f : faces)
    if (f.type == FaceType::Other) f.type = FaceType::Empty;
}

AlgebraInput Surface::algebra_input() const {
  std::map<std::string, int> arc_idx;
  for (size_t a = 0; a < arcs.size(); ++a) arc_idx[arcs[a].label] = (int)a;
  std::set<int> special_arcs;
  for (const auto& en : encloses) special_arcs.insert(arc_idx.at(en.arc));

  AlgebraInput in;
  for (const auto& a : arcs) in.vertices.push_back(std::stoi(a.label));
  std::sort(in.vertices.begin(), in.vertices.end());
  for (int a : special_arcs) in.special.push_back(std::stoi(arcs[a].label));
  std::sort(in.special.begin(), in.special.end());

  struct Arr {
    std::string name;
    int src, tgt;            // arc indices
    int left_end, into_end;  // which end of src it leaves, of tgt it enters
  };
  std::vector<Arr> arrs;
  for (const auto& f : fans) {
    for (size_t i = 0; i + 1 < f.entries.size(); ++i) {
      const auto& x = f.entries[i];
      const auto& y = f.entries[i + 1];
      int ax = arc_idx.at(x.arc), ay = arc_idx.at(y.arc);
      if (ax == ay && x.end != y.end && special_arcs.count(ax)) {
        // the two sides of an enclosing loop: this is the special loop,
        // supplied automatically by the algebra builder
        if (!f.arrows[i].empty() && f.arrows[i] != "e" + x.arc)
          throw ValidationError("special loop on arc " + x.arc +
                                " must be named e" + x.arc);
        continue;
      }
      if (f.arrows[i].empty())
        throw ValidationError("missing arrow name between " + x.arc +
                              " and " + y.arc + " in fan at " + f.point);
      arrs.push_back({f.arrows[i], ax, ay, x.end, y.end});
    }
  }
  for (const auto& a : arrs)
    in.arrows.push_back({a.name, std::stoi(arcs[a.src].label),
                         std::stoi(arcs[a.tgt].label), false});
  // beta then alpha vanishes when they pass the shared arc on opposite ends
  for (const auto& alpha : arrs)
    for (const auto& beta : arrs)
      if (beta.tgt == alpha.src && beta.into_end != alpha.left_end)
        in.relations.push_back({alpha.name, beta.name});
  return in;
}

std::string Surface::summary() const {
  std::ostringstream out;
  int n = 0;
  for (const auto& f : faces) {
    out << "face " << n++ << " sides " << f.darts.size() << " ";
    switch (f.type) {
      case FaceType::Empty: out << "empty"; break;
      case FaceType::CircleMonogon: out << "one-sided circle " << f.note; break;
      case FaceType::CircleDigon: out << "two-sided circle " << f.note; break;
      case FaceType::PunctureMonogon: out << "puncture " << f.note; break;
      case FaceType::Other: out << "unclassified"; break;
      case FaceType::Hole: out << "hole " << f.note; break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sg
