#include "sg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sg {

AlgebraInput parse_algebra(std::istream& is) {
  AlgebraInput in;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto want_int = [&](const char* what) {
      int v;
      if (!(ls >> v))
        throw ParseError(lineno, std::string("expected ") + what);
      return v;
    };
    auto want_name = [&](const char* what) {
      std::string s;
      if (!(ls >> s))
        throw ParseError(lineno, std::string("expected ") + what);
      return s;
    };
    auto expect_end = [&] {
      std::string extra;
      if (ls >> extra)
        throw ParseError(lineno, "unexpected token '" + extra + "'");
    };
    if (kw == "vertices") {
      int v;
      while (ls >> v) in.vertices.push_back(v);
      if (!ls.eof())
        throw ParseError(lineno, "vertex labels must be integers");
    } else if (kw == "special") {
      int v;
      while (ls >> v) in.special.push_back(v);
      if (!ls.eof())
        throw ParseError(lineno, "special vertex labels must be integers");
    } else if (kw == "arrow") {
      Arrow a;
      a.name = want_name("arrow name");
      a.source = want_int("source vertex");
      a.target = want_int("target vertex");
      expect_end();
      in.arrows.push_back(a);
    } else if (kw == "loop") {
      Arrow a;
      a.name = want_name("loop name");
      a.source = a.target = want_int("vertex");
      expect_end();
      in.arrows.push_back(a);
    } else if (kw == "rel") {
      std::string x = want_name("arrow name");
      std::string y = want_name("arrow name");
      expect_end();
      in.relations.push_back({x, y});
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  return in;
}

AlgebraInput parse_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  return parse_algebra(f);
}

std::string write_algebra(const AlgebraInput& in) {
  std::ostringstream os;
  auto vs = in.vertices;
  std::sort(vs.begin(), vs.end());
  os << "vertices";
  for (int v : vs) os << ' ' << v;
  os << '\n';
  auto sp = in.special;
  std::sort(sp.begin(), sp.end());
  if (!sp.empty()) {
    os << "special";
    for (int v : sp) os << ' ' << v;
    os << '\n';
  }
  auto arrows = in.arrows;
  std::sort(arrows.begin(), arrows.end(),
            [](const Arrow& x, const Arrow& y) { return x.name < y.name; });
  for (const Arrow& a : arrows) {
    if (a.source == a.target)
      os << "loop " << a.name << ' ' << a.source << '\n';
    else
      os << "arrow " << a.name << ' ' << a.source << ' ' << a.target << '\n';
  }
  auto rels = in.relations;
  std::sort(rels.begin(), rels.end());
  for (const auto& [x, y] : rels) os << "rel " << x << ' ' << y << '\n';
  return os.str();
}

}  // namespace sg
