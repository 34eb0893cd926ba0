#include "sg/hatq.hpp"

#include <algorithm>

namespace sg {

Vtx HatQuiver::s(const Letter& l) const {
  if (l.inv) return t(inverse(l));
  if (l.is_end) return {l.vertex, 0};
  return {a_->arrow(l.arrow).source, 0};
}

Vtx HatQuiver::t(const Letter& l) const {
  if (l.inv) return s(inverse(l));
  if (l.is_end) return {l.vertex, l.theta};
  return {a_->arrow(l.arrow).target, 0};
}

int HatQuiver::sigma(const Letter& l) const {
  if (l.inv) return tau(inverse(l));
  if (l.is_end) return l.theta;
  return a_->sigma(l.arrow);
}

int HatQuiver::tau(const Letter& l) const {
  if (l.inv) return sigma(inverse(l));
  if (l.is_end) return 1;
  return a_->tau(l.arrow);
}

bool HatQuiver::is_special_end(const Letter& l) const {
  if (!l.is_end) return false;
  if (!a_->is_special_vertex(l.vertex)) return false;
  return l.theta == a_->sigma(a_->special_loop(l.vertex));
}

std::optional<std::pair<Vtx, int>> HatQuiver::slot(const Letter& l) const {
  Vtx src = s(l);
  if (src.added()) return std::nullopt;
  return std::make_pair(src, sigma(l));
}

std::vector<Letter> HatQuiver::slot_letters(int v, int th) const {
  std::vector<Letter> out;
  for (int i = 0; i < a_->num_arrows(); ++i) {
    if (a_->arrow(i).target == v && a_->tau(i) == th)
      out.push_back(arrow_letter(i, true));
  }
  out.push_back(end_letter(v, th));
  for (int i = 0; i < a_->num_arrows(); ++i) {
    if (a_->arrow(i).source == v && a_->sigma(i) == th)
      out.push_back(arrow_letter(i));
  }
  SG_ASSERT(out.size() <= 3);
  return out;
}

std::optional<Letter> HatQuiver::next_smaller(const Letter& l) const {
  auto sl = slot(l);
  SG_ASSERT(sl.has_value());
  auto letters = slot_letters(sl->first.v, sl->second);
  auto it = std::find(letters.begin(), letters.end(), l);
  SG_ASSERT(it != letters.end());
  if (it + 1 == letters.end()) return std::nullopt;
  return *(it + 1);
}

std::optional<Letter> HatQuiver::next_larger(const Letter& l) const {
  auto sl = slot(l);
  SG_ASSERT(sl.has_value());
  auto letters = slot_letters(sl->first.v, sl->second);
  auto it = std::find(letters.begin(), letters.end(), l);
  SG_ASSERT(it != letters.end());
  if (it == letters.begin()) return std::nullopt;
  return *(it - 1);
}

std::vector<Letter> HatQuiver::all_letters() const {
  std::vector<Letter> out;
  for (int i = 0; i < a_->num_arrows(); ++i) {
    out.push_back(arrow_letter(i));
    out.push_back(arrow_letter(i, true));
  }
  for (int v : a_->vertices())
    for (int th : {+1, -1}) {
      out.push_back(end_letter(v, th));
      out.push_back(end_letter(v, th, true));
    }
  return out;
}

std::string HatQuiver::format(const Letter& l) const {
  std::string s;
  if (l.is_end)
    s = "z(" + std::to_string(l.vertex) + "," + (l.theta > 0 ? "+" : "-") +
        ")";
  else
    s = a_->arrow(l.arrow).name;
  if (l.inv) s += "^-";
  return s;
}

}  // namespace sg
