#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sg/algebra.hpp"

namespace sg {

// Vertex of the letter quiver: a real quiver vertex (th == 0) or an added
// vertex (v, th) with th = +1/-1 hanging off the real vertex v.
struct Vtx {
  int v = 0;
  int th = 0;
  bool added() const { return th != 0; }
  auto operator<=>(const Vtx&) const = default;
};

// A letter: an arrow of the extended quiver, an end letter z(v,th) from the
// real vertex v to the added vertex (v,th), or an inverse of either.
struct Letter {
  bool is_end = false;
  int arrow = -1;  // when !is_end
  int vertex = 0;  // when is_end
  int theta = 0;   // when is_end
  bool inv = false;
  auto operator<=>(const Letter&) const = default;
};

// Letter universe of a fixed algebra: sources/targets, the sign functions,
// and the per-slot linear order (inverse arrow > end letter > direct arrow).
class HatQuiver {
 public:
  explicit HatQuiver(const Algebra& a) : a_(&a) {}
  const Algebra& algebra() const { return *a_; }

  static Letter arrow_letter(int idx, bool inv = false) {
    Letter l;
    l.arrow = idx;
    l.inv = inv;
    return l;
  }
  static Letter end_letter(int v, int th, bool inv = false) {
    Letter l;
    l.is_end = true;
    l.vertex = v;
    l.theta = th;
    l.inv = inv;
    return l;
  }
  static Letter inverse(Letter l) {
    l.inv = !l.inv;
    return l;
  }

  Vtx s(const Letter& l) const;
  Vtx t(const Letter& l) const;
  int sigma(const Letter& l) const;
  int tau(const Letter& l) const;

  // End letter at a special vertex on its special-loop side.
  bool is_special_end(const Letter& l) const;
  bool is_special_loop(const Letter& l) const {
    return !l.is_end && a_->arrow(l.arrow).special;
  }

  // Every letter with a real source lives in the slot (s, sigma); letters in
  // one slot are comparable. Inverse end letters have added sources and no
  // slot.
  std::optional<std::pair<Vtx, int>> slot(const Letter& l) const;
  // 0 = direct arrow, 1 = end letter, 2 = inverse arrow; bigger rank means
  // bigger letter within a slot.
  int rank(const Letter& l) const { return l.is_end ? 1 : (l.inv ? 2 : 0); }

  // All letters of the slot (v, th), in decreasing order.
  std::vector<Letter> slot_letters(int v, int th) const;
  // Next-smaller / next-larger letter in the slot of l, if any.
  std::optional<Letter> next_smaller(const Letter& l) const;
  std::optional<Letter> next_larger(const Letter& l) const;

  std::vector<Letter> all_letters() const;

  std::string format(const Letter& l) const;

 private:
  const Algebra* a_;
};

}  // namespace sg
