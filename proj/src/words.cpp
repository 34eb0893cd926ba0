#include "sg/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sg/common.hpp"

namespace sg {

Word Words::make_word(std::vector<Letter> ls) const {
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (hq_.t(ls[i]) != hq_.s(ls[i + 1]))
      throw ValidationError("vertex chain broken between letters " +
                            std::to_string(i + 1) + " and " +
                            std::to_string(i + 2) + ": " + hq_.format(ls[i]) +
                            " then " + hq_.format(ls[i + 1]));
    if (hq_.tau(ls[i]) != -hq_.sigma(ls[i + 1]))
      throw ValidationError("sign chain broken between letters " +
                            std::to_string(i + 1) + " and " +
                            std::to_string(i + 2) + ": " + hq_.format(ls[i]) +
                            " then " + hq_.format(ls[i + 1]));
  }
  Word w;
  w.ls = std::move(ls);
  w.anchor = w.ls.empty() ? Vtx{} : hq_.s(w.ls.front());
  return w;
}

Vtx Words::s(const Word& w) const {
  return w.trivial() ? w.anchor : hq_.s(w.ls.front());
}

Vtx Words::t(const Word& w) const {
  return w.trivial() ? w.anchor : hq_.t(w.ls.back());
}

int Words::sigma(const Word& w) const {
  SG_ASSERT(!w.trivial());
  return hq_.sigma(w.ls.front());
}

int Words::tau(const Word& w) const {
  SG_ASSERT(!w.trivial());
  return hq_.tau(w.ls.back());
}

Word Words::inverse(const Word& w) const {
  if (w.trivial()) return w;
  std::vector<Letter> ls;
  ls.reserve(w.ls.size());
  for (auto it = w.ls.rbegin(); it != w.ls.rend(); ++it)
    ls.push_back(HatQuiver::inverse(*it));
  return make_word(std::move(ls));
}

TaggedWord Words::inverse(const TaggedWord& tw) const {
  TaggedWord r;
  r.w = inverse(tw.w);
  r.tag_start = tw.tag_end;
  r.tag_end = tw.tag_start;
  return r;
}

Word Words::product(const Word& w1, const Word& w2) const {
  if (w2.trivial()) {
    if (s(w1) != w2.anchor) throw ValidationError("product: endpoint mismatch");
    return w1;
  }
  if (w1.trivial()) {
    if (t(w2) != w1.anchor) throw ValidationError("product: endpoint mismatch");
    return w2;
  }
  if (t(w2) != s(w1)) throw ValidationError("product: endpoint mismatch");
  if (tau(w2) != -sigma(w1)) throw ValidationError("product: sign mismatch");
  std::vector<Letter> ls = w2.ls;
  ls.insert(ls.end(), w1.ls.begin(), w1.ls.end());
  return make_word(std::move(ls));
}

Word Words::subword(const Word& w, int i, int j) const {
  const int m = w.len();
  SG_ASSERT(0 <= i && i < j && j <= m + 1);
  if (j == i + 1) {
    Vtx at = (i == 0) ? s(w) : hq_.t(w.ls[i - 1]);
    return trivial_word(at);
  }
  std::vector<Letter> ls(w.ls.begin() + i, w.ls.begin() + (j - 1));
  return make_word(std::move(ls));
}

bool Words::left_inextensible(const Word& w) const {
  return !w.trivial() && w.ls.back().is_end && !w.ls.back().inv;
}

bool Words::right_inextensible(const Word& w) const {
  return !w.trivial() && w.ls.front().is_end && w.ls.front().inv;
}

bool Words::inextensible(const Word& w) const {
  return left_inextensible(w) && right_inextensible(w);
}

bool Words::first_special(const Word& w) const {
  return !w.trivial() && hq_.is_special_end(w.ls.front());
}

bool Words::last_special(const Word& w) const {
  return !w.trivial() && hq_.is_special_end(w.ls.back());
}

int Words::special_end_count(const Word& w) const {
  return (first_special(w) ? 1 : 0) + (last_special(w) ? 1 : 0);
}

std::strong_ordering Words::compare(const Word& m, const Word& n) const {
  SG_ASSERT(!m.trivial() && !n.trivial());
  SG_ASSERT(hq_.s(m.ls.front()) == hq_.s(n.ls.front()) &&
            hq_.sigma(m.ls.front()) == hq_.sigma(n.ls.front()));
  const int k = std::min(m.len(), n.len());
  for (int i = 0; i < k; ++i) {
    if (m.ls[i] == n.ls[i]) continue;
    int rm = hq_.rank(m.ls[i]), rn = hq_.rank(n.ls[i]);
    SG_ASSERT(rm != rn);
    return rm <=> rn;
  }
  if (m.len() == n.len()) return std::strong_ordering::equal;
  throw InternalError("incomparable words: one is a proper prefix of the other");
}

std::optional<Word> Words::successor_impl(const Word& m,
                                          bool toward_smaller) const {
  SG_ASSERT(left_inextensible(m));
  for (int j = m.len(); j >= 1; --j) {
    const Letter& l = m.ls[j - 1];
    auto sl = hq_.slot(l);
    if (!sl) continue;  // start letter with added source: nothing in its slot
    auto cand = toward_smaller ? hq_.next_smaller(l) : hq_.next_larger(l);
    if (!cand) continue;
    std::vector<Letter> prefix(m.ls.begin(), m.ls.begin() + (j - 1));
    prefix.push_back(*cand);
    return greedy_completion(std::move(prefix), toward_smaller);
  }
  return std::nullopt;
}

Word Words::greedy_completion(std::vector<Letter> prefix, bool maximal) const {
  SG_ASSERT(!prefix.empty());
  while (!hq_.t(prefix.back()).added()) {
    Vtx at = hq_.t(prefix.back());
    int th = -hq_.tau(prefix.back());
    auto slot = hq_.slot_letters(at.v, th);
    SG_ASSERT(!slot.empty());
    prefix.push_back(maximal ? slot.front() : slot.back());
  }
  Word w = make_word(std::move(prefix));
  SG_ASSERT(left_inextensible(w));
  return w;
}

std::optional<Word> Words::successor(const Word& m) const {
  return successor_impl(m, true);
}

std::optional<Word> Words::predecessor(const Word& m) const {
  return successor_impl(m, false);
}

std::optional<Word> Words::successor_right(const Word& m) const {
  auto r = successor(inverse(m));
  if (!r) return std::nullopt;
  return inverse(*r);
}

std::optional<Word> Words::predecessor_right(const Word& m) const {
  auto r = predecessor(inverse(m));
  if (!r) return std::nullopt;
  return inverse(*r);
}

std::optional<Word> Words::successor_both(const Word& m) const {
  std::optional<Word> r1, r2;
  if (auto a = successor(m)) r1 = successor_right(*a);
  if (auto b = successor_right(m)) r2 = successor(*b);
  if (r1 && r2) SG_ASSERT(*r1 == *r2);
  return r1 ? r1 : r2;
}

std::optional<Word> Words::predecessor_both(const Word& m) const {
  std::optional<Word> r1, r2;
  if (auto a = predecessor(m)) r1 = predecessor_right(*a);
  if (auto b = predecessor_right(m)) r2 = predecessor(*b);
  if (r1 && r2) SG_ASSERT(*r1 == *r2);
  return r1 ? r1 : r2;
}

Word Words::completion(const Word& m) const {
  bool fs = first_special(m), ls = last_special(m);
  if (!fs && !ls) return m;
  SG_ASSERT(m.len() >= 2);
  const auto& a = algebra();
  const int len = m.len();
  std::vector<Letter> out;
  if (fs && ls) {
    // conjugate both ends: cyclic word eps_u . w' . eps_v . w'^-1 stored
    // linearly, w' = interior letters
    for (int i = len - 2; i >= 1; --i)
      out.push_back(HatQuiver::inverse(m.ls[i]));
    out.push_back(HatQuiver::arrow_letter(
        a.special_loop(hq_.t(m.ls.front()).v), false));
    for (int i = 1; i <= len - 2; ++i) out.push_back(m.ls[i]);
    out.push_back(HatQuiver::arrow_letter(
        a.special_loop(hq_.s(m.ls.back()).v), false));
  } else if (ls) {
    for (int i = 0; i <= len - 2; ++i) out.push_back(m.ls[i]);
    out.push_back(HatQuiver::arrow_letter(
        a.special_loop(hq_.s(m.ls.back()).v), false));
    for (int i = len - 2; i >= 0; --i)
      out.push_back(HatQuiver::inverse(m.ls[i]));
  } else {
    for (int i = len - 1; i >= 1; --i)
      out.push_back(HatQuiver::inverse(m.ls[i]));
    out.push_back(HatQuiver::arrow_letter(
        a.special_loop(hq_.t(m.ls.front()).v), false));
    for (int i = 1; i <= len - 1; ++i) out.push_back(m.ls[i]);
  }
  return make_word(std::move(out));
}

AdmissibleCheck Words::is_admissible(const Word& m) const {
  SG_ASSERT(inextensible(m));
  for (int i = 1; i <= m.len(); ++i) {
    const Letter& l = m.ls[i - 1];
    if (l.is_end || !hq_.is_special_loop(l)) continue;
    Word lhs = inverse(subword(m, 0, i));
    Word rhs = subword(m, i, m.len() + 1);
    auto cmp = compare(lhs, rhs);
    bool ok = l.inv ? (cmp == std::strong_ordering::less)
                    : (cmp == std::strong_ordering::greater);
    if (!ok) return {false, "A1@" + std::to_string(i)};
  }
  if (first_special(m) && last_special(m)) {
    Word f = completion(m);
    const int L = f.len();
    for (int p = 1; p < L; ++p) {
      if (L % p != 0) continue;
      bool periodic = true;
      for (int k = 0; k < L && periodic; ++k)
        periodic = (f.ls[k] == f.ls[(k + p) % L]);
      if (periodic) return {false, "A2"};
    }
  }
  return {true, {}};
}

std::pair<Word, int> Words::split_inadmissible_successor(const Word& w) const {
  for (const Word& cand : {w, inverse(w)}) {
    const int L = cand.len();
    if (L % 2 == 0) continue;
    const int c = (L + 1) / 2;
    const Letter& mid = cand.ls[c - 1];
    if (mid.is_end || mid.inv || !hq_.is_special_loop(mid)) continue;
    bool pal = true;
    for (int tt = 1; tt < c && pal; ++tt)
      pal = (cand.ls[c - 1 + tt] == HatQuiver::inverse(cand.ls[c - 1 - tt]));
    if (!pal) continue;
    Vtx v = hq_.s(mid);
    std::vector<Letter> nl;
    nl.push_back(HatQuiver::end_letter(v.v, hq_.sigma(mid), true));
    for (int i = c; i < L; ++i) nl.push_back(cand.ls[i]);
    Word n = make_word(std::move(nl));
    SG_ASSERT(completion(n) == cand);
    SG_ASSERT(special_end_count(n) == 1 && first_special(n));
    SG_ASSERT(is_admissible(n).ok);
    return {n, c};
  }
  throw InternalError("word does not split: no special-loop center with "
                      "inverse-palindromic sides");
}

std::vector<int> Words::canonical_key(const Letter& l) const {
  int cls = l.is_end ? (l.inv ? 1 : 0) : (l.inv ? 3 : 2);
  std::vector<int> key{cls};
  if (l.is_end) {
    key.push_back(l.vertex);
    key.push_back(l.theta == 1 ? 0 : 1);
  } else {
    for (char c : algebra().arrow(l.arrow).name) key.push_back(c);
  }
  return key;
}

TaggedWord Words::canonical(const TaggedWord& tw) const {
  const Word& w = tw.w;
  if (w.trivial()) {
    if (tw.tag_start || tw.tag_end)
      throw ValidationError("trivial word cannot carry tags");
    return tw;
  }
  bool fs = first_special(w), ls = last_special(w);
  if (fs != tw.tag_start.has_value() || ls != tw.tag_end.has_value())
    throw ValidationError("tags must match the special ends of the word");
  for (auto tag : {tw.tag_start, tw.tag_end})
    if (tag && *tag != 0 && *tag != 1)
      throw ValidationError("tags must be 0 or 1");
  if (fs != ls) return fs ? tw : inverse(tw);
  TaggedWord alt = inverse(tw);
  auto key_of = [&](const Word& x) {
    std::vector<std::vector<int>> k;
    for (const auto& l : x.ls) k.push_back(canonical_key(l));
    return k;
  };
  auto kw = key_of(tw.w), ka = key_of(alt.w);
  SG_ASSERT(kw != ka);
  return kw < ka ? tw : alt;
}

bool Words::is_canonical(const TaggedWord& tw) const {
  return tw == canonical(tw);
}

bool Words::canonical_less(const TaggedWord& x, const TaggedWord& y) const {
  auto key = [&](const TaggedWord& tw) {
    std::vector<std::vector<int>> k;
    k.push_back({tw.w.len()});
    for (const auto& l : tw.w.ls) k.push_back(canonical_key(l));
    k.push_back({tw.tag_start.value_or(-1), tw.tag_end.value_or(-1)});
    return k;
  };
  return key(x) < key(y);
}

std::vector<Word> Words::enumerate_inextensible(int max_len) const {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto dfs = [&](auto&& self) -> void {
    const Letter& last = cur.back();
    if (hq_.t(last).added()) {
      if (cur.size() >= 2) out.push_back(make_word(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    Vtx at = hq_.t(last);
    for (const Letter& x : hq_.slot_letters(at.v, -hq_.tau(last))) {
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  for (int v : algebra().vertices()) {
    for (int th : {+1, -1}) {
      cur = {HatQuiver::end_letter(v, th, true)};
      dfs(dfs);
    }
  }
  return out;
}

std::vector<Word> Words::enumerate_left_inextensible(int max_len) const {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto dfs = [&](auto&& self) -> void {
    const Letter& last = cur.back();
    if (hq_.t(last).added()) {
      out.push_back(make_word(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    Vtx at = hq_.t(last);
    for (const Letter& x : hq_.slot_letters(at.v, -hq_.tau(last))) {
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  for (const Letter& l : hq_.all_letters()) {
    cur = {l};
    dfs(dfs);
  }
  return out;
}

std::vector<TaggedWord> Words::enumerate_admissible(int max_len) const {
  std::vector<TaggedWord> out;
  for (const Word& w : enumerate_inextensible(max_len)) {
    if (!is_admissible(w).ok) continue;
    std::vector<std::optional<int>> starts{{std::nullopt}}, ends{{std::nullopt}};
    if (first_special(w)) starts = {0, 1};
    if (last_special(w)) ends = {0, 1};
    for (auto a : starts)
      for (auto b : ends) out.push_back(canonical(TaggedWord{w, a, b}));
  }
  std::sort(out.begin(), out.end(),
            [&](const TaggedWord& x, const TaggedWord& y) {
              return canonical_less(x, y);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RotationResult Words::tagged_rotation(const TaggedWord& tw0) const {
  TaggedWord tw = canonical(tw0);
  const Word& w = tw.w;
  if (w.trivial()) return TrivialRotation{};
  int spec = special_end_count(w);
  if (spec == 0) {
    auto r = successor_both(w);
    if (!r) return TrivialRotation{};
    SG_ASSERT(special_end_count(*r) == 0);
    if (is_admissible(*r).ok) return canonical(TaggedWord{*r, {}, {}});
    return SplitPair{split_inadmissible_successor(*r).first};
  }
  if (spec == 1) {
    auto r = successor(w);
    if (!r) return TrivialRotation{};
    SG_ASSERT(first_special(*r) && !last_special(*r));
    SG_ASSERT(is_admissible(*r).ok);
    return canonical(TaggedWord{*r, 1 - *tw.tag_start, {}});
  }
  return canonical(TaggedWord{w, 1 - *tw.tag_start, 1 - *tw.tag_end});
}

bool Words::is_projective_word(const TaggedWord& tw0) const {
  TaggedWord tw = canonical(tw0);
  if (tw.w.trivial()) return false;
  int spec = special_end_count(tw.w);
  if (spec == 0) return !successor_both(tw.w).has_value();
  if (spec == 1) return !successor(tw.w).has_value();
  return false;
}

bool Words::is_injective_word(const TaggedWord& tw0) const {
  TaggedWord tw = canonical(tw0);
  if (tw.w.trivial()) return false;
  int spec = special_end_count(tw.w);
  if (spec == 0) return !predecessor_both(tw.w).has_value();
  if (spec == 1) return !predecessor(tw.w).has_value();
  return false;
}

std::vector<TaggedWord> Words::ar_middle(const TaggedWord& tw0) const {
  TaggedWord tw = canonical(tw0);
  const Word& w = tw.w;
  if (w.trivial())
    throw ValidationError("middle term undefined for the zero module");
  int spec = special_end_count(w);
  if (spec == 2)
    throw ValidationError(
        "middle term unsupported for words with two special ends");
  if (is_projective_word(tw))
    throw ValidationError("middle term undefined for a projective module");
  std::vector<TaggedWord> out;
  auto add = [&](const std::optional<Word>& r) {
    if (!r) return;
    SG_ASSERT(special_end_count(*r) == 0);
    if (is_admissible(*r).ok) {
      out.push_back(canonical(TaggedWord{*r, {}, {}}));
    } else {
      Word n = split_inadmissible_successor(*r).first;
      out.push_back(canonical(TaggedWord{n, 0, {}}));
      out.push_back(canonical(TaggedWord{n, 1, {}}));
    }
  };
  if (spec == 0) {
    add(successor_right(w));
    add(successor(w));
  } else {
    add(successor(completion(w)));
  }
  return out;
}

Word Words::parse_word(const std::string& text) const {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.empty()) throw ValidationError("empty word expression");
  if (toks.size() == 1 && toks[0].rfind("1@", 0) == 0) {
    int v;
    try {
      v = std::stoi(toks[0].substr(2));
    } catch (const std::exception&) {
      throw ValidationError("bad trivial word '" + toks[0] + "'");
    }
    if (!algebra().has_vertex(v))
      throw ValidationError("unknown vertex " + std::to_string(v));
    return trivial_word(Vtx{v, 0});
  }
  std::vector<Letter> ls;
  for (std::string tok : toks) {
    if (tok.rfind("@tags=", 0) == 0)
      throw ValidationError("unexpected tags inside word expression");
    bool inv = false;
    if (tok.size() >= 2 && tok.substr(tok.size() - 2) == "^-") {
      inv = true;
      tok = tok.substr(0, tok.size() - 2);
    }
    if (tok.rfind("z(", 0) == 0) {
      if (tok.back() != ')')
        throw ValidationError("bad end letter '" + tok + "'");
      std::string body = tok.substr(2, tok.size() - 3);
      auto comma = body.find(',');
      if (comma == std::string::npos)
        throw ValidationError("bad end letter '" + tok + "'");
      int v;
      try {
        v = std::stoi(body.substr(0, comma));
      } catch (const std::exception&) {
        throw ValidationError("bad end letter '" + tok + "'");
      }
      std::string sg = body.substr(comma + 1);
      if (sg != "+" && sg != "-")
        throw ValidationError("bad end letter sign in '" + tok + "'");
      if (!algebra().has_vertex(v))
        throw ValidationError("unknown vertex " + std::to_string(v));
      ls.push_back(HatQuiver::end_letter(v, sg == "+" ? 1 : -1, inv));
    } else {
      int idx = algebra().arrow_index(tok);
      if (idx < 0) throw ValidationError("unknown arrow '" + tok + "'");
      ls.push_back(HatQuiver::arrow_letter(idx, inv));
    }
  }
  return make_word(std::move(ls));
}

TaggedWord Words::attach_tags(Word w, const std::vector<int>& tags) const {
  int need = special_end_count(w);
  if (static_cast<int>(tags.size()) != need)
    throw ValidationError("word has " + std::to_string(need) +
                          " special end(s) but " + std::to_string(tags.size()) +
                          " tag(s) were given");
  for (int t : tags)
    if (t != 0 && t != 1) throw ValidationError("tags must be 0 or 1");
  TaggedWord tw{std::move(w), {}, {}};
  std::size_t k = 0;
  if (first_special(tw.w)) tw.tag_start = tags[k++];
  if (last_special(tw.w)) tw.tag_end = tags[k++];
  return tw;
}

TaggedWord Words::parse_tagged(const std::string& text) const {
  std::istringstream in(text);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  std::vector<int> tags;
  if (!toks.empty() && toks.back().rfind("@tags=", 0) == 0) {
    std::string spec = toks.back().substr(6);
    toks.pop_back();
    std::istringstream ts(spec);
    for (std::string part; std::getline(ts, part, ',');) {
      try {
        tags.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ValidationError("bad tag value '" + part + "'");
      }
    }
    if (tags.empty()) throw ValidationError("empty @tags= list");
  }
  std::string rest;
  for (const auto& t : toks) rest += (rest.empty() ? "" : " ") + t;
  return attach_tags(parse_word(rest), tags);
}

std::string Words::format(const Word& w) const {
  if (w.trivial()) {
    SG_ASSERT(!w.anchor.added());
    return "1@" + std::to_string(w.anchor.v);
  }
  std::string out;
  for (const auto& l : w.ls) {
    if (!out.empty()) out += ' ';
    out += hq_.format(l);
  }
  return out;
}

std::string Words::format(const TaggedWord& tw) const {
  std::string out = format(tw.w);
  if (tw.tag_start || tw.tag_end) {
    out += " @tags=";
    if (tw.tag_start) out += std::to_string(*tw.tag_start);
    if (tw.tag_start && tw.tag_end) out += ',';
    if (tw.tag_end) out += std::to_string(*tw.tag_end);
  }
  return out;
}

}  // namespace sg
