#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sg/hatq.hpp"

namespace sg {

// A word: composable sign-alternating letter sequence in application order
// (ls[0] is applied first). Empty sequence = trivial word at `anchor`.
struct Word {
  std::vector<Letter> ls;
  Vtx anchor{};
  bool trivial() const { return ls.empty(); }
  int len() const { return static_cast<int>(ls.size()); }
  bool operator==(const Word&) const = default;
};

// Admissible word plus one {0,1} tag per special end letter. tag_start is
// set iff the first letter is a special end letter, tag_end likewise for the
// last letter.
struct TaggedWord {
  Word w;
  std::optional<int> tag_start, tag_end;
  bool operator==(const TaggedWord&) const = default;
};

struct TrivialRotation {
  bool operator==(const TrivialRotation&) const = default;
};

// A rotated word that left the admissible range: it equals the completion of
// the admissible word `n` (exactly one special end letter), and stands for
// the pair of taggings 0 and 1 of n.
struct SplitPair {
  Word n;
  bool operator==(const SplitPair&) const = default;
};

using RotationResult = std::variant<TrivialRotation, TaggedWord, SplitPair>;

struct AdmissibleCheck {
  bool ok = true;
  std::string witness;  // "A1@i" or "A2" when !ok
};

// Word operations over a fixed algebra.
class Words {
 public:
  explicit Words(const Algebra& a) : hq_(a) {}
  const Algebra& algebra() const { return hq_.algebra(); }
  const HatQuiver& hatq() const { return hq_; }

  // Validation: both chain conditions at every junction; distinct errors for
  // the vertex chain and the sign chain.
  Word make_word(std::vector<Letter> ls) const;
  Word trivial_word(Vtx anchor) const { return Word{{}, anchor}; }

  Vtx s(const Word& w) const;
  Vtx t(const Word& w) const;
  int sigma(const Word& w) const;
  int tau(const Word& w) const;

  Word inverse(const Word& w) const;
  TaggedWord inverse(const TaggedWord& tw) const;
  // product(w1, w2): apply w2 first, then w1; needs t(w2)=s(w1) and
  // tau(w2) = -sigma(w1).
  Word product(const Word& w1, const Word& w2) const;
  // Letters strictly between positions i and j, 0 <= i < j <= len+1.
  Word subword(const Word& w, int i, int j) const;

  bool left_inextensible(const Word& w) const;
  bool right_inextensible(const Word& w) const;
  bool inextensible(const Word& w) const;

  int special_end_count(const Word& w) const;
  bool first_special(const Word& w) const;
  bool last_special(const Word& w) const;

  // First-difference order on words sharing (s, sigma). Throws InternalError
  // when one word is a proper prefix of the other (cannot happen between
  // left-inextensible words).
  std::strong_ordering compare(const Word& m, const Word& n) const;

  // Successor [1]m / predecessor [-1]m among left-inextensible words with
  // the same (s, sigma): change the latest possible position, then complete
  // greedily (maximally for the successor, minimally for the predecessor).
  std::optional<Word> successor(const Word& m) const;
  std::optional<Word> predecessor(const Word& m) const;
  // m[1] and m[-1]: the same operations on the other end.
  std::optional<Word> successor_right(const Word& m) const;
  std::optional<Word> predecessor_right(const Word& m) const;
  // [1]m[1]: either composition order; both agree when both exist.
  std::optional<Word> successor_both(const Word& m) const;
  std::optional<Word> predecessor_both(const Word& m) const;

  // Completion F(m): closes special ends by conjugating with special loops.
  // With two special ends the result is a cyclic word (no end letters).
  Word completion(const Word& m) const;

  AdmissibleCheck is_admissible(const Word& m) const;

  // Recover the admissible word n (one special end) with F(n) ~ w, for an
  // inadmissible successor w. Returns n and the center position of w used.
  std::pair<Word, int> split_inadmissible_successor(const Word& w) const;

  TaggedWord canonical(const TaggedWord& tw) const;
  bool is_canonical(const TaggedWord& tw) const;
  // Deterministic order used for enumeration output.
  bool canonical_less(const TaggedWord& x, const TaggedWord& y) const;

  // All inextensible words of length <= max_len (both directions included).
  std::vector<Word> enumerate_inextensible(int max_len) const;
  // All left-inextensible words of length <= max_len, any start.
  std::vector<Word> enumerate_left_inextensible(int max_len) const;
  // Canonical tagged admissible words of length <= max_len, sorted.
  std::vector<TaggedWord> enumerate_admissible(int max_len) const;

  // Word half of the tagged rotation: no special ends -> [1]m[1]; one
  // (necessarily leading) -> [1]m with the tag flipped; two -> same word,
  // both tags flipped. Trivial when the successors do not exist.
  RotationResult tagged_rotation(const TaggedWord& tw) const;
  bool is_projective_word(const TaggedWord& tw) const;
  bool is_injective_word(const TaggedWord& tw) const;

  // Summands of the middle term of the Auslander-Reiten sequence ending at
  // the given word's module (split pairs flattened into their two taggings).
  std::vector<TaggedWord> ar_middle(const TaggedWord& tw) const;

  Word parse_word(const std::string& text) const;
  TaggedWord parse_tagged(const std::string& text) const;
  TaggedWord attach_tags(Word w, const std::vector<int>& tags) const;
  std::string format(const Word& w) const;
  std::string format(const TaggedWord& tw) const;

 private:
  std::optional<Word> successor_impl(const Word& m, bool toward_smaller) const;
  Word greedy_completion(std::vector<Letter> prefix, bool maximal) const;
  // Fixed arbitrary letter order used only for canonicalization.
  std::vector<int> canonical_key(const Letter& l) const;

  HatQuiver hq_;
};

}  // namespace sg
