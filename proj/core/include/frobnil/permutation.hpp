#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

namespace frobnil {

/// Permutation of {1,...,n} in one-line notation: images()[i-1] = w(i).
/// Value type; the one-line vector is the identity used for ordering and
/// hashing in element keys.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(unsigned n);
  /// Simple transposition s_i swapping i and i+1, 1 <= i <= n-1.
  static Permutation transposition(unsigned n, unsigned i);
  /// Longest element, i -> n+1-i.
  static Permutation longest(unsigned n);

  unsigned size() const { return static_cast<unsigned>(images_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// (w o v)(i) = w(v(i)). Sizes must agree.
  Permutation compose(const Permutation& v) const;
  Permutation inverse() const;

  /// Number of inversions; equals the length of any reduced word.
  unsigned length() const;

  /// w o s_i: the one-line vector with positions i, i+1 swapped.
  Permutation right_multiply_simple(unsigned i) const;
  /// s_i o w: the one-line vector with values i, i+1 swapped.
  Permutation left_multiply_simple(unsigned i) const;

  /// True iff l(w o s_i) = l(w) + 1, i.e. w(i) < w(i+1).
  bool right_ascent(unsigned i) const;
  /// True iff l(s_i o w) = l(w) + 1.
  bool left_ascent(unsigned i) const;

  /// Lexicographically smallest reduced word, as generator indices.
  std::vector<unsigned> reduced_word() const;
  /// All reduced words. Guarded to n <= 5 (throws SizeTooLarge beyond).
  std::set<std::vector<unsigned>> all_reduced_words() const;
  /// Evaluate a word of generator indices to a permutation of size n.
  static Permutation from_word(unsigned n, const std::vector<unsigned>& word);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

}  // namespace frobnil
