#include "frobnil/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "frobnil/error.hpp"

namespace frobnil {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v) - 1])
      throw Error(ErrorCode::IndexOutOfRange, "one-line notation is not a bijection");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  Permutation w;
  w.images_ = std::move(v);
  return w;
}

Permutation Permutation::transposition(unsigned n, unsigned i) {
  if (i < 1 || i + 1 > n)
    throw Error(ErrorCode::IndexOutOfRange, "transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Permutation Permutation::longest(unsigned n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "longest element needs n >= 1");
  std::vector<int> v(n);
  for (unsigned i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  Permutation w;
  w.images_ = std::move(v);
  return w;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& v) const {
  if (size() != v.size()) throw Error(ErrorCode::SizeMismatch, "composing permutations of different sizes");
  Permutation w;
  w.images_.resize(size());
  for (unsigned i = 0; i < size(); ++i)
    w.images_[i] = images_[static_cast<std::size_t>(v.images_[i]) - 1];
  return w;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.images_.resize(size());
  for (unsigned i = 0; i < size(); ++i)
    w.images_[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
  return w;
}

unsigned Permutation::length() const {
  unsigned inv = 0;
  for (unsigned i = 0; i < size(); ++i)
    for (unsigned j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Permutation Permutation::right_multiply_simple(unsigned i) const {
  Permutation w(*this);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Permutation Permutation::left_multiply_simple(unsigned i) const {
  Permutation w(*this);
  for (auto& v : w.images_) {
    if (v == static_cast<int>(i)) v = static_cast<int>(i) + 1;
    else if (v == static_cast<int>(i) + 1) v = static_cast<int>(i);
  }
  return w;
}

bool Permutation::right_ascent(unsigned i) const {
  return images_[i - 1] < images_[i];
}

bool Permutation::left_ascent(unsigned i) const {
  // l(s_i o w) = l(w) + 1 iff i appears before i+1 in the one-line vector.
  std::size_t pos_i = 0, pos_i1 = 0;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] == static_cast<int>(i)) pos_i = j;
    else if (images_[j] == static_cast<int>(i) + 1) pos_i1 = j;
  }
  return pos_i < pos_i1;
}

std::vector<unsigned> Permutation::reduced_word() const {
  // Greedy: repeatedly strip the smallest left descent. Any reduced word
  // starts with a left descent, so the greedy choice is lexicographically
  // optimal at every step.
  std::vector<unsigned> word;
  Permutation w(*this);
  bool progress = true;
  while (progress) {
    progress = false;
    for (unsigned i = 1; i < w.size(); ++i) {
      if (!w.left_ascent(i)) {
        word.push_back(i);
        w = w.left_multiply_simple(i);
        progress = true;
        break;
      }
    }
  }
  return word;
}

std::set<std::vector<unsigned>> Permutation::all_reduced_words() const {
  if (size() > 5)
    throw Error(ErrorCode::SizeTooLarge, "reduced word enumeration guarded to n <= 5");
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  // DFS over left descents.
  auto rec = [&](auto&& self, const Permutation& w) -> void {
    bool terminal = true;
    for (unsigned i = 1; i < w.size(); ++i) {
      if (!w.left_ascent(i)) {
        terminal = false;
        prefix.push_back(i);
        self(self, w.left_multiply_simple(i));
        prefix.pop_back();
      }
    }
    if (terminal) out.insert(prefix);
  };
  rec(rec, *this);
  return out;
}

Permutation Permutation::from_word(unsigned n, const std::vector<unsigned>& word) {
  Permutation w = identity(n);
  for (unsigned i : word) {
    if (i < 1 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
    w = w.right_multiply_simple(i);
  }
  return w;
}

}  // namespace frobnil
