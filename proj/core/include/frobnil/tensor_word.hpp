#pragma once

#include <cstdint>
#include <vector>

#include "frobnil/element.hpp"

namespace frobnil {

using BasisIndex = std::uint32_t;

/// Element of A as a linear combination of basis indices.
using AlgebraElement = Element<BasisIndex>;

/// Basis word of an n-fold tensor power. Strands are numbered 1..n from
/// right to left as written on paper: entries[i-1] holds the factor on
/// strand i. Ordering compares the highest strand first, i.e. words sort by
/// their written-out left-to-right reading, so strand-1 tokens print before
/// strand-2 tokens.
struct TensorWord {
  std::vector<BasisIndex> entries;

  unsigned size() const { return static_cast<unsigned>(entries.size()); }
  /// Factor on strand i, 1-based.
  BasisIndex at(unsigned strand) const { return entries[strand - 1]; }
  BasisIndex& at(unsigned strand) { return entries[strand - 1]; }

  friend bool operator==(const TensorWord& a, const TensorWord& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const TensorWord& a, const TensorWord& b) {
    if (a.entries.size() != b.entries.size())
      return a.entries.size() < b.entries.size();
    for (std::size_t i = a.entries.size(); i-- > 0;) {
      if (a.entries[i] != b.entries[i]) return a.entries[i] < b.entries[i];
    }
    return false;
  }
};

using TensorElement = Element<TensorWord>;

}  // namespace frobnil
