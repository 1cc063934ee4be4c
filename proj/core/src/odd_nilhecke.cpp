#include "frobnil/odd_nilhecke.hpp"

#include "frobnil/error.hpp"

namespace frobnil {

namespace {

unsigned exps_sum(const std::vector<unsigned>& k) {
  unsigned t = 0;
  for (unsigned v : k) t += v;
  return t;
}

/// key * c_j: the c's pair with positions, not strands, so c_j anticommutes
/// past every crossing and every y with its index unchanged, then merges
/// into the descending c-word.
OddElement rmul_c_key(const OddNHKey& key, unsigned j) {
  unsigned flips = key.perm.length() + exps_sum(key.exps);
  OddNHKey nk = key;
  for (unsigned m = 1; m < j; ++m)
    if (key.has_c(m)) ++flips;
  nk.cbits[j - 1] ^= 1;
  return OddElement::term(std::move(nk), Rational(pow_sign(flips)));
}

/// key * y_j: analogous to the dot exchange, but every move anticommutes and
/// the split term is the bare identity.
OddElement rmul_y_key(const OddNHKey& key, unsigned j);

/// v_w is the product along the lexicographically smallest reduced word, so
/// the far anticommutation v_i v_j = -v_j v_i makes products of crossings
/// sign-sensitive to the representative. extract_front rewrites a reduced
/// word as sign * v_a * (rest) for a left descent a, by far swaps (one sign
/// each) and braid moves (no sign); normalize_vword peels canonical letters
/// to relate any reduced word to the canonical one.
int extract_front(std::vector<unsigned>& word, unsigned a) {
  if (word.front() == a) {
    word.erase(word.begin());
    return 1;
  }
  const unsigned b = word.front();
  std::vector<unsigned> tail(word.begin() + 1, word.end());
  if (b > a + 1 || a > b + 1) {
    const int s = extract_front(tail, a);
    word.assign(1, b);
    word.insert(word.end(), tail.begin(), tail.end());
    return -s;
  }
  // Adjacent descents: the element starts with the full braid block aba.
  const int s1 = extract_front(tail, a);
  const int s2 = extract_front(tail, b);
  word.clear();
  word.push_back(b);
  word.push_back(a);
  word.insert(word.end(), tail.begin(), tail.end());
  return s1 * s2;
}

/// sign relating the given reduced word to the canonical word of its element.
int normalize_vword(std::vector<unsigned> word, unsigned n) {
  int sign = 1;
  Permutation cur = Permutation::from_word(n, word);
  while (!word.empty()) {
    unsigned a = 0;
    for (unsigned i = 1; i < n; ++i) {
      if (!cur.left_ascent(i)) {
        a = i;
        break;
      }
    }
    sign *= extract_front(word, a);
    cur = cur.left_multiply_simple(a);
  }
  return sign;
}

OddElement rmul_v(const OddElement& e, unsigned i) {
  OddElement out;
  for (const auto& [k, c] : e.terms()) {
    if (!k.perm.right_ascent(i)) continue;
    std::vector<unsigned> word = k.perm.reduced_word();
    word.push_back(i);
    const int sign = normalize_vword(word, k.size());
    out.add_term(OddNHKey{k.cbits, k.exps, k.perm.right_multiply_simple(i)},
                 c * Rational(sign));
  }
  return out;
}

OddElement rmul_y_key(const OddNHKey& key, unsigned j) {
  const unsigned n = key.size();
  if (key.perm.is_identity()) {
    unsigned above = 0;
    for (unsigned m = j; m < n; ++m) above += key.exps[m];
    OddNHKey nk = key;
    nk.exps[j - 1] += 1;
    return OddElement::term(std::move(nk), Rational(pow_sign(above)));
  }

  const auto word = key.perm.reduced_word();
  const unsigned i = word.back();
  const OddNHKey stripped{key.cbits, key.exps, key.perm.right_multiply_simple(i)};

  unsigned jnext = j;
  bool split = false;
  if (j == i + 1) {
    jnext = i;
    split = true;
  } else if (j == i) {
    jnext = i + 1;
    split = true;
  }

  OddElement out = rmul_v(rmul_y_key(stripped, jnext), i) * Rational(-1);
  if (split) out += OddElement::term(stripped);
  return out;
}

}  // namespace

OddElement onh_one(unsigned n) {
  return OddElement::term(OddNHKey{std::vector<std::uint8_t>(n, 0),
                                   std::vector<unsigned>(n, 0), Permutation::identity(n)});
}

OddElement c_gen(unsigned n, unsigned i) {
  if (i < 1 || i > n) throw Error(ErrorCode::StrandOutOfRange, "c index out of range");
  OddNHKey k{std::vector<std::uint8_t>(n, 0), std::vector<unsigned>(n, 0),
             Permutation::identity(n)};
  k.cbits[i - 1] = 1;
  return OddElement::term(std::move(k));
}

OddElement y_gen(unsigned n, unsigned i) {
  if (i < 1 || i > n) throw Error(ErrorCode::StrandOutOfRange, "y index out of range");
  OddNHKey k{std::vector<std::uint8_t>(n, 0), std::vector<unsigned>(n, 0),
             Permutation::identity(n)};
  k.exps[i - 1] = 1;
  return OddElement::term(std::move(k));
}

OddElement v_gen(unsigned n, unsigned i) {
  if (i < 1 || i + 1 > n) throw Error(ErrorCode::StrandOutOfRange, "v index out of range");
  return OddElement::term(OddNHKey{std::vector<std::uint8_t>(n, 0),
                                   std::vector<unsigned>(n, 0),
                                   Permutation::transposition(n, i)});
}

OddElement onh_mul(unsigned n, const OddElement& e1, const OddElement& e2) {
  OddElement out;
  for (const auto& [k2, c2] : e2.terms()) {
    if (k2.size() != n)
      throw Error(ErrorCode::SizeMismatch, "odd nilHecke factor of unexpected size");
    OddElement acc = e1 * c2;
    for (const auto& [k1, c1] : e1.terms()) {
      (void)c1;
      if (k1.size() != n)
        throw Error(ErrorCode::SizeMismatch, "odd nilHecke factor of unexpected size");
      break;
    }
    for (unsigned s = n; s >= 1; --s) {
      if (k2.has_c(s)) {
        OddElement next;
        for (const auto& [k, c] : acc.terms()) next += rmul_c_key(k, s) * c;
        acc = std::move(next);
      }
      if (s == 1) break;
    }
    for (unsigned j = 1; j <= n; ++j) {
      for (unsigned t = 0; t < k2.exps[j - 1]; ++t) {
        OddElement next;
        for (const auto& [k, c] : acc.terms()) next += rmul_y_key(k, j) * c;
        acc = std::move(next);
      }
    }
    for (unsigned i : k2.perm.reduced_word()) acc = rmul_v(acc, i);
    out += acc;
  }
  return out;
}

Parity odd_key_parity(const OddNHKey& k) {
  unsigned odd = exps_sum(k.exps) + k.perm.length();
  for (auto b : k.cbits) odd += b;
  return odd % 2 ? Parity::odd : Parity::even;
}

void require_clifford(const FrobeniusSuperalgebra& A) {
  const bool ok = A.dim() == 2 && A.parity(0) == Parity::even &&
                  A.parity(1) == Parity::odd && A.unit() == 0 &&
                  A.product(1, 1) == AlgebraElement::term(0) &&
                  A.trace(0).is_zero() && A.trace(1).is_one() &&
                  is_odd(A.trace_parity());
  if (!ok)
    throw Error(ErrorCode::AlgebraMismatch,
                "'" + A.name() + "' is not the rank-two Clifford algebra with odd trace");
}

OddElement psi(const FrobeniusSuperalgebra& A, const NHElement& e) {
  require_clifford(A);
  OddElement out;
  for (const auto& [key, c] : e.terms()) {
    const unsigned n = key.word.size();
    check_word(A, key.word);
    // The word and dot blocks map slot-by-slot onto an already-normal key;
    // crossings map to (c_i - c_{i+1}) v_i and are multiplied in.
    OddNHKey base{std::vector<std::uint8_t>(n, 0), key.exps, Permutation::identity(n)};
    for (unsigned s = 1; s <= n; ++s)
      if (key.word.at(s) == 1) base.cbits[s - 1] = 1;
    OddElement img = OddElement::term(std::move(base), c);
    for (unsigned i : key.perm.reduced_word()) {
      const OddElement cross =
          onh_mul(n, c_gen(n, i) - c_gen(n, i + 1), v_gen(n, i));
      img = onh_mul(n, img, cross);
    }
    out += img;
  }
  return out;
}

NHElement psi_inv(const FrobeniusSuperalgebra& A, const OddElement& e) {
  require_clifford(A);
  NHElement out;
  for (const auto& [key, c] : e.terms()) {
    const unsigned n = key.size();
    TensorWord w = unit_word(A, n);
    for (unsigned s = 1; s <= n; ++s)
      if (key.has_c(s)) w.at(s) = 1;
    NHElement img =
        NHElement::term(NilHeckeKey{std::move(w), key.exps, Permutation::identity(n)}, c);
    for (unsigned i : key.perm.reduced_word()) {
      const NHElement cross = nh_mul(
          A, nh_from_tensor(tau_i(A, n, i)) * Rational(1, 2), u_gen(A, n, i));
      img = nh_mul(A, img, cross);
    }
    out += img;
  }
  return out;
}

}  // namespace frobnil
