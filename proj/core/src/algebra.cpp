#include "frobnil/algebra.hpp"

#include <sstream>

#include "frobnil/error.hpp"

namespace frobnil {

namespace {

AlgebraElement basis_elt(BasisIndex i) { return AlgebraElement::term(i); }

std::vector<std::vector<Rational>> gram_matrix(const AlgebraData& d) {
  const std::size_t n = d.basis_labels.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational t;
      for (const auto& [k, c] : d.products[i][j].terms()) t += c * d.trace[k];
      g[i][j] = t;
    }
  return g;
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream os;
  auto line = [&](const char* what, bool okflag) {
    os << (okflag ? "  [pass] " : "  [FAIL] ") << what << "\n";
  };
  line("unital", unital);
  line("associative", associative);
  line("parity-additive multiplication", parity_additive);
  line("trace homogeneous of the declared parity", trace_homogeneous);
  line("supersymmetric trace form", supersymmetric);
  line("invertible Gram matrix", gram_invertible);
  line("grading consistent", grading_consistent);
  for (const auto& m : messages) os << "    - " << m << "\n";
  return os.str();
}

std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational f = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

ValidationReport validate(const AlgebraData& d) {
  ValidationReport r;
  const std::size_t n = d.basis_labels.size();
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    r.messages.push_back(msg);
  };

  if (n == 0 || d.parities.size() != n || d.trace.size() != n ||
      d.products.size() != n || d.unit_index >= n)
    throw Error(ErrorCode::ValidationFailed, "inconsistent basis data sizes");
  for (const auto& row : d.products)
    if (row.size() != n) throw Error(ErrorCode::ValidationFailed, "ragged product table");

  const BasisIndex e = d.unit_index;
  for (BasisIndex i = 0; i < n; ++i) {
    if (d.products[e][i] != basis_elt(i) || d.products[i][e] != basis_elt(i))
      fail(r.unital, "unit fails on " + d.basis_labels[i]);
  }

  // (b_i b_j) b_k = b_i (b_j b_k), expanded through the table.
  auto mul = [&](const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [i, ci] : a.terms())
      for (const auto& [j, cj] : b.terms()) out += d.products[i][j] * (ci * cj);
    return out;
  };
  for (BasisIndex i = 0; i < n && r.associative; ++i)
    for (BasisIndex j = 0; j < n && r.associative; ++j)
      for (BasisIndex k = 0; k < n; ++k) {
        if (mul(d.products[i][j], basis_elt(k)) != mul(basis_elt(i), d.products[j][k])) {
          fail(r.associative, "associativity fails on (" + d.basis_labels[i] + "," +
                                  d.basis_labels[j] + "," + d.basis_labels[k] + ")");
          break;
        }
      }

  for (BasisIndex i = 0; i < n; ++i)
    for (BasisIndex j = 0; j < n; ++j) {
      const Parity want = d.parities[i] + d.parities[j];
      for (const auto& [k, c] : d.products[i][j].terms()) {
        (void)c;
        if (d.parities[k] != want) {
          fail(r.parity_additive, "product " + d.basis_labels[i] + "*" +
                                      d.basis_labels[j] + " mixes parities");
        }
      }
    }

  for (BasisIndex i = 0; i < n; ++i) {
    if (!d.trace[i].is_zero() && d.parities[i] != d.trace_parity)
      fail(r.trace_homogeneous,
           "trace does not vanish on " + d.basis_labels[i] + " of the wrong parity");
  }

  // tr(ab) = (-1)^{|a||b|} tr(ba) on basis pairs.
  auto tr = [&](const AlgebraElement& a) {
    Rational t;
    for (const auto& [k, c] : a.terms()) t += c * d.trace[k];
    return t;
  };
  for (BasisIndex i = 0; i < n; ++i)
    for (BasisIndex j = 0; j < n; ++j) {
      const int sign = pow_sign(parity_bit(d.parities[i]) * parity_bit(d.parities[j]));
      if (tr(d.products[i][j]) != Rational(sign) * tr(d.products[j][i])) {
        fail(r.supersymmetric, "trace form not supersymmetric on (" +
                                   d.basis_labels[i] + "," + d.basis_labels[j] + ")");
      }
    }

  // Invertibility via the solves used for the dual basis.
  {
    auto g = gram_matrix(d);
    // Singular iff some unit vector has no preimage under G^T.
    std::vector<std::vector<Rational>> gt(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gt[i][j] = g[j][i];
    std::vector<Rational> e0(n);
    e0[0] = Rational(1);
    if (!solve_linear(gt, e0))
      fail(r.gram_invertible, "Gram matrix tr(b_i b_j) is singular");
  }

  if (d.degrees) {
    const auto& deg = *d.degrees;
    if (deg.size() != n) throw Error(ErrorCode::ValidationFailed, "degree vector size mismatch");
    for (BasisIndex i = 0; i < n; ++i)
      for (BasisIndex j = 0; j < n; ++j)
        for (const auto& [k, c] : d.products[i][j].terms()) {
          (void)c;
          if (deg[k] != deg[i] + deg[j])
            fail(r.grading_consistent, "multiplication does not add degrees on " +
                                           d.basis_labels[i] + "*" + d.basis_labels[j]);
        }
    for (BasisIndex i = 0; i < n; ++i) {
      if (!d.trace[i].is_zero() && deg[i] + d.trace_degree != 0)
        fail(r.grading_consistent,
             "trace does not vanish off degree " + std::to_string(-d.trace_degree));
    }
  }

  return r;
}

FrobeniusSuperalgebra::FrobeniusSuperalgebra(AlgebraData data, ValidationReport report)
    : data_(std::move(data)), report_(std::move(report)) {}

FrobeniusSuperalgebra FrobeniusSuperalgebra::create(AlgebraData data) {
  ValidationReport r = validate(data);
  if (!r.unital) throw Error(ErrorCode::NotUnital, r.summary());
  if (!r.associative) throw Error(ErrorCode::NotAssociative, r.summary());
  if (!r.gram_invertible) throw Error(ErrorCode::GramSingular, r.summary());
  if (!r.frobenius_ok()) throw Error(ErrorCode::ValidationFailed, r.summary());

  FrobeniusSuperalgebra a(std::move(data), std::move(r));

  // Dual basis: solve tr(b_i^v b_j) = delta_{ij} row by row against the Gram
  // matrix. With b_i^v = sum_m c_m b_m this is G^T c = e_i.
  const std::size_t n = a.dim();
  auto g = gram_matrix(a.data_);
  std::vector<std::vector<Rational>> gt(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gt[i][j] = g[j][i];
  a.duals_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> rhs(n);
    rhs[i] = Rational(1);
    auto sol = solve_linear(gt, rhs);
    if (!sol) throw Error(ErrorCode::GramSingular, "dual basis solve failed");
    AlgebraElement dual;
    for (std::size_t m = 0; m < n; ++m) dual.add_term(static_cast<BasisIndex>(m), (*sol)[m]);
    // parity(b^v) = parity(b) + trace parity
    for (const auto& [k, c] : dual.terms()) {
      (void)c;
      if (a.parity(k) != a.parity(static_cast<BasisIndex>(i)) + a.trace_parity())
        throw Error(ErrorCode::ValidationFailed, "dual basis element has impure parity");
    }
    a.duals_[i] = std::move(dual);
  }
  return a;
}

std::optional<BasisIndex> FrobeniusSuperalgebra::index_of(std::string_view label) const {
  for (BasisIndex i = 0; i < dim(); ++i)
    if (data_.basis_labels[i] == label) return i;
  return std::nullopt;
}

Rational FrobeniusSuperalgebra::trace_of(const AlgebraElement& a) const {
  Rational t;
  for (const auto& [k, c] : a.terms()) t += c * data_.trace[k];
  return t;
}

void FrobeniusSuperalgebra::require_symmetric(const char* what) const {
  if (!symmetric())
    throw Error(ErrorCode::NotSymmetric,
                std::string(what) + " needs a symmetric trace form; '" + name() +
                    "' is only Frobenius");
}

int FrobeniusSuperalgebra::degree(BasisIndex i) const {
  if (!graded()) throw Error(ErrorCode::NotGraded, "'" + name() + "' carries no Z-grading");
  return (*data_.degrees)[i];
}

int FrobeniusSuperalgebra::d() const {
  if (!graded()) throw Error(ErrorCode::NotGraded, "'" + name() + "' carries no Z-grading");
  return -data_.trace_degree;
}

AlgebraElement FrobeniusSuperalgebra::multiply(const AlgebraElement& a,
                                               const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out += data_.products[i][j] * (ci * cj);
  return out;
}

std::optional<Parity> FrobeniusSuperalgebra::parity_of(const AlgebraElement& a) const {
  std::optional<Parity> p;
  for (const auto& [k, c] : a.terms()) {
    (void)c;
    if (!p) p = parity(k);
    else if (*p != parity(k)) return std::nullopt;
  }
  return p;
}

std::vector<AlgebraElement> FrobeniusSuperalgebra::nakayama() const {
  // psi(a) solves tr(ab) = (-1)^{|a||b|} tr(b psi(a)) for all basis b.
  const std::size_t n = dim();
  auto g = gram_matrix(data_);  // g[b][m] = tr(b_b b_m)
  std::vector<AlgebraElement> psi(n);
  for (BasisIndex a = 0; a < n; ++a) {
    std::vector<std::vector<Rational>> m = g;
    std::vector<Rational> rhs(n);
    for (BasisIndex b = 0; b < n; ++b) {
      const int sign = pow_sign(parity_bit(parity(a)) * parity_bit(parity(b)));
      rhs[b] = Rational(sign) * trace_of(multiply(basis_elt(a), basis_elt(b)));
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) throw Error(ErrorCode::GramSingular, "Nakayama solve failed");
    for (std::size_t k = 0; k < n; ++k) psi[a].add_term(static_cast<BasisIndex>(k), (*sol)[k]);
  }

  // The solution must be a parity-preserving unital algebra map.
  auto apply = [&](const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [k, c] : x.terms()) out += psi[k] * c;
    return out;
  };
  if (psi[unit()] != basis_elt(unit()))
    throw Error(ErrorCode::NotAutomorphism, "Nakayama map does not fix the unit");
  for (BasisIndex i = 0; i < n; ++i) {
    for (const auto& [k, c] : psi[i].terms()) {
      (void)c;
      if (parity(k) != parity(i))
        throw Error(ErrorCode::NotAutomorphism, "Nakayama map mixes parities");
    }
    for (BasisIndex j = 0; j < n; ++j) {
      if (apply(product(i, j)) != multiply(psi[i], psi[j]))
        throw Error(ErrorCode::NotAutomorphism, "Nakayama map is not multiplicative");
    }
  }
  return psi;
}

bool FrobeniusSuperalgebra::same_structure(const FrobeniusSuperalgebra& o) const {
  return data_.basis_labels == o.data_.basis_labels &&
         data_.parities == o.data_.parities && data_.unit_index == o.data_.unit_index &&
         data_.products == o.data_.products && data_.trace == o.data_.trace &&
         data_.trace_parity == o.data_.trace_parity;
}

namespace {

AlgebraData clifford_data(bool odd_trace) {
  AlgebraData d;
  d.name = odd_trace ? "clifford_odd" : "clifford_even";
  d.basis_labels = {"1", "c"};
  d.parities = {Parity::even, Parity::odd};
  d.unit_index = 0;
  d.products = {{basis_elt(0), basis_elt(1)}, {basis_elt(1), basis_elt(0)}};
  d.trace = odd_trace ? std::vector<Rational>{Rational(0), Rational(1)}
                      : std::vector<Rational>{Rational(1), Rational(0)};
  d.trace_parity = odd_trace ? Parity::odd : Parity::even;
  return d;
}

}  // namespace

FrobeniusSuperalgebra ground() {
  AlgebraData d;
  d.name = "ground";
  d.basis_labels = {"1"};
  d.parities = {Parity::even};
  d.unit_index = 0;
  d.products = {{basis_elt(0)}};
  d.trace = {Rational(1)};
  d.trace_parity = Parity::even;
  d.degrees = std::vector<int>{0};
  d.trace_degree = 0;
  return FrobeniusSuperalgebra::create(std::move(d));
}

FrobeniusSuperalgebra clifford_odd() {
  return FrobeniusSuperalgebra::create(clifford_data(true));
}

FrobeniusSuperalgebra clifford_even() {
  return FrobeniusSuperalgebra::create(clifford_data(false));
}

FrobeniusSuperalgebra dual_numbers() {
  AlgebraData d;
  d.name = "dual_numbers";
  d.basis_labels = {"1", "y"};
  d.parities = {Parity::even, Parity::even};
  d.unit_index = 0;
  d.products = {{basis_elt(0), basis_elt(1)}, {basis_elt(1), AlgebraElement{}}};
  d.trace = {Rational(0), Rational(1)};
  d.trace_parity = Parity::even;
  return FrobeniusSuperalgebra::create(std::move(d));
}

FrobeniusSuperalgebra cyclic_group(unsigned m) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "cyclic_group needs m >= 1");
  AlgebraData d;
  d.name = "cyclic_group(" + std::to_string(m) + ")";
  d.basis_labels.push_back("1");
  if (m > 1) d.basis_labels.push_back("g");
  for (unsigned i = 2; i < m; ++i) d.basis_labels.push_back("g" + std::to_string(i));
  d.parities.assign(m, Parity::even);
  d.unit_index = 0;
  d.products.assign(m, std::vector<AlgebraElement>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      d.products[i][j] = basis_elt(static_cast<BasisIndex>((i + j) % m));
  d.trace.assign(m, Rational(0));
  d.trace[0] = Rational(1);
  d.trace_parity = Parity::even;
  return FrobeniusSuperalgebra::create(std::move(d));
}

FrobeniusSuperalgebra builtin(std::string_view name) {
  if (name == "ground") return ground();
  if (name == "clifford_odd") return clifford_odd();
  if (name == "clifford_even") return clifford_even();
  if (name == "dual_numbers") return dual_numbers();
  if (name.rfind("cyclic_group(", 0) == 0 && name.back() == ')') {
    const auto inner = name.substr(13, name.size() - 14);
    unsigned m = 0;
    for (char ch : inner) {
      if (ch < '0' || ch > '9')
        throw Error(ErrorCode::ParseError, "bad cyclic_group order '" + std::string(inner) + "'");
      m = m * 10 + static_cast<unsigned>(ch - '0');
    }
    return cyclic_group(m);
  }
  throw Error(ErrorCode::UnknownSymbol, "unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace frobnil
