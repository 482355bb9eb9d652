#pragma once

// Symmetrizable generalized Cartan matrices, weight and root lattice
// elements, and the bilinear pairings between them.
//
// Conventions: node indices are 0-based internally. The coroot pairing is
// <alpha_j, h_i> = a_ij and the symmetric form is (alpha_j | alpha_i) = d_i a_ij.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "klr/error.hpp"

namespace klr {

using BigInt = boost::multiprecision::cpp_int;
using Index = int;
using Matrix = std::vector<std::vector<long long>>;

/// A sequence (nu_1, ..., nu_n) of node indices.
class IndexTuple {
 public:
  IndexTuple() = default;
  IndexTuple(std::initializer_list<Index> init) : entries_(init) {}
  explicit IndexTuple(std::vector<Index> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 0-based access.
  Index operator[](std::size_t k) const { return entries_[k]; }
  /// 1-based access, matching the position conventions of the formulas.
  Index at1(std::size_t t) const { return entries_.at(t - 1); }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<Index>& entries() const noexcept { return entries_; }

  /// The subsequence at the given 1-based increasing positions.
  IndexTuple sub(std::span<const int> positions) const {
    std::vector<Index> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(entries_.at(static_cast<std::size_t>(p - 1)));
    return IndexTuple(std::move(out));
  }

  IndexTuple without(std::size_t k0) const {
    std::vector<Index> out = entries_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k0));
    return IndexTuple(std::move(out));
  }

  auto operator<=>(const IndexTuple&) const = default;
  bool operator==(const IndexTuple&) const = default;

 private:
  std::vector<Index> entries_;
};

/// Lambda = sum_i k_i Lambda_i. Coefficients may be negative when the value
/// stands for a shifted weight such as Lambda - beta.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }
  static Weight fundamental(std::size_t rank, Index i) {
    Weight w = zero(rank);
    w.coeffs_.at(static_cast<std::size_t>(i)) = 1;
    return w;
  }

  std::size_t size() const noexcept { return coeffs_.size(); }
  long long operator[](Index i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<long long>& coeffs() const noexcept { return coeffs_; }

  bool dominant() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long k) { return k >= 0; });
  }
  long long level() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0LL); }

  Weight operator+(const Weight& o) const {
    if (o.size() != size()) throw Error(ErrorKind::LengthMismatch, "weights of different rank");
    Weight r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  std::vector<long long> coeffs_;
};

/// beta = sum_i k_i alpha_i with k_i >= 0.
class RootElement {
 public:
  RootElement() = default;
  explicit RootElement(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    for (long long k : coeffs_) {
      if (k < 0) throw Error(ErrorKind::OutOfRange, "root multiplicities must be non-negative");
    }
  }
  static RootElement zero(std::size_t rank) { return RootElement(std::vector<long long>(rank, 0)); }

  std::size_t size() const noexcept { return coeffs_.size(); }
  long long operator[](Index i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<long long>& coeffs() const noexcept { return coeffs_; }
  long long height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0LL); }

  RootElement plus_simple(Index i) const {
    RootElement r = *this;
    r.coeffs_.at(static_cast<std::size_t>(i)) += 1;
    return r;
  }
  RootElement minus_simple(Index i) const {
    RootElement r = *this;
    auto& k = r.coeffs_.at(static_cast<std::size_t>(i));
    if (k == 0) throw Error(ErrorKind::OutOfRange, "beta - alpha_i leaves Q^+");
    k -= 1;
    return r;
  }
  RootElement operator+(const RootElement& o) const {
    if (o.size() != size()) throw Error(ErrorKind::LengthMismatch, "roots of different rank");
    RootElement r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }

  auto operator<=>(const RootElement&) const = default;
  bool operator==(const RootElement&) const = default;

 private:
  std::vector<long long> coeffs_;
};

/// A validated symmetrizable generalized Cartan matrix together with its
/// minimal symmetrizer. Construct through validate_cartan or builtin_cartan.
class CartanData {
 public:
  std::size_t rank() const noexcept { return matrix_.size(); }
  long long a(Index i, Index j) const {
    return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  long long d(Index i) const { return symmetrizer_[static_cast<std::size_t>(i)]; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const std::vector<long long>& symmetrizer() const noexcept { return symmetrizer_; }

  /// External integer labels of the nodes, used only for I/O. Defaults to 1..rank.
  const std::vector<long long>& labels() const noexcept { return labels_; }
  long long label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }
  Index index_of_label(long long label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      throw Error(ErrorKind::BadIndex, "no node labelled " + std::to_string(label));
    }
    return static_cast<Index>(it - labels_.begin());
  }
  CartanData relabelled(std::vector<long long> labels) const;

  void check_index(Index i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= rank()) {
      throw Error(ErrorKind::BadIndex, "node index " + std::to_string(i) + " out of range");
    }
  }

  bool operator==(const CartanData& o) const { return matrix_ == o.matrix_; }

 private:
  friend CartanData validate_cartan(const Matrix& matrix);
  Matrix matrix_;
  std::vector<long long> symmetrizer_;
  std::vector<long long> labels_;
};

namespace detail {

struct Ratio {
  long long num = 1;
  long long den = 1;

  static Ratio make(long long n, long long d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n, d);
    return {n / g, d / g};
  }
  Ratio times(long long n, long long d) const { return make(num * n, den * d); }
  bool operator==(const Ratio&) const = default;
};

}  // namespace detail

/// Checks the GCM axioms and computes the minimal symmetrizer by propagating
/// ratios d_j / d_i = a_ij / a_ji along a spanning forest, then clearing
/// denominators per connected component.
inline CartanData validate_cartan(const Matrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorKind::NotSquare, "empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorKind::NotSquare, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 2) {
      throw Error(ErrorKind::BadDiagonal, "a_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0) {
        throw Error(ErrorKind::BadSign, "positive off-diagonal entry at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
      }
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0)) {
        throw Error(ErrorKind::BadSign, "asymmetric zero pattern at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
      }
    }
  }

  std::vector<std::optional<detail::Ratio>> ratio(n);
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    ratio[root] = detail::Ratio{1, 1};
    component[root] = components;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || matrix[i][j] == 0) continue;
        // d_i a_ij = d_j a_ji
        detail::Ratio expected = ratio[i]->times(matrix[i][j], matrix[j][i]);
        if (!ratio[j]) {
          ratio[j] = expected;
          component[j] = components;
          stack.push_back(j);
        } else if (!(*ratio[j] == expected)) {
          throw Error(ErrorKind::NotSymmetrizable,
                      "inconsistent symmetrizer ratio at node " + std::to_string(j + 1));
        }
      }
    }
    ++components;
  }

  std::vector<long long> sym(n);
  for (int c = 0; c < components; ++c) {
    long long den_lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == c) den_lcm = std::lcm(den_lcm, ratio[i]->den);
    }
    long long num_gcd = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == c) {
        sym[i] = ratio[i]->num * (den_lcm / ratio[i]->den);
        num_gcd = std::gcd(num_gcd, sym[i]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == c) sym[i] /= num_gcd;
    }
  }

  CartanData out;
  out.matrix_ = matrix;
  out.symmetrizer_ = std::move(sym);
  out.labels_.resize(n);
  std::iota(out.labels_.begin(), out.labels_.end(), 1LL);
  return out;
}

inline CartanData CartanData::relabelled(std::vector<long long> labels) const {
  if (labels.size() != rank()) throw Error(ErrorKind::LengthMismatch, "label count differs from rank");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::BadInput, "duplicate node labels");
  }
  CartanData out = *this;
  out.labels_ = std::move(labels);
  return out;
}

namespace detail {

inline Matrix type_a(std::size_t r) {
  Matrix m(r, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    m[i][i] = 2;
    if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

inline void link(Matrix& m, std::size_t i, std::size_t j, long long aij = -1, long long aji = -1) {
  m[i][j] = aij;
  m[j][i] = aji;
}

inline Matrix finite_matrix(char family, std::size_t r) {
  Matrix m = type_a(r);
  switch (family) {
    case 'A':
      if (r < 1) break;
      return m;
    case 'B':
      if (r < 2) break;
      m[r - 1][r - 2] = -2;
      return m;
    case 'C':
      if (r < 2) break;
      m[r - 2][r - 1] = -2;
      return m;
    case 'D':
      if (r < 4) break;
      m[r - 2][r - 1] = m[r - 1][r - 2] = 0;
      link(m, r - 3, r - 1);
      return m;
    case 'E':
      if (r < 6 || r > 8) break;
      // Bourbaki numbering: 1-3-4-5-..., 2 attached to 4.
      m = Matrix(r, std::vector<long long>(r, 0));
      for (std::size_t i = 0; i < r; ++i) m[i][i] = 2;
      link(m, 0, 2);
      link(m, 1, 3);
      for (std::size_t i = 2; i + 1 < r; ++i) link(m, i, i + 1);
      return m;
    case 'F':
      if (r != 4) break;
      m[2][1] = -2;
      return m;
    case 'G':
      if (r != 2) break;
      m[1][0] = -3;
      return m;
    default:
      throw Error(ErrorKind::UnknownType, std::string("unknown Cartan family '") + family + "'");
  }
  throw Error(ErrorKind::BadRank, std::string("rank ") + std::to_string(r) + " invalid for type " + family);
}

/// Untwisted affine X_l^(1): node 0 first, then the finite nodes 1..l.
inline Matrix affine_matrix(char family, std::size_t l) {
  const std::size_t r = l + 1;
  auto embed = [&](const Matrix& fin) {
    Matrix m(r, std::vector<long long>(r, 0));
    m[0][0] = 2;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) m[i + 1][j + 1] = fin[i][j];
    return m;
  };
  switch (family) {
    case 'A': {
      if (l < 1) break;
      if (l == 1) return {{2, -2}, {-2, 2}};
      Matrix m = embed(finite_matrix('A', l));
      link(m, 0, 1);
      link(m, 0, l);
      return m;
    }
    case 'B': {
      if (l < 3) break;
      Matrix m = embed(finite_matrix('B', l));
      link(m, 0, 2);
      return m;
    }
    case 'C': {
      if (l < 2) break;
      Matrix m = embed(finite_matrix('C', l));
      link(m, 0, 1, -1, -2);
      return m;
    }
    case 'D': {
      if (l < 4) break;
      Matrix m = embed(finite_matrix('D', l));
      link(m, 0, 2);
      return m;
    }
    case 'E': {
      if (l < 6 || l > 8) break;
      Matrix m = embed(finite_matrix('E', l));
      const std::size_t attach = l == 6 ? 2 : (l == 7 ? 1 : 8);
      link(m, 0, attach);
      return m;
    }
    case 'F': {
      if (l != 4) break;
      Matrix m = embed(finite_matrix('F', 4));
      link(m, 0, 1);
      return m;
    }
    case 'G': {
      if (l != 2) break;
      Matrix m = embed(finite_matrix('G', 2));
      link(m, 0, 1);
      return m;
    }
    default:
      throw Error(ErrorKind::UnknownType, std::string("unknown affine family '") + family + "'");
  }
  throw Error(ErrorKind::BadRank, std::string("rank ") + std::to_string(l) + " invalid for affine type " + family);
}

/// Twisted A_{2l}^(2) (number = 2l) and D_{l+1}^(2) (number = l+1), nodes 0..l.
inline Matrix twisted_matrix(char family, std::size_t number) {
  if (family == 'A') {
    if (number < 2 || number % 2 != 0) {
      throw Error(ErrorKind::BadRank, "A^(2) needs an even number >= 2");
    }
    const std::size_t l = number / 2;
    if (l == 1) return {{2, -4}, {-1, 2}};
    Matrix m = type_a(l + 1);
    link(m, 0, 1, -2, -1);
    link(m, l - 1, l, -2, -1);
    return m;
  }
  if (family == 'D') {
    if (number < 3) throw Error(ErrorKind::BadRank, "D^(2) needs l+1 >= 3");
    const std::size_t l = number - 1;
    Matrix m = type_a(l + 1);
    link(m, 0, 1, -2, -1);
    link(m, l - 1, l, -1, -2);
    return m;
  }
  throw Error(ErrorKind::UnknownType, std::string("no twisted family '") + family + "^2' in the registry");
}

}  // namespace detail

/// Registry of standard matrices. Accepted names: finite "A3", "B2", "C3",
/// "D4", "E6".."E8", "F4", "G2"; untwisted affine "A1~", "C3~", ... (also
/// "A1_affine"); twisted "A4^2" (A_{2l}^(2)) and "D5^2" (D_{l+1}^(2)).
/// Nodes are labelled 1..rank in registry order (affine node 0 comes first).
inline CartanData builtin_cartan(std::string_view name) {
  if (name.empty()) throw Error(ErrorKind::UnknownType, "empty type name");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (std::string_view("ABCDEFG").find(family) == std::string_view::npos) {
    throw Error(ErrorKind::UnknownType, "unknown type '" + std::string(name) + "'");
  }
  std::size_t pos = 1;
  std::size_t number = 0;
  std::size_t digits = 0;
  while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
    number = number * 10 + static_cast<std::size_t>(name[pos] - '0');
    ++pos;
    ++digits;
    if (digits > 4) throw Error(ErrorKind::BadRank, "rank too large");
  }
  if (digits == 0) throw Error(ErrorKind::BadRank, "missing rank in '" + std::string(name) + "'");
  const std::string_view suffix = name.substr(pos);
  Matrix m;
  if (suffix.empty()) {
    m = detail::finite_matrix(family, number);
  } else if (suffix == "~" || suffix == "_affine" || suffix == "^1") {
    m = detail::affine_matrix(family, number);
  } else if (suffix == "^2") {
    m = detail::twisted_matrix(family, number);
  } else {
    throw Error(ErrorKind::UnknownType, "unknown type suffix in '" + std::string(name) + "'");
  }
  return validate_cartan(m);
}

/// (alpha_j | alpha_i) = d_i a_ij, symmetric in (i, j).
inline long long pairing_roots(const CartanData& c, Index i, Index j) {
  c.check_index(i);
  c.check_index(j);
  return c.d(i) * c.a(i, j);
}

/// <Lambda - beta, h_i> = k_i - sum_j b_j a_ij.
inline long long pair_coroot(const CartanData& c, const Weight& lambda, const RootElement* beta, Index i) {
  c.check_index(i);
  long long v = lambda[i];
  if (beta != nullptr) {
    for (std::size_t j = 0; j < c.rank(); ++j) v -= (*beta)[static_cast<Index>(j)] * c.a(i, static_cast<Index>(j));
  }
  return v;
}

inline long long pair_coroot(const CartanData& c, const Weight& lambda, Index i) {
  return pair_coroot(c, lambda, nullptr, i);
}

inline long long pair_coroot(const CartanData& c, const Weight& lambda, const RootElement& beta, Index i) {
  return pair_coroot(c, lambda, &beta, i);
}

/// An exact value stored as twice itself.
struct HalfUnits {
  long long twice = 0;
  bool is_integer() const { return twice % 2 == 0; }
  auto operator<=>(const HalfUnits&) const = default;
};

/// (beta | beta).
inline long long root_norm(const CartanData& c, const RootElement& beta) {
  long long s = 0;
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = 0; j < c.rank(); ++j)
      s += beta[static_cast<Index>(i)] * beta[static_cast<Index>(j)] *
           c.d(static_cast<Index>(i)) * c.a(static_cast<Index>(i), static_cast<Index>(j));
  return s;
}

/// (Lambda | beta) = sum_i b_i d_i k_i.
inline long long weight_root_pairing(const CartanData& c, const Weight& lambda, const RootElement& beta) {
  long long s = 0;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    const auto idx = static_cast<Index>(i);
    s += beta[idx] * c.d(idx) * lambda[idx];
  }
  return s;
}

/// df(Lambda, beta) = (Lambda|beta) - (beta|beta)/2, returned in half-units.
inline HalfUnits defect(const CartanData& c, const Weight& lambda, const RootElement& beta) {
  return HalfUnits{2 * weight_root_pairing(c, lambda, beta) - root_norm(c, beta)};
}

inline RootElement beta_of_tuple(std::size_t rank, const IndexTuple& nu) {
  std::vector<long long> k(rank, 0);
  for (Index i : nu) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank) {
      throw Error(ErrorKind::BadIndex, "tuple entry " + std::to_string(i) + " out of range");
    }
    k[static_cast<std::size_t>(i)] += 1;
  }
  return RootElement(std::move(k));
}

inline RootElement beta_of_tuple(const CartanData& c, const IndexTuple& nu) { return beta_of_tuple(c.rank(), nu); }

inline void require_dominant(const CartanData& c, const Weight& lambda) {
  if (lambda.size() != c.rank()) {
    throw Error(ErrorKind::LengthMismatch, "weight has " + std::to_string(lambda.size()) +
                                               " coefficients, matrix has rank " + std::to_string(c.rank()));
  }
  if (!lambda.dominant()) throw Error(ErrorKind::NotDominant, "weight is not dominant");
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

/// All beta in Q^+ of height n over `rank` nodes, in lexicographically
/// decreasing coefficient order (n alpha_1 first).
inline std::vector<RootElement> roots_of_height(std::size_t rank, long long n) {
  std::vector<RootElement> out;
  std::vector<long long> k(rank, 0);
  auto rec = [&](auto&& self, std::size_t i, long long left) -> void {
    if (i + 1 == rank) {
      k[i] = left;
      out.emplace_back(k);
      return;
    }
    for (long long v = left; v >= 0; --v) {
      k[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (rank == 0) return out;
  rec(rec, 0, n);
  return out;
}

/// I^beta in lexicographic order.
inline std::vector<IndexTuple> tuples_of(const RootElement& beta) {
  std::vector<Index> base;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (long long m = 0; m < beta[static_cast<Index>(i)]; ++m) base.push_back(static_cast<Index>(i));
  std::vector<IndexTuple> out;
  do {
    out.emplace_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

/// Dominant weights with level in [min_level, max_level], ordered by level then
/// lexicographically decreasing.
inline std::vector<Weight> dominant_weights(std::size_t rank, long long min_level, long long max_level) {
  std::vector<Weight> out;
  for (long long lvl = min_level; lvl <= max_level; ++lvl) {
    for (const auto& r : roots_of_height(rank, lvl)) out.emplace_back(r.coeffs());
  }
  return out;
}

}  // namespace klr
