#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's enumerators: permutations come from std::next_permutation over all
// of S_n and every quantity is recomputed from its definition.

#include <algorithm>
#include <numeric>
#include <ostream>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/perms.hpp"
#include "klr/qpoly.hpp"

namespace klr {

// Readable gtest failure messages.
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Permutation& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const IndexTuple& t, std::ostream* os) {
  *os << "(";
  for (std::size_t k = 0; k < t.size(); ++k) *os << (k ? "," : "") << t[k];
  *os << ")";
}

}  // namespace klr

namespace oracle {

using klr::BigInt;
using klr::CartanData;
using klr::Index;
using klr::IndexTuple;
using klr::LaurentPoly;
using klr::Permutation;
using klr::Weight;

inline std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// (w nu)_k = nu_{w^{-1}(k)}, computed through an explicit inverse.
inline IndexTuple act(const Permutation& w, const IndexTuple& nu) {
  std::vector<int> inv(w.size());
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) inv[static_cast<std::size_t>(w(i) - 1)] = i;
  std::vector<Index> out(nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) out[k] = nu[static_cast<std::size_t>(inv[k] - 1)];
  return IndexTuple(out);
}

/// S(nu, nu') by filtering all of S_n.
inline std::vector<Permutation> transport(const IndexTuple& nu, const IndexTuple& nup) {
  std::vector<Permutation> out;
  for (const auto& w : all_perms(nu.size()))
    if (act(w, nu) == nup) out.push_back(w);
  return out;
}

inline long long inversions(const Permutation& w) {
  long long s = 0;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i)
    for (int j = i + 1; j <= static_cast<int>(w.size()); ++j)
      if (w(i) > w(j)) ++s;
  return s;
}

/// <Lambda - sum alpha_{nu_j}, h_{nu_t}> with the coroot pairing written out.
inline long long N(const CartanData& c, const Weight& lambda, const Permutation& w, const IndexTuple& nu, int t) {
  const Index x = nu[static_cast<std::size_t>(t - 1)];
  long long v = lambda[x];
  for (int j = 1; j < t; ++j)
    if (w(j) < w(t)) v -= c.matrix()[static_cast<std::size_t>(x)][static_cast<std::size_t>(nu[static_cast<std::size_t>(j - 1)])];
  return v;
}

inline LaurentPoly qint(long long m, long long d) {
  // (q^{dm} - q^{-dm}) / (q^d - q^{-d}) by long division.
  LaurentPoly num = LaurentPoly::monomial(d * m) - LaurentPoly::monomial(-d * m);
  LaurentPoly den = LaurentPoly::monomial(d) - LaurentPoly::monomial(-d);
  return num.divide_exact(den);
}

inline LaurentPoly graded_dim(const CartanData& c, const Weight& lambda, const IndexTuple& nu, const IndexTuple& nup) {
  const std::size_t n = nu.size();
  const Permutation id = Permutation::identity(n);
  LaurentPoly total;
  for (const auto& w : transport(nu, nup)) {
    LaurentPoly term = 1;
    for (int t = 1; t <= static_cast<int>(n); ++t) {
      const long long d = c.symmetrizer()[static_cast<std::size_t>(nu[static_cast<std::size_t>(t - 1)])];
      term *= qint(N(c, lambda, w, nu, t), d) * LaurentPoly::monomial(d * (N(c, lambda, id, nu, t) - 1));
    }
    total += term;
  }
  return total;
}

inline BigInt dim(const CartanData& c, const Weight& lambda, const IndexTuple& nu, const IndexTuple& nup) {
  BigInt total = 0;
  for (const auto& w : transport(nu, nup)) {
    BigInt term = 1;
    for (int t = 1; t <= static_cast<int>(nu.size()); ++t) term *= N(c, lambda, w, nu, t);
    total += term;
  }
  return total;
}

/// All tuples over {0..rank-1} of length n.
inline std::vector<IndexTuple> words(std::size_t rank, std::size_t n) {
  std::vector<IndexTuple> out;
  std::vector<Index> w(n, 0);
  for (;;) {
    out.emplace_back(w);
    std::size_t k = n;
    while (k > 0 && w[k - 1] == static_cast<Index>(rank) - 1) w[--k] = 0;
    if (k == 0) break;
    ++w[k - 1];
  }
  return out;
}

inline bool same_content(IndexTuple a, IndexTuple b) {
  std::vector<Index> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace oracle
