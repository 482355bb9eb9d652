#pragma once

// Index data for monomial bases of e(nu~) R^Lambda e(mu), where nu~ groups
// equal letters into blocks with pairwise distinct block letters.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/dims.hpp"
#include "klr/error.hpp"
#include "klr/perms.hpp"
#include "klr/qpoly.hpp"

namespace klr {

/// nu~ = (nu^1 repeated b_1 times, ..., nu^p repeated b_p times), letters pairwise distinct.
struct TildeData {
  IndexTuple tuple;
  BlockStructure blocks;
  std::vector<Index> letters;

  /// Validates a tuple already in tilde form. Throws NotTildeForm when a
  /// letter reappears in a later block.
  static TildeData from_tuple(const IndexTuple& nu) {
    TildeData t;
    t.tuple = nu;
    t.blocks = runs_of(nu);
    std::set<Index> seen;
    for (std::size_t i = 0; i < t.blocks.count(); ++i) {
      const Index x = nu[static_cast<std::size_t>(t.blocks.c(i))];
      if (!seen.insert(x).second) {
        throw Error(ErrorKind::NotTildeForm, "letter " + std::to_string(x) + " occurs in two blocks");
      }
      t.letters.push_back(x);
    }
    return t;
  }
};

/// Canonical nu~ for mu: letters in order of first occurrence (or in the given
/// order), each repeated by its multiplicity in mu.
inline TildeData tilde_of(const IndexTuple& mu, const std::optional<std::vector<Index>>& letter_order = std::nullopt) {
  std::map<Index, int> mult;
  std::vector<Index> order;
  for (Index x : mu) {
    if (mult[x]++ == 0) order.push_back(x);
  }
  if (letter_order) {
    std::vector<Index> a = *letter_order, b = order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw Error(ErrorKind::IncompatibleContent, "letter order does not list the letters of mu exactly once");
    order = *letter_order;
  }
  std::vector<Index> out;
  for (Index x : order) out.insert(out.end(), static_cast<std::size_t>(mult[x]), x);
  return TildeData::from_tuple(IndexTuple(std::move(out)));
}

/// N_i(nu~) = N(1, nu~, c_{i-1} + 1) for the 0-based block i.
inline long long tilde_n(const CartanData& c, const Weight& lambda, const TildeData& t, std::size_t i) {
  return n_value(c, lambda, Permutation::identity(t.tuple.size()), t.tuple, t.blocks.c(i) + 1);
}

inline void require_same_content(const IndexTuple& mu, const IndexTuple& nu) {
  std::vector<Index> a(mu.begin(), mu.end()), b(nu.begin(), nu.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorKind::IncompatibleContent, "mu and nu~ have different content");
}

/// N(mu, k) = N(d_mu, mu, k) + #{ j < k : mu_j = mu_k }.
inline long long n_weight(const CartanData& c, const Weight& lambda, const IndexTuple& mu, const TildeData& t, int k) {
  require_same_content(mu, t.tuple);
  const Permutation d = d_mu(mu, t.tuple);
  long long same = 0;
  for (int j = 1; j < k; ++j)
    if (mu.at1(static_cast<std::size_t>(j)) == mu.at1(static_cast<std::size_t>(k))) ++same;
  return n_value(c, lambda, d, mu, k) + same;
}

inline std::vector<long long> n_weights(const CartanData& c, const Weight& lambda, const IndexTuple& mu,
                                        const TildeData& t) {
  std::vector<long long> out;
  for (int k = 1; k <= static_cast<int>(mu.size()); ++k) out.push_back(n_weight(c, lambda, mu, t, k));
  return out;
}

/// Index set {(w, r)} with w in `permutations` and 0 <= r_k < bounds[k].
struct BasisIndexSet {
  std::vector<Permutation> permutations;
  std::vector<long long> bounds;
  bool empty = false;

  BigInt cardinality() const {
    if (empty) return 0;
    BigInt r = permutations.size();
    for (long long b : bounds) r *= b;
    return r;
  }

  /// Visits every (w, r) in lexicographic order; `fn` returns false to stop.
  void for_each(const std::function<bool(const Permutation&, const std::vector<long long>&)>& fn) const {
    if (empty) return;
    std::vector<long long> r(bounds.size(), 0);
    for (const auto& w : permutations) {
      std::fill(r.begin(), r.end(), 0);
      bool carry = false;
      while (!carry) {
        if (!fn(w, r)) return;
        carry = true;
        for (std::size_t k = r.size(); k > 0 && carry;) {
          --k;
          if (++r[k] < bounds[k]) {
            carry = false;
          } else {
            r[k] = 0;
          }
        }
      }
    }
  }
};

/// Index set for e(nu~) R^Lambda e(mu): w in S(mu, nu~) = S_b d_mu, exponent
/// bounds N(mu, k). Empty as soon as some bound is <= 0.
inline BasisIndexSet basis_index_set(const CartanData& c, const Weight& lambda, const IndexTuple& mu,
                                     const TildeData& t) {
  require_dominant(c, lambda);
  check_tuple(c, mu);
  BasisIndexSet out;
  out.bounds = n_weights(c, lambda, mu, t);
  out.empty = std::any_of(out.bounds.begin(), out.bounds.end(), [](long long b) { return b <= 0; });
  if (!out.empty) out.permutations = transport_list(mu, t.tuple);
  return out;
}

inline BasisIndexSet basis_index_set(const CartanData& c, const Weight& lambda, const IndexTuple& mu) {
  return basis_index_set(c, lambda, mu, tilde_of(mu));
}

/// e(nu~) R e(nu~): w in S_b and r_k <= N_i(nu~) - (k - c_{i-1}) for k in block i.
inline BasisIndexSet basis_tilde_tilde(const CartanData& c, const Weight& lambda, const TildeData& t) {
  require_dominant(c, lambda);
  check_tuple(c, t.tuple);
  BasisIndexSet out;
  for (std::size_t i = 0; i < t.blocks.count(); ++i) {
    const long long ni = tilde_n(c, lambda, t, i);
    for (int j = 1; j <= t.blocks.size_of(i); ++j) out.bounds.push_back(ni - j + 1);
  }
  out.empty = std::any_of(out.bounds.begin(), out.bounds.end(), [](long long b) { return b <= 0; });
  if (!out.empty) out.permutations = young_subgroup(t.blocks);
  return out;
}

/// prod over blocks of the nilHecke product at level N_i(nu~), size b_i, with
/// q replaced by q^{d_{nu^i}}; the inner index runs over positions within the block.
inline LaurentPoly graded_dim_tilde(const CartanData& c, const Weight& lambda, const TildeData& t) {
  require_dominant(c, lambda);
  check_tuple(c, t.tuple);
  LaurentPoly p = 1;
  for (std::size_t i = 0; i < t.blocks.count(); ++i) {
    const long long ni = tilde_n(c, lambda, t, i);
    const long long b = t.blocks.size_of(i);
    if (ni < b) return {};
    p *= nilhecke_graded_dim(ni, b, c.d(t.letters[i]));
  }
  return p;
}

/// Ungraded: prod_i b_i! prod_{j<b_i} (N_i(nu~) - j).
inline BigInt dim_tilde(const CartanData& c, const Weight& lambda, const TildeData& t) {
  BigInt r = 1;
  for (std::size_t i = 0; i < t.blocks.count(); ++i) {
    const long long ni = tilde_n(c, lambda, t, i);
    if (ni < t.blocks.size_of(i)) return 0;
    r *= nilhecke_dim(ni, t.blocks.size_of(i));
  }
  return r;
}

/// Checks how N(mu, k) changes under mu -> mu s_a when d_mu s_a is shorter than d_mu:
///   N(mu, a) = N(mu s_a, a+1) + a_{mu_a, mu_{a+1}}, N(mu, a+1) = N(mu s_a, a), other k unchanged.
inline bool n_weight_transform_check(const CartanData& c, const Weight& lambda, const IndexTuple& mu,
                                     const TildeData& t, int a) {
  const int n = static_cast<int>(mu.size());
  if (a < 1 || a >= n) throw Error(ErrorKind::OutOfRange, "need 1 <= a < n");
  require_same_content(mu, t.tuple);
  const Permutation d = d_mu(mu, t.tuple);
  if (!(d(a) > d(a + 1))) throw Error(ErrorKind::PreconditionFail, "d_mu s_a is longer than d_mu");
  std::vector<Index> swapped(mu.begin(), mu.end());
  std::swap(swapped[static_cast<std::size_t>(a - 1)], swapped[static_cast<std::size_t>(a)]);
  const IndexTuple mus(swapped);
  const auto before = n_weights(c, lambda, mu, t);
  const auto after = n_weights(c, lambda, mus, t);
  for (int k = 1; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    long long expected;
    if (k == a) {
      expected = after[static_cast<std::size_t>(a)] + c.a(mu.at1(static_cast<std::size_t>(a)), mu.at1(static_cast<std::size_t>(a + 1)));
    } else if (k == a + 1) {
      expected = after[static_cast<std::size_t>(a - 1)];
    } else {
      expected = after[i];
    }
    if (before[i] != expected) return false;
  }
  return true;
}

struct Counts121 {
  BigInt psi_part;
  BigInt poly_part;
  BigInt total;
};

/// Basis counts for e(1,2,1) R^Lambda e(1,2,1) with l_i = <Lambda, h_i>:
/// l1 * l2 * l1 elements through psi_1 psi_2 psi_1 and l1 (l2 - a21)(l1 - a12 - 2) without.
inline Counts121 basis_121_counts(long long l1, long long l2, long long a12, long long a21) {
  if (a12 == 0) throw Error(ErrorKind::ZeroA12, "a_12 = 0 gives no basis of this shape");
  if (a12 > 0 || a21 > 0 || a21 == 0) throw Error(ErrorKind::PreconditionFail, "need a_12, a_21 <= -1");
  if (l1 < 0 || l2 < 0) throw Error(ErrorKind::PreconditionFail, "need l1, l2 >= 0");
  Counts121 r;
  r.psi_part = BigInt(l1) * l2 * l1;
  r.poly_part = BigInt(l1) * (l2 - a21) * (l1 - a12 - 2);
  r.total = r.psi_part + r.poly_part;
  return r;
}

}  // namespace klr
