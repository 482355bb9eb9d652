#pragma once

// Dimension engine: N-values, graded and ungraded pair dimensions, the
// divided-power variant, nilHecke closed forms, psi-degrees, and an
// independent recursive oracle for the graded dimension.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/error.hpp"
#include "klr/perms.hpp"
#include "klr/qpoly.hpp"

namespace klr {

struct EvalOptions {
  unsigned threads = 1;
  Budget budget{};
};

/// The inputs of a pair dimension: Cartan datum, dominant Lambda, nu and nu'.
struct DimQuery {
  const CartanData& cartan;
  Weight lambda;
  IndexTuple nu;
  IndexTuple nuprime;
};

inline void check_tuple(const CartanData& c, const IndexTuple& nu) {
  for (Index i : nu) c.check_index(i);
}

inline void check_query(const CartanData& c, const Weight& lambda, const IndexTuple& nu, const IndexTuple& nuprime) {
  require_dominant(c, lambda);
  check_tuple(c, nu);
  check_tuple(c, nuprime);
  if (nu.size() != nuprime.size()) throw Error(ErrorKind::LengthMismatch, "nu and nu' differ in length");
}

/// N(w, nu, t) = <Lambda - sum_{j in J_w^{<t}} alpha_{nu_j}, h_{nu_t}>.
inline long long n_value(const CartanData& c, const Weight& lambda, const Permutation& w, const IndexTuple& nu, int t) {
  if (w.size() != nu.size()) throw Error(ErrorKind::LengthMismatch, "w and nu differ in size");
  if (t < 1 || static_cast<std::size_t>(t) > nu.size()) throw Error(ErrorKind::OutOfRange, "position out of range");
  const Index x = nu.at1(static_cast<std::size_t>(t));
  long long v = lambda[x];
  for (int j = 1; j < t; ++j)
    if (w(j) < w(t)) v -= c.a(x, nu.at1(static_cast<std::size_t>(j)));
  return v;
}

/// The variant that sums over nu' instead of nu:
/// <Lambda - sum_{j < w(t), j in w({1..t-1})} alpha_{nu'_j}, h_{nu_t}>.
inline long long n_check(const CartanData& c, const Weight& lambda, const Permutation& w, const IndexTuple& nu,
                         const IndexTuple& nuprime, int t) {
  if (w.size() != nu.size() || nu.size() != nuprime.size()) throw Error(ErrorKind::LengthMismatch, "size mismatch");
  if (t < 1 || static_cast<std::size_t>(t) > nu.size()) throw Error(ErrorKind::OutOfRange, "position out of range");
  const Index x = nu.at1(static_cast<std::size_t>(t));
  long long v = lambda[x];
  for (int r = 1; r < t; ++r) {
    const int j = w(r);
    if (j < w(t)) v -= c.a(x, nuprime.at1(static_cast<std::size_t>(j)));
  }
  return v;
}

/// deg psi_w e(nu) = -sum_{i<t, w(i)>w(t)} (alpha_{nu_i} | alpha_{nu_t}).
inline long long psi_degree(const CartanData& c, const Permutation& w, const IndexTuple& nu) {
  if (w.size() != nu.size()) throw Error(ErrorKind::LengthMismatch, "w and nu differ in size");
  long long deg = 0;
  const int n = static_cast<int>(nu.size());
  for (int t = 1; t <= n; ++t)
    for (int i = 1; i < t; ++i)
      if (w(i) > w(t)) deg -= pairing_roots(c, nu.at1(static_cast<std::size_t>(i)), nu.at1(static_cast<std::size_t>(t)));
  return deg;
}

namespace detail {

/// Depth-first walk over S(nu, nu') (optionally only elements increasing on
/// `increasing_on`), computing N(w, nu, t) incrementally. `leaf` receives the
/// full N-vector. Branches whose partial N-vector contains a zero are pruned
/// when `prune_zero` is set, since they contribute nothing to any product.
/// The first-level choices are distributed over `threads` workers, each with
/// its own accumulator; `combine` merges them in a fixed order.
template <class Acc>
Acc walk_n_vectors(const CartanData& c, const Weight& lambda, const IndexTuple& nu, const IndexTuple& nuprime,
                   const BlockStructure* increasing_on, bool prune_zero, const EvalOptions& opt,
                   const std::function<void(Acc&, const std::vector<long long>&)>& leaf,
                   const std::function<void(Acc&, const Acc&)>& combine, const Acc& zero) {
  const std::size_t n = nu.size();
  {
    std::vector<Index> a(nu.begin(), nu.end()), b(nuprime.begin(), nuprime.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return zero;
  }
  if (n == 0) {
    Acc acc = zero;
    leaf(acc, {});
    return acc;
  }
  std::vector<std::vector<int>> cand(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (nuprime[k] == nu[j]) cand[j].push_back(static_cast<int>(k + 1));
  std::vector<bool> same_block(n, false);
  if (increasing_on != nullptr) {
    for (std::size_t j = 1; j < n; ++j)
      same_block[j] = increasing_on->block_of(static_cast<int>(j)) == increasing_on->block_of(static_cast<int>(j + 1));
  }

  auto run_branch = [&](int first_value, Acc& acc) {
    std::vector<int> w(n, 0);
    std::vector<bool> used(n + 1, false);
    std::vector<long long> nv(n, 0);
    std::uint64_t visits = 0;
    auto rec = [&](auto&& self, std::size_t t) -> void {
      if ((++visits & 0xFFF) == 0) opt.budget.check("enumeration interrupted inside S(nu,nu')");
      if (t == n) {
        leaf(acc, nv);
        return;
      }
      const Index x = nu[t];
      for (int v : cand[t]) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (same_block[t] && v < w[t - 1]) continue;
        long long val = lambda[x];
        for (std::size_t j = 0; j < t; ++j)
          if (w[j] < v) val -= c.a(x, nu[j]);
        if (prune_zero && val == 0) continue;
        w[t] = v;
        nv[t] = val;
        used[static_cast<std::size_t>(v)] = true;
        self(self, t + 1);
        used[static_cast<std::size_t>(v)] = false;
      }
    };
    const long long val0 = lambda[nu[0]];
    if (prune_zero && val0 == 0) return;
    w[0] = first_value;
    nv[0] = val0;
    used[static_cast<std::size_t>(first_value)] = true;
    rec(rec, 1);
  };

  const auto& firsts = cand[0];
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(firsts.size())));
  std::vector<Acc> partial(firsts.size(), zero);
  if (workers <= 1) {
    for (std::size_t b = 0; b < firsts.size(); ++b) run_branch(firsts[b], partial[b]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned id = 0; id < workers; ++id) {
      pool.emplace_back([&, id] {
        try {
          for (std::size_t b = id; b < firsts.size(); b += workers) run_branch(firsts[b], partial[b]);
        } catch (...) {
          errors[id] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Acc total = zero;
  for (const auto& p : partial) combine(total, p);
  return total;
}

}  // namespace detail

/// q-shift prod_t q_{nu_t}^{N(1, nu, t) - 1}, as an exponent of q.
inline long long identity_shift(const CartanData& c, const Weight& lambda, const IndexTuple& nu) {
  long long e = 0;
  const Permutation id = Permutation::identity(nu.size());
  for (int t = 1; t <= static_cast<int>(nu.size()); ++t) {
    e += c.d(nu.at1(static_cast<std::size_t>(t))) * (n_value(c, lambda, id, nu, t) - 1);
  }
  return e;
}

/// dim_q e(nu) R^Lambda e(nu') = sum_w prod_t [N(w,nu,t)]_{nu_t} q_{nu_t}^{N(1,nu,t)-1}.
inline LaurentPoly graded_dim(const CartanData& c, const Weight& lambda, const IndexTuple& nu,
                              const IndexTuple& nuprime, const EvalOptions& opt = {}) {
  check_query(c, lambda, nu, nuprime);
  std::vector<long long> d(nu.size());
  for (std::size_t t = 0; t < nu.size(); ++t) d[t] = c.d(nu[t]);
  std::function<void(LaurentPoly&, const std::vector<long long>&)> leaf = [&](LaurentPoly& acc,
                                                                              const std::vector<long long>& nv) {
    LaurentPoly term = 1;
    for (std::size_t t = 0; t < nv.size(); ++t) term *= quantum_int(nv[t], d[t]);
    acc += term;
  };
  std::function<void(LaurentPoly&, const LaurentPoly&)> combine = [](LaurentPoly& a, const LaurentPoly& b) { a += b; };
  LaurentPoly sum = detail::walk_n_vectors<LaurentPoly>(c, lambda, nu, nuprime, nullptr, true, opt, leaf, combine, {});
  return sum.shift(identity_shift(c, lambda, nu));
}

inline LaurentPoly graded_dim(const DimQuery& q, const EvalOptions& opt = {}) {
  return graded_dim(q.cartan, q.lambda, q.nu, q.nuprime, opt);
}

/// dim e(nu) R^Lambda e(nu') = sum_w prod_t N(w,nu,t), in integer arithmetic.
inline BigInt dim(const CartanData& c, const Weight& lambda, const IndexTuple& nu, const IndexTuple& nuprime,
                  const EvalOptions& opt = {}) {
  check_query(c, lambda, nu, nuprime);
  std::function<void(BigInt&, const std::vector<long long>&)> leaf = [](BigInt& acc, const std::vector<long long>& nv) {
    BigInt term = 1;
    for (long long v : nv) term *= v;
    acc += term;
  };
  std::function<void(BigInt&, const BigInt&)> combine = [](BigInt& a, const BigInt& b) { a += b; };
  return detail::walk_n_vectors<BigInt>(c, lambda, nu, nuprime, nullptr, true, opt, leaf, combine, BigInt(0));
}

inline BigInt dim(const DimQuery& q, const EvalOptions& opt = {}) {
  return dim(q.cartan, q.lambda, q.nu, q.nuprime, opt);
}

/// (prod b_i!) * sum_{d in D(nu)} prod_t N~(d, nu, t), where b are the maximal
/// runs of nu and N~(d,nu,k) = N(d,nu,k) + k - c_{i-1} - 1 for k in run i.
inline BigInt dim_divided(const CartanData& c, const Weight& lambda, const IndexTuple& nu, const EvalOptions& opt = {}) {
  check_query(c, lambda, nu, nu);
  const BlockStructure blocks = runs_of(nu);
  std::vector<long long> offset(nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) {
    const int pos = static_cast<int>(k + 1);
    offset[k] = pos - blocks.c(blocks.block_of(pos)) - 1;
  }
  std::function<void(BigInt&, const std::vector<long long>&)> leaf = [&](BigInt& acc, const std::vector<long long>& nv) {
    BigInt term = 1;
    for (std::size_t k = 0; k < nv.size(); ++k) term *= nv[k] + offset[k];
    acc += term;
  };
  std::function<void(BigInt&, const BigInt&)> combine = [](BigInt& a, const BigInt& b) { a += b; };
  BigInt s = detail::walk_n_vectors<BigInt>(c, lambda, nu, nu, &blocks, false, opt, leaf, combine, BigInt(0));
  return s * blocks.young_order();
}

/// Recursive evaluation that peels the last letter of nu and deletes a matching
/// letter of nu':
///   dim_q(nu, nu') = sum_{k : nu'_k = nu_n} q_x^{1 + <Lambda - beta, h_x>}
///                    [<Lambda - sum_{i<k} alpha_{nu'_i}, h_x>]_x dim_q(nu_{<n}, nu' minus k)
/// with x = nu_n and beta the content of nu. Memoized on the surviving subset of nu'.
inline LaurentPoly graded_dim_oracle(const CartanData& c, const Weight& lambda, const IndexTuple& nu,
                                     const IndexTuple& nuprime) {
  check_query(c, lambda, nu, nuprime);
  const std::size_t n = nu.size();
  if (n > 63) throw Error(ErrorKind::OutOfRange, "oracle limited to n <= 63");
  // <Lambda - beta_m, h_x> for the prefix of length m, x = nu_m.
  std::vector<long long> top(n + 1, 0);
  {
    std::vector<long long> content(c.rank(), 0);
    for (std::size_t m = 1; m <= n; ++m) {
      const Index x = nu[m - 1];
      content[static_cast<std::size_t>(x)] += 1;
      long long v = lambda[x];
      for (std::size_t j = 0; j < c.rank(); ++j) v -= content[j] * c.a(x, static_cast<Index>(j));
      top[m] = v;
    }
  }
  std::unordered_map<std::uint64_t, LaurentPoly> memo;
  auto rec = [&](auto&& self, std::uint64_t subset, std::size_t m) -> LaurentPoly {
    if (m == 0) return 1;
    if (auto it = memo.find(subset); it != memo.end()) return it->second;
    const Index x = nu[m - 1];
    const long long dx = c.d(x);
    LaurentPoly total;
    long long pair = lambda[x];
    for (std::size_t k = 0; k < n; ++k) {
      if (!(subset >> k & 1U)) continue;
      if (nuprime[k] == x) {
        const LaurentPoly factor = quantum_int(pair, dx);
        if (!factor.is_zero()) {
          LaurentPoly inner = self(self, subset & ~(std::uint64_t{1} << k), m - 1);
          if (!inner.is_zero()) total += (factor * inner).shift(dx * (1 + top[m]));
        }
      }
      pair -= c.a(x, nuprime[k]);
    }
    memo.emplace(subset, total);
    return total;
  };
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(rec, full, n);
}

inline LaurentPoly graded_dim_oracle(const DimQuery& q) { return graded_dim_oracle(q.cartan, q.lambda, q.nu, q.nuprime); }

/// prod_{k=1}^n (1 + q^{-2d} + ... + q^{-2d(k-1)}) * prod_{t=1}^n (1 + q^{2d} + ... + q^{2d(l-t)});
/// zero when n > l.
inline LaurentPoly nilhecke_graded_dim(long long level, long long n, long long d) {
  if (level < 0 || n < 0 || d <= 0) throw Error(ErrorKind::OutOfRange, "need l >= 0, n >= 0, d > 0");
  if (n > level) return {};
  LaurentPoly p = 1;
  for (long long k = 1; k <= n; ++k) p *= geometric_sum(k, -2 * d);
  for (long long t = 1; t <= n; ++t) p *= geometric_sum(level - t + 1, 2 * d);
  return p;
}

/// n! * prod_{j<n} (l - j).
inline BigInt nilhecke_dim(long long level, long long n) {
  if (level < 0 || n < 0) throw Error(ErrorKind::OutOfRange, "need l >= 0, n >= 0");
  BigInt r = 1;
  for (long long j = 0; j < n; ++j) r *= BigInt(j + 1) * BigInt(level - j);
  return r;
}

// ---------------------------------------------------------------------------
// Block and algebra sums.

inline void check_root(const CartanData& c, const RootElement& beta) {
  if (beta.size() != c.rank()) {
    throw Error(ErrorKind::LengthMismatch, "beta has " + std::to_string(beta.size()) + " coefficients, rank is " +
                                               std::to_string(c.rank()));
  }
}

inline LaurentPoly block_graded_dim(const CartanData& c, const Weight& lambda, const RootElement& beta,
                                    const EvalOptions& opt = {}) {
  require_dominant(c, lambda);
  check_root(c, beta);
  const auto tuples = tuples_of(beta);
  LaurentPoly total;
  for (const auto& nu : tuples)
    for (const auto& nup : tuples) total += graded_dim(c, lambda, nu, nup, opt);
  return total;
}

inline BigInt block_dim(const CartanData& c, const Weight& lambda, const RootElement& beta, const EvalOptions& opt = {}) {
  require_dominant(c, lambda);
  check_root(c, beta);
  const auto tuples = tuples_of(beta);
  BigInt total = 0;
  for (const auto& nu : tuples)
    for (const auto& nup : tuples) total += dim(c, lambda, nu, nup, opt);
  return total;
}

inline LaurentPoly algebra_graded_dim(const CartanData& c, const Weight& lambda, long long n,
                                      const EvalOptions& opt = {}) {
  LaurentPoly total;
  for (const auto& beta : roots_of_height(c.rank(), n)) total += block_graded_dim(c, lambda, beta, opt);
  return total;
}

inline BigInt algebra_dim(const CartanData& c, const Weight& lambda, long long n, const EvalOptions& opt = {}) {
  BigInt total = 0;
  for (const auto& beta : roots_of_height(c.rank(), n)) total += block_dim(c, lambda, beta, opt);
  return total;
}

}  // namespace klr
