#pragma once

// Level reduction: dimensions at Lambda = Lambda^1 + ... + Lambda^l as
// shuffle-indexed sums of products of dimensions at the parts.

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/dims.hpp"
#include "klr/perms.hpp"
#include "klr/qpoly.hpp"

namespace klr {

struct LevelSplit {
  std::vector<Weight> parts;

  Weight sum(std::size_t rank) const {
    Weight s = Weight::zero(rank);
    for (const auto& p : parts) s = s + p;
    return s;
  }
  void validate(const CartanData& c, const Weight& target) const {
    if (parts.empty()) throw Error(ErrorKind::BadInput, "a split needs at least one part");
    for (const auto& p : parts) require_dominant(c, p);
    if (!(sum(c.rank()) == target)) throw Error(ErrorKind::BadInput, "split parts do not sum to the weight");
  }
};

/// All ordered l-part splits of Lambda into dominant weights (zero parts allowed).
inline std::vector<LevelSplit> level_splits(const Weight& lambda, std::size_t l) {
  std::vector<LevelSplit> out;
  if (l == 0) return out;
  const std::size_t r = lambda.size();
  std::vector<std::vector<long long>> parts(l, std::vector<long long>(r, 0));
  // Distribute each coefficient k_i over the l parts, node by node.
  auto rec = [&](auto&& self, std::size_t node, std::size_t part, long long left) -> void {
    if (node == r) {
      LevelSplit s;
      for (const auto& p : parts) s.parts.emplace_back(p);
      out.push_back(std::move(s));
      return;
    }
    if (part + 1 == l) {
      parts[part][node] = left;
      const long long next = node + 1 < r ? lambda[static_cast<Index>(node + 1)] : 0;
      self(self, node + 1, 0, next);
      return;
    }
    for (long long v = left; v >= 0; --v) {
      parts[part][node] = v;
      self(self, node, part + 1, left - v);
    }
  };
  rec(rec, 0, 0, r > 0 ? lambda[0] : 0);
  return out;
}

/// Cache of dim^{Lambda}(nu, mu), shared across reduction sums. Not thread-safe.
class PairDimMemo {
 public:
  explicit PairDimMemo(const CartanData& c) : c_(c) {}
  const BigInt& get(const Weight& lambda, const IndexTuple& nu, const IndexTuple& mu) {
    auto key = std::make_tuple(lambda, nu, mu);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), dim(c_, lambda, nu, mu)).first;
    return it->second;
  }

 private:
  const CartanData& c_;
  std::map<std::tuple<Weight, IndexTuple, IndexTuple>, BigInt> memo_;
};

/// sum over D^l(nu, mu) of prod_i dim^{Lambda^i}(nu_{s^i}, mu_{t^i}).
inline BigInt reduce_pair_dim_multi(const CartanData& c, const IndexTuple& nu, const IndexTuple& mu,
                                    const LevelSplit& split, PairDimMemo& memo) {
  check_tuple(c, nu);
  check_tuple(c, mu);
  if (nu.size() != mu.size()) throw Error(ErrorKind::LengthMismatch, "nu and mu differ in length");
  for (const auto& p : split.parts) require_dominant(c, p);
  BigInt total = 0;
  for_each_matched_shuffle(nu, mu, split.parts.size(), [&](const ShuffleSplit& s, const ShuffleSplit& t) {
    BigInt term = 1;
    for (std::size_t i = 0; i < split.parts.size() && term != 0; ++i) {
      term *= memo.get(split.parts[i], nu.sub(s.parts[i]), mu.sub(t.parts[i]));
    }
    total += term;
    return true;
  });
  return total;
}

inline BigInt reduce_pair_dim_multi(const CartanData& c, const IndexTuple& nu, const IndexTuple& mu,
                                    const LevelSplit& split) {
  PairDimMemo memo(c);
  return reduce_pair_dim_multi(c, nu, mu, split, memo);
}

inline BigInt reduce_pair_dim(const CartanData& c, const IndexTuple& nu, const IndexTuple& mu, const LevelSplit& split) {
  if (split.parts.size() != 2) throw Error(ErrorKind::BadInput, "expected a 2-part split");
  return reduce_pair_dim_multi(c, nu, mu, split);
}

/// All ordered decompositions beta = beta_1 + ... + beta_l in Q^+.
inline std::vector<std::vector<RootElement>> root_decompositions(const RootElement& beta, std::size_t l) {
  std::vector<std::vector<RootElement>> out;
  if (l == 0) return out;
  const std::size_t r = beta.size();
  std::vector<std::vector<long long>> parts(l, std::vector<long long>(r, 0));
  auto rec = [&](auto&& self, std::size_t node, std::size_t part, long long left) -> void {
    if (node == r) {
      std::vector<RootElement> d;
      for (const auto& p : parts) d.emplace_back(p);
      out.push_back(std::move(d));
      return;
    }
    if (part + 1 == l) {
      parts[part][node] = left;
      self(self, node + 1, 0, node + 1 < r ? beta[static_cast<Index>(node + 1)] : 0);
      return;
    }
    for (long long v = left; v >= 0; --v) {
      parts[part][node] = v;
      self(self, node, part + 1, left - v);
    }
  };
  rec(rec, 0, 0, r > 0 ? beta[0] : 0);
  return out;
}

inline BigInt multinomial(const std::vector<long long>& ks) {
  BigInt r = 1;
  long long n = 0;
  for (long long k : ks) {
    for (long long j = 1; j <= k; ++j) {
      ++n;
      r *= n;
      r /= j;
    }
  }
  return r;
}

/// sum over beta = sum beta_i of (|beta|! / prod |beta_i|!)^2 prod_i dim R^{Lambda^i}(beta_i).
inline BigInt reduce_block_dim(const CartanData& c, const RootElement& beta, const LevelSplit& split) {
  check_root(c, beta);
  for (const auto& p : split.parts) require_dominant(c, p);
  std::map<std::pair<std::size_t, RootElement>, BigInt> memo;
  BigInt total = 0;
  for (const auto& dec : root_decompositions(beta, split.parts.size())) {
    BigInt term = 1;
    std::vector<long long> sizes;
    for (std::size_t i = 0; i < dec.size() && term != 0; ++i) {
      sizes.push_back(dec[i].height());
      auto key = std::make_pair(i, dec[i]);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, block_dim(c, split.parts[i], dec[i])).first;
      term *= it->second;
    }
    if (term == 0) continue;
    const BigInt m = multinomial(sizes);
    total += m * m * term;
  }
  return total;
}

/// The same weighted sum with graded block dimensions. This is not an identity
/// for graded dimensions; it exists so the failure can be exhibited.
inline LaurentPoly reduce_block_graded_sum(const CartanData& c, const RootElement& beta, const LevelSplit& split) {
  check_root(c, beta);
  for (const auto& p : split.parts) require_dominant(c, p);
  LaurentPoly total;
  for (const auto& dec : root_decompositions(beta, split.parts.size())) {
    LaurentPoly term = 1;
    std::vector<long long> sizes;
    for (std::size_t i = 0; i < dec.size(); ++i) {
      sizes.push_back(dec[i].height());
      term *= block_graded_dim(c, split.parts[i], dec[i]);
    }
    const BigInt m = multinomial(sizes);
    total += term.scale(m * m);
  }
  return total;
}

}  // namespace klr
