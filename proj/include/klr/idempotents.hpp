#pragma once

// Deciding whether e(nu) vanishes in R^Lambda(beta).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klr/basis.hpp"
#include "klr/cartan.hpp"
#include "klr/dims.hpp"
#include "klr/perms.hpp"

namespace klr {

enum class NonzeroMethod { Direct, Divided, Tilde, Shuffle };

constexpr std::string_view to_string(NonzeroMethod m) {
  switch (m) {
    case NonzeroMethod::Direct: return "direct";
    case NonzeroMethod::Divided: return "divided";
    case NonzeroMethod::Tilde: return "tilde";
    case NonzeroMethod::Shuffle: return "shuffle";
  }
  return "unknown";
}

/// nu = shuffle of pieces[i] along split.parts[i], with pieces[i] nonzero at level Lambda_{fundamentals[i]}.
struct ShuffleWitness {
  std::vector<Index> fundamentals;
  ShuffleSplit split;
  std::vector<IndexTuple> pieces;
};

struct NonzeroVerdict {
  bool verdict = false;
  NonzeroMethod method = NonzeroMethod::Direct;
  std::optional<BigInt> value;                                 // direct, divided
  std::vector<std::pair<long long, long long>> block_bounds;   // tilde: (N_i(nu~), b_i)
  std::optional<ShuffleWitness> shuffle;                       // shuffle, when true
};

inline NonzeroVerdict nonzero_direct(const CartanData& c, const Weight& lambda, const IndexTuple& nu,
                                     const EvalOptions& opt = {}) {
  NonzeroVerdict v;
  v.method = NonzeroMethod::Direct;
  v.value = dim(c, lambda, nu, nu, opt);
  v.verdict = *v.value != 0;
  return v;
}

inline NonzeroVerdict nonzero_divided(const CartanData& c, const Weight& lambda, const IndexTuple& nu,
                                      const EvalOptions& opt = {}) {
  NonzeroVerdict v;
  v.method = NonzeroMethod::Divided;
  v.value = dim_divided(c, lambda, nu, opt);
  v.verdict = *v.value != 0;
  return v;
}

/// For nu~ in tilde form: nonzero iff N_i(nu~) >= b_i for every block.
inline NonzeroVerdict nonzero_tilde(const CartanData& c, const Weight& lambda, const IndexTuple& nu_tilde) {
  require_dominant(c, lambda);
  check_tuple(c, nu_tilde);
  const TildeData t = TildeData::from_tuple(nu_tilde);
  NonzeroVerdict v;
  v.method = NonzeroMethod::Tilde;
  v.verdict = true;
  for (std::size_t i = 0; i < t.blocks.count(); ++i) {
    const long long ni = tilde_n(c, lambda, t, i);
    v.block_bounds.emplace_back(ni, t.blocks.size_of(i));
    if (ni < t.blocks.size_of(i)) v.verdict = false;
  }
  return v;
}

/// Lambda = sum_i k_i Lambda_i as the multiset (0,..,0,1,..,1,...) of node indices.
inline std::vector<Index> fundamentals_of(const Weight& lambda) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (long long m = 0; m < lambda[static_cast<Index>(i)]; ++m) out.push_back(static_cast<Index>(i));
  return out;
}

/// Searches for nu in Shuff(nu^1, ..., nu^l) with every e(nu^i) nonzero at level
/// Lambda_{t_i}. A nonempty piece must start with its own node t_i, which prunes
/// the search early.
inline NonzeroVerdict nonzero_by_shuffle(const CartanData& c, const std::vector<Index>& fundamentals,
                                         const IndexTuple& nu) {
  for (Index t : fundamentals) c.check_index(t);
  check_tuple(c, nu);
  NonzeroVerdict v;
  v.method = NonzeroMethod::Shuffle;
  const std::size_t l = fundamentals.size();
  const std::size_t n = nu.size();
  if (l == 0) {
    v.verdict = n == 0;
    if (v.verdict) v.shuffle = ShuffleWitness{{}, ShuffleSplit{}, {}};
    return v;
  }

  std::map<std::pair<Index, IndexTuple>, bool> memo;
  auto level_one_nonzero = [&](Index t, const IndexTuple& piece) {
    auto key = std::make_pair(t, piece);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const bool ok = dim(c, Weight::fundamental(c.rank(), t), piece, piece) != 0;
    memo.emplace(std::move(key), ok);
    return ok;
  };

  std::vector<std::vector<Index>> pieces(l);
  std::vector<std::vector<int>> positions(l);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == n) {
      for (std::size_t i = 0; i < l; ++i)
        if (!level_one_nonzero(fundamentals[i], IndexTuple(pieces[i]))) return;
      found = true;
      ShuffleWitness w;
      w.fundamentals = fundamentals;
      w.split.parts = positions;
      for (const auto& p : pieces) w.pieces.emplace_back(p);
      v.shuffle = std::move(w);
      return;
    }
    for (std::size_t i = 0; i < l && !found; ++i) {
      if (pieces[i].empty() && nu[k] != fundamentals[i]) continue;
      pieces[i].push_back(nu[k]);
      positions[i].push_back(static_cast<int>(k + 1));
      self(self, k + 1);
      pieces[i].pop_back();
      positions[i].pop_back();
    }
  };
  rec(rec, 0);
  v.verdict = found;
  return v;
}

inline NonzeroVerdict nonzero_by_shuffle(const CartanData& c, const Weight& lambda, const IndexTuple& nu) {
  require_dominant(c, lambda);
  return nonzero_by_shuffle(c, fundamentals_of(lambda), nu);
}

}  // namespace klr
