#pragma once

// Self-check battery: closed formulas against the recursion oracle and the
// alternative evaluation paths, over a fixed set of Cartan matrices and weights.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <cstddef>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "klr/basis.hpp"
#include "klr/cartan.hpp"
#include "klr/dims.hpp"
#include "klr/idempotents.hpp"
#include "klr/levelred.hpp"
#include "klr/perms.hpp"

namespace klr {

struct BatteryEntry {
  std::string name;
  CartanData cartan;
};

/// `count` random symmetrizable 3x3 matrices: choose d_i in {1,2,3} and
/// m_ij in {0,1,2}, set d_i a_ij = -m_ij lcm(d_i, d_j).
inline std::vector<BatteryEntry> random_cartans(std::size_t count, std::uint32_t seed = 20240611) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dd(1, 3), mm(0, 2);
  std::vector<BatteryEntry> out;
  for (std::size_t k = 0; k < count; ++k) {
    long long d[3];
    for (auto& x : d) x = dd(rng);
    Matrix a(3, std::vector<long long>(3, 0));
    for (int i = 0; i < 3; ++i) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      for (int j = i + 1; j < 3; ++j) {
        const long long b = -mm(rng) * std::lcm(d[i], d[j]);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b / d[i];
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = b / d[j];
      }
    }
    out.push_back({"random" + std::to_string(k + 1), validate_cartan(a)});
  }
  return out;
}

/// A2, A3, C2, G2, A1~ and five random 3x3 matrices.
inline std::vector<BatteryEntry> default_battery() {
  std::vector<BatteryEntry> out;
  for (const char* name : {"A2", "A3", "C2", "G2", "A1~"}) out.push_back({name, builtin_cartan(name)});
  for (auto& e : random_cartans(5)) out.push_back(std::move(e));
  return out;
}

struct VerifyConfig {
  std::vector<BatteryEntry> battery = default_battery();
  /// When set, only this weight is used; otherwise every dominant weight of level 0..max_level.
  std::optional<Weight> weight;
  long long max_level = 3;
  long long max_n = 4;
  /// Height bound for the level-reduction checks (capped by max_n).
  long long max_n_levelred = 3;
};

struct SuiteReport {
  std::string suite;
  long long blocks = 0;  // (type, weight, beta) combinations visited
  long long failed_blocks = 0;
  long long checks = 0;
  long long mismatches = 0;
  std::string first_counterexample;
  double seconds = 0;

  bool passed() const { return mismatches == 0; }
};

inline std::string tuple_text(const CartanData& c, const IndexTuple& nu) {
  std::string s = "(";
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c.label(nu[k]));
  }
  return s + ")";
}

inline std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[static_cast<Index>(k)]);
  }
  return s + ")";
}

namespace detail {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      ++r_.mismatches;
      if (r_.first_counterexample.empty()) r_.first_counterexample = what;
    }
  }

 private:
  SuiteReport& r_;
};

template <class Fn>
void for_each_block(const VerifyConfig& cfg, long long max_n, SuiteReport& rep, Fn&& fn) {
  for (const auto& entry : cfg.battery) {
    const auto& c = entry.cartan;
    std::vector<Weight> weights;
    if (cfg.weight) {
      weights.push_back(*cfg.weight);
    } else {
      weights = dominant_weights(c.rank(), 0, cfg.max_level);
    }
    for (const auto& lambda : weights) {
      for (long long n = 1; n <= max_n; ++n) {
        for (const auto& beta : roots_of_height(c.rank(), n)) {
          ++rep.blocks;
          const long long before = rep.mismatches;
          fn(entry, lambda, beta);
          if (rep.mismatches != before) ++rep.failed_blocks;
        }
      }
    }
  }
}

inline std::string where(const BatteryEntry& e, const Weight& lambda) {
  return e.name + " Lambda=" + weight_text(lambda);
}

}  // namespace detail

/// graded_dim == oracle, eval at q=1 == dim, nonnegative coefficients, dim(nu,nu') == dim(nu',nu).
inline SuiteReport verify_oracle(const VerifyConfig& cfg) {
  SuiteReport rep{"oracle"};
  const auto start = std::chrono::steady_clock::now();
  detail::Recorder rec(rep);
  detail::for_each_block(cfg, cfg.max_n, rep, [&](const BatteryEntry& e, const Weight& lambda, const RootElement& beta) {
    const auto& c = e.cartan;
    const auto tuples = tuples_of(beta);
    for (const auto& nu : tuples) {
      for (const auto& nup : tuples) {
        const auto g = graded_dim(c, lambda, nu, nup);
        const auto o = graded_dim_oracle(c, lambda, nu, nup);
        const auto d = dim(c, lambda, nu, nup);
        const std::string at = detail::where(e, lambda) + " nu=" + tuple_text(c, nu) + " nu'=" + tuple_text(c, nup);
        rec.check(g == o, at + ": formula " + g.to_string() + " vs oracle " + o.to_string());
        rec.check(g.eval_one() == d, at + ": q=1 value " + g.eval_one().str() + " vs dim " + d.str());
        rec.check(g.nonnegative(), at + ": negative coefficient in " + g.to_string());
        rec.check(d == dim(c, lambda, nup, nu), at + ": dim not symmetric under swapping");
      }
    }
  });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// dim_divided(nu) == dim(nu,nu) and agreement of the vanishing criteria.
inline SuiteReport verify_divided(const VerifyConfig& cfg) {
  SuiteReport rep{"divided"};
  const auto start = std::chrono::steady_clock::now();
  detail::Recorder rec(rep);
  detail::for_each_block(cfg, cfg.max_n, rep, [&](const BatteryEntry& e, const Weight& lambda, const RootElement& beta) {
    const auto& c = e.cartan;
    for (const auto& nu : tuples_of(beta)) {
      const std::string at = detail::where(e, lambda) + " nu=" + tuple_text(c, nu);
      const auto direct = nonzero_direct(c, lambda, nu);
      const auto divided = nonzero_divided(c, lambda, nu);
      rec.check(*direct.value == *divided.value,
                at + ": divided " + divided.value->str() + " vs direct " + direct.value->str());
      const auto shuffle = nonzero_by_shuffle(c, lambda, nu);
      rec.check(shuffle.verdict == direct.verdict, at + ": shuffle criterion disagrees");
      bool tilde_form = true;
      try {
        TildeData::from_tuple(nu);
      } catch (const Error&) {
        tilde_form = false;
      }
      if (tilde_form) {
        rec.check(nonzero_tilde(c, lambda, nu).verdict == direct.verdict, at + ": block criterion disagrees");
      }
    }
  });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Pair and block reductions over all 2- and 3-part splits, plus the graded failure instance.
inline SuiteReport verify_levelred(const VerifyConfig& cfg) {
  SuiteReport rep{"levelred"};
  const auto start = std::chrono::steady_clock::now();
  detail::Recorder rec(rep);
  const long long max_n = std::min(cfg.max_n, cfg.max_n_levelred);
  std::map<std::string, PairDimMemo> memos;
  detail::for_each_block(cfg, max_n, rep, [&](const BatteryEntry& e, const Weight& lambda, const RootElement& beta) {
    const auto& c = e.cartan;
    auto& memo = memos.try_emplace(e.name, c).first->second;
    const auto tuples = tuples_of(beta);
    const BigInt block = block_dim(c, lambda, beta);
    for (std::size_t l : {std::size_t{2}, std::size_t{3}}) {
      for (const auto& split : level_splits(lambda, l)) {
        std::string parts;
        for (const auto& p : split.parts) parts += weight_text(p);
        const BigInt red = reduce_block_dim(c, beta, split);
        rec.check(red == block, detail::where(e, lambda) + " split " + parts + ": block reduction " + red.str() +
                                    " vs " + block.str());
        for (const auto& nu : tuples) {
          for (const auto& mu : tuples) {
            const BigInt direct = memo.get(lambda, nu, mu);
            const BigInt r = reduce_pair_dim_multi(c, nu, mu, split, memo);
            rec.check(r == direct, detail::where(e, lambda) + " split " + parts + " nu=" + tuple_text(c, nu) +
                                       " mu=" + tuple_text(c, mu) + ": reduction " + r.str() + " vs " + direct.str());
          }
        }
      }
    }
  });
  // The graded analogue fails for the nilHecke algebra at level 2, n = 1.
  const CartanData one = validate_cartan({{2}});
  const LevelSplit split{{Weight({1}), Weight({1})}};
  const LaurentPoly lhs = reduce_block_graded_sum(one, RootElement({1}), split);
  const LaurentPoly rhs = block_graded_dim(one, Weight({2}), RootElement({1}));
  rec.check(lhs != rhs, "graded reduction unexpectedly holds: " + lhs.to_string() + " = " + rhs.to_string());
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Basis cardinalities, positivity criterion, N-transforms and the tilde product formulas.
inline SuiteReport verify_basis(const VerifyConfig& cfg) {
  SuiteReport rep{"basis"};
  const auto start = std::chrono::steady_clock::now();
  detail::Recorder rec(rep);
  detail::for_each_block(cfg, cfg.max_n, rep, [&](const BatteryEntry& e, const Weight& lambda, const RootElement& beta) {
    const auto& c = e.cartan;
    const auto tuples = tuples_of(beta);
    const TildeData t = tilde_of(tuples.front());
    const std::string base = detail::where(e, lambda) + " nu~=" + tuple_text(c, t.tuple);
    const auto g = graded_dim(c, lambda, t.tuple, t.tuple);
    const auto gt = graded_dim_tilde(c, lambda, t);
    rec.check(g == gt, base + ": product formula " + gt.to_string() + " vs " + g.to_string());
    rec.check(basis_tilde_tilde(c, lambda, t).cardinality() == dim_tilde(c, lambda, t) &&
                  dim_tilde(c, lambda, t) == dim(c, lambda, t.tuple, t.tuple),
              base + ": tilde-tilde count mismatch");
    for (const auto& mu : tuples) {
      const std::string at = base + " mu=" + tuple_text(c, mu);
      const auto set = basis_index_set(c, lambda, mu, t);
      const BigInt left = dim(c, lambda, t.tuple, mu);
      const BigInt right = dim(c, lambda, mu, t.tuple);
      BigInt prod = t.blocks.young_order();
      for (long long b : set.bounds) prod *= b;
      const bool positive = !set.empty;
      if (positive) {
        rec.check(prod == left && prod == right && set.cardinality() == prod,
                  at + ": count " + prod.str() + " vs dims " + left.str() + "," + right.str());
      }
      rec.check(positive == (left != 0), at + ": positivity criterion disagrees with dim " + left.str());
      const Permutation d = d_mu(mu, t.tuple);
      for (int a = 1; a < static_cast<int>(mu.size()); ++a) {
        if (d(a) > d(a + 1)) rec.check(n_weight_transform_check(c, lambda, mu, t, a), at + ": N-transform at a=" + std::to_string(a));
      }
    }
  });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::vector<SuiteReport> verify_suite(const std::string& scope, const VerifyConfig& cfg) {
  if (scope == "oracle") return {verify_oracle(cfg)};
  if (scope == "divided") return {verify_divided(cfg)};
  if (scope == "levelred") return {verify_levelred(cfg)};
  if (scope == "basis") return {verify_basis(cfg)};
  if (scope == "all") return {verify_oracle(cfg), verify_divided(cfg), verify_levelred(cfg), verify_basis(cfg)};
  throw Error(ErrorKind::BadInput, "unknown suite '" + scope + "'");
}

}  // namespace klr
