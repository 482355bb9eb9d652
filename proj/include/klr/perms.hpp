#pragma once

// Symmetric-group combinatorics on one-line notation: transport sets, inversion
// data, the Lehmer-type bijection, Young-subgroup coset representatives, d_mu,
// and the shuffle calculus.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/error.hpp"

namespace klr {

/// w given by (w(1), ..., w(n)), values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
      if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorKind::BadInput, "one-line notation is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  static Permutation identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), unchecked{});
  }
  /// The simple transposition s_a = (a, a+1) in S_n.
  static Permutation simple(std::size_t n, int a) {
    if (a < 1 || static_cast<std::size_t>(a) >= n) throw Error(ErrorKind::OutOfRange, "s_a needs 1 <= a < n");
    Permutation p = identity(n);
    std::swap(p.w_[static_cast<std::size_t>(a - 1)], p.w_[static_cast<std::size_t>(a)]);
    return p;
  }

  std::size_t size() const noexcept { return w_.size(); }
  /// w(t), 1-based.
  int operator()(int t) const { return w_[static_cast<std::size_t>(t - 1)]; }
  const std::vector<int>& one_line() const noexcept { return w_; }

  long long length() const {
    long long inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::size_t j = i + 1; j < w_.size(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != static_cast<int>(i + 1)) return false;
    return true;
  }
  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv), unchecked{});
  }
  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const {
    if (o.size() != size()) throw Error(ErrorKind::LengthMismatch, "composing permutations of different size");
    std::vector<int> r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = w_[static_cast<std::size_t>(o.w_[i] - 1)];
    return Permutation(std::move(r), unchecked{});
  }

  /// Place permutation action (w nu)_k = nu_{w^{-1}(k)}.
  IndexTuple act(const IndexTuple& nu) const {
    if (nu.size() != size()) throw Error(ErrorKind::LengthMismatch, "tuple and permutation differ in size");
    std::vector<Index> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[static_cast<std::size_t>(w_[i] - 1)] = nu[i];
    return IndexTuple(std::move(out));
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w_[i]);
    }
    return s + ")";
  }

 private:
  struct unchecked {};
  Permutation(std::vector<int> w, unchecked) : w_(std::move(w)) {}
  std::vector<int> w_;
};

/// Block sizes (b_1, ..., b_p) with cumulative sums c_0 = 0, ..., c_p = n.
class BlockStructure {
 public:
  BlockStructure() : cumulative_{0} {}
  explicit BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)), cumulative_{0} {
    for (int b : sizes_) {
      if (b <= 0) throw Error(ErrorKind::OutOfRange, "block sizes must be positive");
      cumulative_.push_back(cumulative_.back() + b);
    }
  }
  std::size_t count() const noexcept { return sizes_.size(); }
  int size_of(std::size_t i) const { return sizes_.at(i); }
  /// c_t for t = 0..p.
  int c(std::size_t t) const { return cumulative_.at(t); }
  int total() const { return cumulative_.back(); }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  /// 0-based block containing the 1-based position k.
  std::size_t block_of(int k) const {
    auto it = std::lower_bound(cumulative_.begin() + 1, cumulative_.end(), k);
    return static_cast<std::size_t>(it - cumulative_.begin() - 1);
  }
  /// |S_b| = prod b_i!.
  BigInt young_order() const {
    BigInt r = 1;
    for (int b : sizes_)
      for (int j = 2; j <= b; ++j) r *= j;
    return r;
  }
  bool operator==(const BlockStructure&) const = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> cumulative_;
};

/// Maximal runs of equal adjacent letters.
inline BlockStructure runs_of(const IndexTuple& nu) {
  std::vector<int> sizes;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (k == 0 || nu[k] != nu[k - 1]) sizes.push_back(0);
    ++sizes.back();
  }
  return BlockStructure(std::move(sizes));
}

namespace detail {

/// Depth-first enumeration of bijections w with nu'_{w(j)} = nu_j in
/// lexicographic one-line order. With `increasing_on` set, w must also be
/// increasing on each of its blocks.
class TransportWalker {
 public:
  TransportWalker(const IndexTuple& nu, const IndexTuple& nuprime, const BlockStructure* increasing_on)
      : n_(nu.size()), candidates_(nu.size()), choice_(nu.size(), -1), used_(nu.size() + 1, false),
        value_(nu.size(), 0) {
    if (nu.size() != nuprime.size()) throw Error(ErrorKind::LengthMismatch, "tuples differ in length");
    if (increasing_on != nullptr) {
      same_block_as_prev_.assign(n_, false);
      for (std::size_t j = 1; j < n_; ++j) {
        same_block_as_prev_[j] = increasing_on->block_of(static_cast<int>(j)) ==
                                 increasing_on->block_of(static_cast<int>(j + 1));
      }
    }
    std::vector<Index> a(nu.begin(), nu.end()), b(nuprime.begin(), nuprime.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    empty_ = a != b;
    for (std::size_t j = 0; j < n_ && !empty_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (nuprime[k] == nu[j]) candidates_[j].push_back(static_cast<int>(k + 1));
  }

  std::optional<Permutation> next() {
    if (empty_ || done_) return std::nullopt;
    std::size_t j;
    if (!started_) {
      started_ = true;
      if (n_ == 0) {
        done_ = true;
        return Permutation::identity(0);
      }
      j = 0;
    } else {
      j = n_ - 1;
      release(j);
    }
    // Advance position j to its next admissible candidate; on exhaustion back up.
    for (;;) {
      if (advance(j)) {
        if (j + 1 == n_) return Permutation(value_);
        ++j;
        choice_[j] = -1;
      } else {
        choice_[j] = -1;
        if (j == 0) {
          done_ = true;
          return std::nullopt;
        }
        --j;
        release(j);
      }
    }
  }

 private:
  void release(std::size_t j) { used_[static_cast<std::size_t>(value_[j])] = false; }

  bool advance(std::size_t j) {
    const auto& cand = candidates_[j];
    for (int c = choice_[j] + 1; c < static_cast<int>(cand.size()); ++c) {
      const int v = cand[static_cast<std::size_t>(c)];
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (!same_block_as_prev_.empty() && same_block_as_prev_[j] && v < value_[j - 1]) continue;
      choice_[j] = c;
      value_[j] = v;
      used_[static_cast<std::size_t>(v)] = true;
      return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> choice_;
  std::vector<bool> used_;
  std::vector<int> value_;
  std::vector<bool> same_block_as_prev_;
  bool empty_ = false;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace detail

/// Lazy stream over S(nu, nu') = { w : w nu = nu' }, lexicographic in one-line order.
class TransportSet {
 public:
  TransportSet(const IndexTuple& nu, const IndexTuple& nuprime) : walker_(nu, nuprime, nullptr) {}
  std::optional<Permutation> next() { return walker_.next(); }

 private:
  detail::TransportWalker walker_;
};

inline TransportSet transport_set(const IndexTuple& nu, const IndexTuple& nuprime) {
  return TransportSet(nu, nuprime);
}

inline std::vector<Permutation> transport_list(const IndexTuple& nu, const IndexTuple& nuprime) {
  std::vector<Permutation> out;
  auto s = transport_set(nu, nuprime);
  while (auto w = s.next()) out.push_back(std::move(*w));
  return out;
}

/// J_w^{<t} = { j < t : w(j) < w(t) }.
inline std::vector<int> j_less(const Permutation& w, int t) {
  if (t < 1 || static_cast<std::size_t>(t) > w.size()) throw Error(ErrorKind::OutOfRange, "position out of range");
  std::vector<int> out;
  for (int j = 1; j < t; ++j)
    if (w(j) < w(t)) out.push_back(j);
  return out;
}

/// (|J_w^{<1}|, ..., |J_w^{<n}|).
inline std::vector<int> theta(const Permutation& w) {
  std::vector<int> k(w.size(), 0);
  for (int t = 1; t <= static_cast<int>(w.size()); ++t)
    for (int j = 1; j < t; ++j)
      if (w(j) < w(t)) ++k[static_cast<std::size_t>(t - 1)];
  return k;
}

inline Permutation theta_inverse(const std::vector<int>& k) {
  const std::size_t n = k.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (k[j] < 0 || static_cast<std::size_t>(k[j]) > j) {
      throw Error(ErrorKind::OutOfRange, "k_" + std::to_string(j + 1) + " must lie in 0.." + std::to_string(j));
    }
  }
  // Right to left: w(t) is the (k_t+1)-th smallest value not used by later positions.
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> w(n);
  for (std::size_t t = n; t-- > 0;) {
    w[t] = remaining[static_cast<std::size_t>(k[t])];
    remaining.erase(remaining.begin() + k[t]);
  }
  return Permutation(std::move(w));
}

/// D(nu): elements of S(nu, nu) increasing on each maximal run of nu.
inline std::vector<Permutation> min_coset_reps(const IndexTuple& nu) {
  const BlockStructure blocks = runs_of(nu);
  detail::TransportWalker walker(nu, nu, &blocks);
  std::vector<Permutation> out;
  while (auto w = walker.next()) out.push_back(std::move(*w));
  return out;
}

/// All elements of the Young subgroup S_b, lexicographic.
inline std::vector<Permutation> young_subgroup(const BlockStructure& blocks) {
  std::vector<Index> labels;
  for (std::size_t i = 0; i < blocks.count(); ++i)
    for (int r = 0; r < blocks.size_of(i); ++r) labels.push_back(static_cast<Index>(i));
  const IndexTuple t(labels);
  return transport_list(t, t);
}

/// The minimal-length w with w mu = nu~ (equivalently w^{-1} nu~ = mu): the
/// r-th occurrence of each letter in mu goes to the r-th occurrence in nu~.
inline Permutation d_mu(const IndexTuple& mu, const IndexTuple& nu_tilde) {
  if (mu.size() != nu_tilde.size()) throw Error(ErrorKind::IncompatibleContent, "tuples differ in length");
  std::map<Index, std::vector<int>> slots;
  for (std::size_t k = 0; k < nu_tilde.size(); ++k) slots[nu_tilde[k]].push_back(static_cast<int>(k + 1));
  std::map<Index, std::size_t> seen;
  std::vector<int> w(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) {
    auto it = slots.find(mu[j]);
    std::size_t& r = seen[mu[j]];
    if (it == slots.end() || r >= it->second.size()) {
      throw Error(ErrorKind::IncompatibleContent, "mu and nu~ have different content");
    }
    w[j] = it->second[r++];
  }
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------
// Shuffles.

/// An ordered split of {1..n} into l increasing (possibly empty) parts.
struct ShuffleSplit {
  std::vector<std::vector<int>> parts;

  std::size_t total() const {
    std::size_t s = 0;
    for (const auto& p : parts) s += p.size();
    return s;
  }
  bool valid(std::size_t n) const {
    std::vector<bool> seen(n + 1, false);
    std::size_t count = 0;
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1 || static_cast<std::size_t>(p[i]) > n || seen[static_cast<std::size_t>(p[i])]) return false;
        if (i > 0 && p[i] <= p[i - 1]) return false;
        seen[static_cast<std::size_t>(p[i])] = true;
        ++count;
      }
    }
    return count == n;
  }
  auto operator<=>(const ShuffleSplit&) const = default;
  bool operator==(const ShuffleSplit&) const = default;
};

namespace detail {

inline ShuffleSplit split_from_assignment(const std::vector<int>& part_of, std::size_t l) {
  ShuffleSplit s;
  s.parts.resize(l);
  for (std::size_t k = 0; k < part_of.size(); ++k) s.parts[static_cast<std::size_t>(part_of[k])].push_back(static_cast<int>(k + 1));
  return s;
}

}  // namespace detail

/// Lazy stream over D^l(n); position k's part index runs as an odometer, l^n splits in total.
class ShuffleStream {
 public:
  ShuffleStream(std::size_t n, std::size_t l) : l_(l), part_of_(n, 0) {
    if (l == 0) throw Error(ErrorKind::OutOfRange, "need at least one part");
  }
  std::optional<ShuffleSplit> next() {
    if (done_) return std::nullopt;
    if (started_) {
      std::size_t k = part_of_.size();
      for (;;) {
        if (k == 0) {
          done_ = true;
          return std::nullopt;
        }
        --k;
        if (static_cast<std::size_t>(++part_of_[k]) < l_) break;
        part_of_[k] = 0;
      }
    }
    started_ = true;
    return detail::split_from_assignment(part_of_, l_);
  }

 private:
  std::size_t l_;
  std::vector<int> part_of_;
  bool started_ = false;
  bool done_ = false;
};

inline ShuffleStream shuffles(std::size_t n, std::size_t l) { return ShuffleStream(n, l); }

/// Visits every pair (s, t) in D^l(nu, mu), i.e. beta(nu_{s^i}) = beta(mu_{t^i})
/// for all i. Splits are produced on the fly; `fn` returns false to stop early.
/// Returns false when stopped early.
inline bool for_each_matched_shuffle(const IndexTuple& nu, const IndexTuple& mu, std::size_t l,
                                     const std::function<bool(const ShuffleSplit&, const ShuffleSplit&)>& fn) {
  if (l == 0) throw Error(ErrorKind::OutOfRange, "need at least one part");
  if (nu.size() != mu.size()) return true;
  {
    std::vector<Index> a(nu.begin(), nu.end()), b(mu.begin(), mu.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return true;
  }
  const std::size_t n = nu.size();
  // Dense letter ids for content bookkeeping.
  std::map<Index, std::size_t> id;
  for (Index x : nu) id.emplace(x, id.size());
  const std::size_t letters = id.size();

  auto s_stream = shuffles(n, l);
  std::vector<std::vector<int>> need(l, std::vector<int>(letters, 0));
  std::vector<int> t_part(n, 0);
  while (auto s = s_stream.next()) {
    for (auto& row : need) std::fill(row.begin(), row.end(), 0);
    for (std::size_t i = 0; i < l; ++i)
      for (int p : s->parts[i]) ++need[i][id[nu[static_cast<std::size_t>(p - 1)]]];
    bool keep_going = true;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (!keep_going) return;
      if (k == n) {
        keep_going = fn(*s, detail::split_from_assignment(t_part, l));
        return;
      }
      const std::size_t x = id[mu[k]];
      for (std::size_t i = 0; i < l; ++i) {
        if (need[i][x] == 0) continue;
        --need[i][x];
        t_part[k] = static_cast<int>(i);
        self(self, k + 1);
        ++need[i][x];
        if (!keep_going) return;
      }
    };
    rec(rec, 0);
    if (!keep_going) return false;
  }
  return true;
}

/// Result of splitting w along a 2-part shuffle s.
struct ShuffleDecomposition {
  Permutation w1;
  Permutation w2;
  ShuffleSplit t;
};

/// For s = (s^1, s^2): t^i is the sorted image w(s^i) and w_i(r) is the rank of
/// w(s^i_r) inside t^i.
inline ShuffleDecomposition split_under_shuffle(const Permutation& w, const ShuffleSplit& s) {
  if (s.parts.size() != 2 || !s.valid(w.size())) throw Error(ErrorKind::BadInput, "not a 2-part shuffle of 1..n");
  ShuffleDecomposition out{Permutation::identity(0), Permutation::identity(0), {}};
  out.t.parts.resize(2);
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<int> image;
    for (int p : s.parts[i]) image.push_back(w(p));
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> wi(image.size());
    for (std::size_t r = 0; r < image.size(); ++r) {
      wi[r] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), image[r]) - sorted.begin()) + 1;
    }
    (i == 0 ? out.w1 : out.w2) = Permutation(std::move(wi));
    out.t.parts[i] = std::move(sorted);
  }
  return out;
}

/// tau: glue w_i on (s^i -> t^i) back into one permutation of 1..n.
inline Permutation recompose(const std::vector<Permutation>& pieces, const ShuffleSplit& s, const ShuffleSplit& t) {
  if (pieces.size() != s.parts.size() || t.parts.size() != s.parts.size()) {
    throw Error(ErrorKind::LengthMismatch, "part counts differ");
  }
  const std::size_t n = s.total();
  if (!s.valid(n) || !t.valid(n)) throw Error(ErrorKind::BadInput, "not a shuffle of 1..n");
  std::vector<int> w(n, 0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& si = s.parts[i];
    const auto& ti = t.parts[i];
    if (si.size() != ti.size() || pieces[i].size() != si.size()) {
      throw Error(ErrorKind::LengthMismatch, "part sizes differ");
    }
    for (std::size_t r = 0; r < si.size(); ++r) {
      w[static_cast<std::size_t>(si[r] - 1)] = ti[static_cast<std::size_t>(pieces[i](static_cast<int>(r + 1)) - 1)];
    }
  }
  return Permutation(std::move(w));
}

inline Permutation recompose(const Permutation& w1, const Permutation& w2, const ShuffleSplit& s, const ShuffleSplit& t) {
  return recompose(std::vector<Permutation>{w1, w2}, s, t);
}

/// l-part split obtained by repeated 2-part splitting: peel off part 1, then
/// split the remainder (relabelled to 1..m) along the remaining parts.
inline std::pair<std::vector<Permutation>, ShuffleSplit> split_under_shuffle_multi(const Permutation& w,
                                                                                    const ShuffleSplit& s) {
  const std::size_t n = w.size();
  if (s.parts.empty() || !s.valid(n)) throw Error(ErrorKind::BadInput, "not a shuffle of 1..n");
  if (s.parts.size() == 1) return {{w}, ShuffleSplit{{Permutation::identity(n).one_line()}}};
  std::vector<int> rest;
  for (std::size_t i = 1; i < s.parts.size(); ++i) rest.insert(rest.end(), s.parts[i].begin(), s.parts[i].end());
  std::sort(rest.begin(), rest.end());
  auto two = split_under_shuffle(w, ShuffleSplit{{s.parts[0], rest}});

  // Relabel the remainder: source positions by rank in `rest`, targets by rank in t^2.
  ShuffleSplit inner;
  for (std::size_t i = 1; i < s.parts.size(); ++i) {
    std::vector<int> p;
    for (int x : s.parts[i]) p.push_back(static_cast<int>(std::lower_bound(rest.begin(), rest.end(), x) - rest.begin()) + 1);
    inner.parts.push_back(std::move(p));
  }
  auto [sub_pieces, sub_t] = split_under_shuffle_multi(two.w2, inner);
  std::vector<Permutation> pieces{two.w1};
  pieces.insert(pieces.end(), sub_pieces.begin(), sub_pieces.end());
  ShuffleSplit t;
  t.parts.push_back(two.t.parts[0]);
  for (const auto& p : sub_t.parts) {
    std::vector<int> mapped;
    for (int x : p) mapped.push_back(two.t.parts[1][static_cast<std::size_t>(x - 1)]);
    t.parts.push_back(std::move(mapped));
  }
  return {std::move(pieces), std::move(t)};
}

}  // namespace klr
