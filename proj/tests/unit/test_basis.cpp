#include <gtest/gtest.h>

#include <set>

#include "klr/basis.hpp"
#include "klr/verify.hpp"
#include "oracles.hpp"

using namespace klr;

namespace {

std::vector<BatteryEntry> small_battery() {
  std::vector<BatteryEntry> out;
  for (const char* name : {"A2", "C2", "G2", "A1~"}) out.push_back({name, builtin_cartan(name)});
  out.push_back(random_cartans(2).back());
  return out;
}

BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long j = 2; j <= n; ++j) r *= j;
  return r;
}

// Visit every mu of length <= max_n together with its canonical tilde form.
template <class F>
void for_each_mu(const CartanData& c, long long max_n, F&& f) {
  for (long long n = 1; n <= max_n; ++n)
    for (const auto& beta : roots_of_height(c.rank(), n))
      for (const auto& mu : tuples_of(beta)) f(mu, tilde_of(mu));
}

}  // namespace

TEST(Basis, TildeOf) {
  EXPECT_EQ(tilde_of(IndexTuple{2, 1, 1}).tuple, (IndexTuple{2, 1, 1}));
  EXPECT_EQ(tilde_of(IndexTuple{2, 1, 1}, std::vector<Index>{1, 2}).tuple, (IndexTuple{1, 1, 2}));
  EXPECT_EQ(tilde_of(IndexTuple{0, 1, 1}).tuple, (IndexTuple{0, 1, 1}));
  const auto t = tilde_of(IndexTuple{0, 1, 0});
  EXPECT_EQ(t.tuple, (IndexTuple{0, 0, 1}));
  EXPECT_EQ(t.letters, (std::vector<Index>{0, 1}));
  EXPECT_EQ(t.blocks.size_of(0), 2);
  EXPECT_THROW(tilde_of(IndexTuple{0, 1}, std::vector<Index>{0}), Error);
  EXPECT_THROW(TildeData::from_tuple(IndexTuple{0, 1, 0}), Error);
}

TEST(Basis, NWeightsWhenMuIsTilde) {
  const auto c = builtin_cartan("A2");
  const Weight lam({4, 3});
  const auto t = TildeData::from_tuple(IndexTuple{0, 0, 0, 1, 1});
  const auto nw = n_weights(c, lam, t.tuple, t);
  for (int k = 1; k <= 5; ++k) {
    const std::size_t i = t.blocks.block_of(k);
    EXPECT_EQ(nw[static_cast<std::size_t>(k - 1)], tilde_n(c, lam, t, i) - (k - t.blocks.c(i) - 1));
  }
  EXPECT_EQ(tilde_n(c, lam, t, 0), 4);
  EXPECT_EQ(tilde_n(c, lam, t, 1), 3 + 3);
}

TEST(Basis, Example518Vectors) {
  // nu~ = (1,1,2) with mu = (2,1,1) and mu s_1 = (1,2,1); nodes 1,2 are indices 0,1.
  for (const char* name : {"A2", "G2", "C2"}) {
    const auto c = builtin_cartan(name);
    const auto t = TildeData::from_tuple(IndexTuple{0, 0, 1});
    for (const auto& lam : {Weight({2, 1}), Weight({3, 2}), Weight({5, 4})}) {
      const long long l1 = lam[0], l2 = lam[1];
      EXPECT_EQ(n_weights(c, lam, IndexTuple{1, 0, 0}, t), (std::vector<long long>{l2, l1, l1 - 1})) << name;
      EXPECT_EQ(n_weights(c, lam, IndexTuple{0, 1, 0}, t), (std::vector<long long>{l1, l2 - c.a(1, 0), l1 - 1})) << name;
      EXPECT_TRUE(n_weight_transform_check(c, lam, IndexTuple{1, 0, 0}, t, 1));
    }
  }
}

TEST(Basis, TransformPreconditions) {
  const auto c = builtin_cartan("A2");
  const auto t = TildeData::from_tuple(IndexTuple{0, 0, 1});
  try {
    n_weight_transform_check(c, Weight({2, 1}), IndexTuple{0, 0, 1}, t, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFail);
  }
  EXPECT_THROW(n_weight_transform_check(c, Weight({2, 1}), IndexTuple{1, 0, 0}, t, 3), Error);
}

TEST(Basis, TransformExhaustive) {
  for (const auto& entry : small_battery()) {
    const auto& c = entry.cartan;
    for (const auto& lam : dominant_weights(c.rank(), 0, 3))
      for_each_mu(c, 4, [&](const IndexTuple& mu, const TildeData& t) {
        const auto d = d_mu(mu, t.tuple);
        for (int a = 1; a < static_cast<int>(mu.size()); ++a)
          if (d(a) > d(a + 1)) ASSERT_TRUE(n_weight_transform_check(c, lam, mu, t, a)) << entry.name;
      });
  }
}

TEST(Basis, IndexSetNilHecke) {
  const auto c = validate_cartan({{2}});
  const auto s = basis_index_set(c, Weight({5}), IndexTuple{0, 0});
  EXPECT_EQ(s.bounds, (std::vector<long long>{5, 4}));
  EXPECT_EQ(s.permutations.size(), 2u);
  EXPECT_EQ(s.cardinality(), 40);
  std::set<std::pair<std::vector<int>, std::vector<long long>>> seen;
  s.for_each([&](const Permutation& w, const std::vector<long long>& r) {
    EXPECT_TRUE(seen.emplace(w.one_line(), r).second);
    return true;
  });
  EXPECT_EQ(seen.size(), 40u);
  EXPECT_TRUE(basis_index_set(c, Weight({1}), IndexTuple{0, 0}).empty);
}

TEST(Basis, CardinalityIsDimension) {
  for (const auto& entry : small_battery()) {
    const auto& c = entry.cartan;
    for (const auto& lam : dominant_weights(c.rank(), 0, 3))
      for_each_mu(c, 4, [&](const IndexTuple& mu, const TildeData& t) {
        const auto nw = n_weights(c, lam, mu, t);
        BigInt prod = t.blocks.young_order();
        bool positive = true;
        for (long long v : nw) {
          prod *= v;
          positive = positive && v > 0;
        }
        const BigInt want = oracle::dim(c, lam, t.tuple, mu);
        ASSERT_EQ(prod, want) << entry.name;
        ASSERT_EQ(oracle::dim(c, lam, mu, t.tuple), want);
        ASSERT_EQ(positive, want != 0);
        ASSERT_EQ(basis_index_set(c, lam, mu, t).cardinality(), want);
      });
  }
}

TEST(Basis, TildeTilde) {
  for (const auto& entry : small_battery()) {
    const auto& c = entry.cartan;
    for (const auto& lam : dominant_weights(c.rank(), 0, 3))
      for_each_mu(c, 4, [&](const IndexTuple&, const TildeData& t) {
        const auto g = graded_dim_tilde(c, lam, t);
        ASSERT_EQ(g, oracle::graded_dim(c, lam, t.tuple, t.tuple)) << entry.name;
        BigInt prod = 1;
        for (std::size_t i = 0; i < t.blocks.count(); ++i) prod *= nilhecke_dim(std::max(0LL, tilde_n(c, lam, t, i)), t.blocks.size_of(i));
        ASSERT_EQ(dim_tilde(c, lam, t), prod);
        ASSERT_EQ(basis_tilde_tilde(c, lam, t).cardinality(), prod);
      });
  }
}

TEST(Basis, TildeTildeA2) {
  const auto c = builtin_cartan("A2");
  const Weight lam({2, 1});
  const auto t = TildeData::from_tuple(IndexTuple{0, 0, 1});
  const long long n2 = tilde_n(c, lam, t, 1);
  EXPECT_EQ(n2, 3);
  EXPECT_EQ(basis_tilde_tilde(c, lam, t).cardinality(), factorial(2) * 2 * 1 * n2);
  EXPECT_EQ(dim_tilde(c, lam, t), oracle::dim(c, lam, t.tuple, t.tuple));
}

TEST(Basis, Counts121) {
  auto r = basis_121_counts(3, 2, -1, -1);
  EXPECT_EQ(r.psi_part, 18);
  EXPECT_EQ(r.poly_part, 18);
  EXPECT_EQ(r.total, 36);
  EXPECT_EQ(basis_121_counts(0, 4, -1, -2).total, 0);
  try {
    basis_121_counts(1, 1, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroA12);
  }
  EXPECT_THROW(basis_121_counts(1, 1, -1, 0), Error);
}

TEST(Basis, Counts121MatchDimension) {
  for (const Matrix& m : {Matrix{{2, -1}, {-1, 2}}, Matrix{{2, -2}, {-1, 2}}, Matrix{{2, -1}, {-2, 2}},
                          Matrix{{2, -1}, {-3, 2}}, Matrix{{2, -3}, {-1, 2}}, Matrix{{2, -2}, {-2, 2}}}) {
    const auto c = validate_cartan(m);
    for (long long l1 = 0; l1 <= 4; ++l1)
      for (long long l2 = 0; l2 <= 4; ++l2) {
        const Weight lam({l1, l2});
        EXPECT_EQ(basis_121_counts(l1, l2, m[0][1], m[1][0]).total, oracle::dim(c, lam, IndexTuple{0, 1, 0}, IndexTuple{0, 1, 0}));
      }
  }
}
