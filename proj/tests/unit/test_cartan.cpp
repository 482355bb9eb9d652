#include <gtest/gtest.h>

#include <numeric>

#include "klr/cartan.hpp"
#include "klr/verify.hpp"
#include "oracles.hpp"

using namespace klr;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::BadInput;
}

bool symmetrizes(const Matrix& m, const std::vector<long long>& d) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (d[i] * m[i][j] != d[j] * m[j][i]) return false;
  return true;
}

}  // namespace

TEST(Cartan, ValidateSymmetric) {
  const auto c = validate_cartan({{2, -1}, {-1, 2}});
  EXPECT_EQ(c.symmetrizer(), (std::vector<long long>{1, 1}));
  EXPECT_EQ(c.labels(), (std::vector<long long>{1, 2}));
}

TEST(Cartan, ValidateMinimalSymmetrizer) {
  const auto c = validate_cartan({{2, -2}, {-1, 2}});
  EXPECT_EQ(c.symmetrizer(), (std::vector<long long>{1, 2}));
}

TEST(Cartan, ValidateErrors) {
  EXPECT_EQ(kind_of([] { validate_cartan({{2, -1}, {3, 2}}); }), ErrorKind::BadSign);
  EXPECT_EQ(kind_of([] { validate_cartan({{2, -1, 0}, {-1, 2}}); }), ErrorKind::NotSquare);
  EXPECT_EQ(kind_of([] { validate_cartan({{1, -1}, {-1, 2}}); }), ErrorKind::BadDiagonal);
  EXPECT_EQ(kind_of([] { validate_cartan({{2, -1}, {0, 2}}); }), ErrorKind::BadSign);
  // A 3-cycle whose ratios do not close up.
  EXPECT_EQ(kind_of([] { validate_cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}); }), ErrorKind::NotSymmetrizable);
}

TEST(Cartan, SymmetrizerIsMinimalByBruteForce) {
  for (const auto& entry : default_battery()) {
    const auto& c = entry.cartan;
    ASSERT_TRUE(symmetrizes(c.matrix(), c.symmetrizer())) << entry.name;
    // Every connected battery matrix: no vector with smaller entries works.
    const std::size_t r = c.rank();
    std::vector<long long> d(r, 1);
    const long long bound = *std::max_element(c.symmetrizer().begin(), c.symmetrizer().end());
    bool found_smaller = false;
    for (;;) {
      if (d != c.symmetrizer() && symmetrizes(c.matrix(), d) &&
          std::accumulate(d.begin(), d.end(), 0LL) < std::accumulate(c.symmetrizer().begin(), c.symmetrizer().end(), 0LL))
        found_smaller = true;
      std::size_t k = 0;
      while (k < r && d[k] == bound) d[k++] = 1;
      if (k == r) break;
      ++d[k];
    }
    EXPECT_FALSE(found_smaller) << entry.name;
  }
}

TEST(Cartan, Builtins) {
  EXPECT_EQ(builtin_cartan("A2").matrix(), (Matrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(builtin_cartan("A3").matrix(), (Matrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  EXPECT_EQ(builtin_cartan("A1~").matrix(), (Matrix{{2, -2}, {-2, 2}}));
  EXPECT_EQ(builtin_cartan("A1_affine").matrix(), (Matrix{{2, -2}, {-2, 2}}));
  EXPECT_EQ(builtin_cartan("G2").matrix(), (Matrix{{2, -1}, {-3, 2}}));
  EXPECT_EQ(builtin_cartan("C2").symmetrizer(), (std::vector<long long>{1, 2}));
  EXPECT_EQ(kind_of([] { builtin_cartan("Q3"); }), ErrorKind::UnknownType);
  EXPECT_EQ(kind_of([] { builtin_cartan("E5"); }), ErrorKind::BadRank);
}

TEST(Cartan, BuiltinsAreValid) {
  for (const char* name : {"A1", "A4", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2", "A2~", "B3~", "C2~", "D4~",
                           "E6~", "F4~", "G2~", "A2^2", "A4^2", "D3^2"}) {
    const auto c = builtin_cartan(name);
    EXPECT_TRUE(symmetrizes(c.matrix(), c.symmetrizer())) << name;
    EXPECT_EQ(validate_cartan(c.matrix()).symmetrizer(), c.symmetrizer()) << name;
  }
}

TEST(Cartan, PairingRoots) {
  const auto a2 = builtin_cartan("A2");
  EXPECT_EQ(pairing_roots(a2, 0, 0), 2);
  EXPECT_EQ(pairing_roots(a2, 0, 1), -1);
  const auto c2 = builtin_cartan("C2");
  EXPECT_EQ(pairing_roots(c2, 0, 1), -2);
  EXPECT_EQ(pairing_roots(c2, 1, 0), -2);
}

TEST(Cartan, PairCoroot) {
  const auto a1 = validate_cartan({{2}});
  EXPECT_EQ(pair_coroot(a1, Weight({5}), 0), 5);
  const auto a2 = builtin_cartan("A2");
  const Weight lam({1, 1});
  const RootElement alpha1({1, 0});
  EXPECT_EQ(pair_coroot(a2, lam, alpha1, 0), -1);
  EXPECT_EQ(pair_coroot(a2, lam, alpha1, 1), 2);
}

TEST(Cartan, Defect) {
  const auto a1 = validate_cartan({{2}});
  EXPECT_EQ(defect(a1, Weight({5}), RootElement::zero(1)).twice, 0);
  EXPECT_EQ(defect(a1, Weight({5}), RootElement({2})).twice, 12);
}

TEST(Cartan, DefectTelescopes) {
  // df(L, b) - df(L, b - a_i) = d_i (1 + <L - b, h_i>) whenever b - a_i >= 0.
  for (const auto& entry : default_battery()) {
    const auto& c = entry.cartan;
    for (const auto& lam : dominant_weights(c.rank(), 0, 2))
      for (long long n = 1; n <= 3; ++n)
        for (const auto& beta : roots_of_height(c.rank(), n))
          for (Index i = 0; i < static_cast<Index>(c.rank()); ++i) {
            if (beta[i] == 0) continue;
            const long long lhs = defect(c, lam, beta).twice - defect(c, lam, beta.minus_simple(i)).twice;
            EXPECT_EQ(lhs, 2 * c.d(i) * (1 + pair_coroot(c, lam, beta, i))) << entry.name;
          }
  }
}

TEST(Cartan, BetaOfTuple) {
  EXPECT_EQ(beta_of_tuple(3, IndexTuple{1, 2, 1}), RootElement({0, 2, 1}));
  EXPECT_EQ(beta_of_tuple(3, IndexTuple{}), RootElement::zero(3));
  EXPECT_EQ(beta_of_tuple(1, IndexTuple{0, 0}), RootElement({2}));
  EXPECT_EQ(kind_of([] { beta_of_tuple(2, IndexTuple{2}); }), ErrorKind::BadIndex);
}

TEST(Cartan, Enumerators) {
  EXPECT_EQ(roots_of_height(2, 2).size(), 3u);
  EXPECT_EQ(roots_of_height(3, 3).size(), 10u);
  EXPECT_EQ(tuples_of(RootElement({2, 1})).size(), 3u);
  EXPECT_EQ(dominant_weights(3, 0, 2).size(), 10u);
  EXPECT_EQ(kind_of([] { require_dominant(builtin_cartan("A2"), Weight({1, -1})); }), ErrorKind::NotDominant);
}

TEST(Cartan, Relabel) {
  const auto c = builtin_cartan("A2").relabelled({7, 9});
  EXPECT_EQ(c.index_of_label(9), 1);
  EXPECT_EQ(kind_of([&] { c.index_of_label(1); }), ErrorKind::BadIndex);
}

TEST(Cartan, RandomBatteryIsValid) {
  for (const auto& entry : random_cartans(5)) {
    EXPECT_EQ(entry.cartan.rank(), 3u);
    EXPECT_TRUE(symmetrizes(entry.cartan.matrix(), entry.cartan.symmetrizer()));
  }
}
