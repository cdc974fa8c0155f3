#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cayley/errors.hpp"
#include "cayley/linaut.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

TEST_CASE("signed permutation algebra") {
  auto all2 = all_signed_permutations(2);
  CHECK(all2.size() == 8);
  auto all3 = all_signed_permutations(3);
  CHECK(all3.size() == 48);

  std::set<std::vector<long long>> seen;
  for (const auto& sp : all3) {
    IntMatrix p = sp.matrix();
    CHECK(p * p.transpose() == IntMatrix::identity(3));
    CHECK(SignedPermutation::from_matrix(p) == sp);
    CHECK(sp.compose(sp.inverse()) == SignedPermutation::identity(3));
    std::vector<long long> key;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) key.push_back(p(i, j).convert_to<long long>());
    seen.insert(key);
  }
  CHECK(seen.size() == 48);

  CHECK_FALSE(SignedPermutation::from_matrix(IntMatrix{{1, 1}, {0, 1}}).has_value());
  CHECK_FALSE(SignedPermutation::from_matrix(IntMatrix{{2, 0}, {0, 1}}).has_value());
}

TEST_CASE("composition matches matrix product") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    SignedPermutation a = random_signed_permutation(rng, n);
    SignedPermutation b = random_signed_permutation(rng, n);
    CHECK(a.compose(b).matrix() == a.matrix() * b.matrix());
    int k = a.order();
    IntMatrix p = IntMatrix::identity(n);
    for (int i = 0; i < k; ++i) p = p * a.matrix();
    CHECK(p == IntMatrix::identity(n));
  }
}

TEST_CASE("linear stabilizer, fixed cases") {
  CHECK(linear_stabilizer(IntMatrix{{3, 0}, {0, 3}}).order() == 8);
  CHECK(linear_stabilizer(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}).order() == 48);

  LinearStabilizer s = linear_stabilizer(IntMatrix{{3, 1}, {1, 3}});
  auto swap = SignedPermutation::from_matrix(IntMatrix{{0, 1}, {1, 0}});
  const IntMatrix* q = s.q_for(*swap);
  REQUIRE(q != nullptr);
  CHECK(*q == IntMatrix{{0, 1}, {1, 0}});

  for (const auto& [sp, qq] : linear_stabilizer(IntMatrix{{6, 0}, {0, 2}}).members)
    CHECK(sp.sigma[0] == 0);  // no axis exchange survives
}

TEST_CASE("linear stabilizer is a group and respects PM = MQ") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMatrix m = random_matrix(rng, n, -5, 5);
    if (det(m) == 0) continue;
    LinearStabilizer s = linear_stabilizer(m);
    CHECK(s.q_for(SignedPermutation::identity(n)) != nullptr);
    for (const auto& [sp, q] : s.members) {
      CHECK(sp.matrix() * m == m * q);
      CHECK(s.q_for(sp.inverse()) != nullptr);
    }
    // closure on a sample of pairs
    for (int i = 0; i < 10 && !s.members.empty(); ++i) {
      const auto& a = s.members[rng() % s.members.size()].first;
      const auto& b = s.members[rng() % s.members.size()].first;
      CHECK(s.q_for(a.compose(b)) != nullptr);
    }
  }
}

TEST_CASE("stabilizer invariant under right equivalence") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMatrix m = random_matrix(rng, n, -4, 4);
    if (det(m) == 0) continue;
    IntMatrix u = random_unimodular(rng, n);
    LinearStabilizer s1 = linear_stabilizer(m);
    LinearStabilizer s2 = linear_stabilizer(m * u);
    REQUIRE(s1.order() == s2.order());
    for (const auto& [sp, q1] : s1.members) {
      const IntMatrix* q2 = s2.q_for(sp);
      REQUIRE(q2 != nullptr);
      CHECK(similarity_witness_check(q1, *q2, u));
    }
  }
}

TEST_CASE("linear edge transitivity, fixed cases") {
  CHECK(is_linearly_edge_transitive(IntMatrix{{3, 1}, {1, 3}}).transitive);
  CHECK_FALSE(is_linearly_edge_transitive(IntMatrix{{2, -1}, {0, 3}}).transitive);
  auto r = is_linearly_edge_transitive(IntMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}});
  CHECK(r.transitive);
  for (int i = 0; i < 3; ++i) {
    REQUIRE(r.witnesses[i].has_value());
    CHECK(r.witnesses[i]->sigma[0] == i);
  }
}

TEST_CASE("order-3 witness in dimension 3") {
  auto w = dim3_order3_witness(IntMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}});
  REQUIRE(w.has_value());
  CHECK(w->matrix() == p1_matrix());

  auto w2 = dim3_order3_witness(IntMatrix{{1, 1, 0}, {1, 0, -1}, {1, -1, 1}});
  REQUIRE(w2.has_value());
  CHECK(w2->order() == 3);

  CHECK_FALSE(dim3_order3_witness(IntMatrix{{7, 0, 0}, {0, 3, 0}, {0, 0, 2}}).has_value());
}

TEST_CASE("order-3 witness decides linear edge transitivity") {
  // exhaustive over small diagonal-heavy corpus plus random samples
  std::mt19937_64 rng(71);
  for (int t = 0; t < 300; ++t) {
    IntMatrix m = random_matrix(rng, 3, -3, 3);
    if (det(m) == 0) continue;
    CHECK(dim3_order3_witness(m).has_value() == is_linearly_edge_transitive(m).transitive);
  }
}

TEST_CASE("similarity witnesses from fixed data") {
  IntMatrix a{{1, 0, 1}, {0, -1, 1}, {0, -1, 0}};
  IntMatrix b{{1, 0, 2}, {0, -1, 1}, {0, -1, 0}};
  IntMatrix u{{1, 0, 1}, {0, 0, 1}, {0, -1, 1}};
  CHECK(similarity_witness_check(a, b, u));
  CHECK(similarity_witness_check(p1_matrix(), q2_matrix(),
                                 IntMatrix{{1, 0, 0}, {1, -1, 1}, {1, 0, 1}}));
  CHECK(similarity_witness_check(IntMatrix::identity(3), IntMatrix::identity(3),
                                 IntMatrix::identity(3)));
  CHECK_THROWS_AS(similarity_witness_check(a, b, IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                  NotUnimodular);
}

TEST_CASE("bounded similarity search") {
  CHECK_FALSE(bounded_similarity_search(q1_matrix(), q2_matrix(), 5).has_value());
  auto u = bounded_similarity_search(p1_matrix(), q2_matrix(), 2);
  REQUIRE(u.has_value());
  CHECK(similarity_witness_check(p1_matrix(), q2_matrix(), *u));

  // conjugates are rediscovered
  std::mt19937_64 rng(73);
  for (int t = 0; t < 20; ++t) {
    IntMatrix v = random_unimodular(rng, 3, 4);
    IntMatrix b = inverse_unimodular(v) * q2_matrix() * v;
    auto w = bounded_similarity_search(q2_matrix(), b, 64);
    if (w) CHECK(q2_matrix() * *w == *w * b);
  }
}

TEST_CASE("characteristic polynomials of the order-3 generators") {
  for (const auto& p : {p1_matrix(), p2_matrix(), p3_matrix(), p4_matrix()}) {
    CHECK(char_poly_3(p) == std::vector<Int>{-1, 0, 0});  // lambda^3 - 1
    IntMatrix cube = p * p * p;
    CHECK(cube == IntMatrix::identity(3));
  }
  CHECK(char_poly_3(q1_matrix()) == std::vector<Int>{-1, 0, 0});
  CHECK(char_poly_3(q2_matrix()) == std::vector<Int>{-1, 0, 0});
}
