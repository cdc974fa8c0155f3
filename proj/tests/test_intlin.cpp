#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/normalform.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

namespace {

// independent determinant oracle: signed permutation expansion
Int det_oracle(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Int sum = 0;
  std::vector<int> perm = idx;
  std::sort(perm.begin(), perm.end());
  do {
    Int term = 1;
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      term *= m(i, perm[i]);
      for (int j = i + 1; j < n; ++j)
        if (perm[j] < perm[i]) ++inv;
    }
    sum += (inv % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

bool hermite_shape_ok(const IntMatrix& h) {
  for (int i = 0; i < h.dim(); ++i) {
    if (h(i, i) <= 0) return false;
    for (int j = 0; j < h.dim(); ++j) {
      if (j > i && h(i, j) != 0) return false;
      if (j < i && (h(i, j) < 0 || h(i, j) >= h(i, i))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("matrix text round trip") {
  IntMatrix m = IntMatrix::parse("2,-1;0,3");
  CHECK(m(0, 0) == 2);
  CHECK(m(0, 1) == -1);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 3);
  CHECK(IntMatrix::parse(" 2 , -1 ; 0 , 3 ") == m);
  CHECK(IntMatrix::parse("[[2,-1],[0,3]]") == m);
  CHECK(IntMatrix::parse(m.str()) == m);
  CHECK_THROWS_AS(IntMatrix::parse("2,x;0,3"), ParseError);
  CHECK_THROWS_AS(IntMatrix::parse("1,2;3"), ParseError);
}

TEST_CASE("determinant fixed values") {
  CHECK(det(IntMatrix{{4, 0}, {0, 4}}) == 16);
  CHECK(det(IntMatrix{{2, -1}, {0, 3}}) == 6);
  CHECK(det(IntMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}}) == 9);
}

TEST_CASE("determinant matches permutation expansion") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m = random_matrix(rng, n, -9, 9);
    CHECK(det(m) == det_oracle(m));
  }
}

TEST_CASE("hermite form fixed values") {
  CHECK(hnf(IntMatrix{{4, 0}, {0, 4}}).h == IntMatrix{{4, 0}, {0, 4}});
  CHECK(hnf(IntMatrix{{2, -1}, {0, 3}}).h == IntMatrix{{1, 0}, {3, 6}});
  IntMatrix m{{1, 0}, {3, 2}};
  IntMatrix u{{1, 1}, {0, 1}};
  CHECK(hnf(m).h == hnf(m * u).h);
  CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("hermite form properties") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 3);
    IntMatrix m = random_matrix(rng, n, -9, 9);
    if (det(m) == 0) continue;
    HermiteForm f = hnf(m);
    CHECK(hermite_shape_ok(f.h));
    CHECK(is_unimodular(f.u));
    CHECK(m * f.u == f.h);
    CHECK(hnf(m * random_unimodular(rng, n)).h == f.h);
  }
}

TEST_CASE("smith form fixed values") {
  CHECK(snf(IntMatrix{{4, 0}, {0, 4}}).d == std::vector<Int>{4, 4});
  CHECK(snf(IntMatrix{{2, -1}, {0, 3}}).d == std::vector<Int>{1, 6});
  CHECK(snf(IntMatrix{{2, 0}, {0, 2}}).d == std::vector<Int>{2, 2});
}

TEST_CASE("smith form properties") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 3);
    IntMatrix m = random_matrix(rng, n, -9, 9);
    if (det(m) == 0) continue;
    SmithForm f = snf(m);
    Int prod = 1;
    for (std::size_t i = 0; i < f.d.size(); ++i) {
      CHECK(f.d[i] > 0);
      if (i + 1 < f.d.size()) CHECK(f.d[i + 1] % f.d[i] == 0);
      prod *= f.d[i];
    }
    CHECK(prod == abs(det(m)));
    CHECK(is_unimodular(f.left));
    CHECK(is_unimodular(f.right));
    IntMatrix diag(n);
    for (int i = 0; i < n; ++i) diag(i, i) = f.d[i];
    CHECK(f.left * m * f.right == diag);
  }
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(IntMatrix::identity(3)));
  CHECK(is_unimodular(IntMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("inverse of unimodular matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix u = random_unimodular(rng, n);
    CHECK(u * inverse_unimodular(u) == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), NotUnimodular);
}

TEST_CASE("rational conjugate") {
  auto r1 = rational_conjugate(IntMatrix{{3, 1}, {1, 3}}, IntMatrix{{0, 1}, {1, 0}});
  REQUIRE(r1.q.has_value());
  CHECK(*r1.q == IntMatrix{{0, 1}, {1, 0}});

  IntMatrix p{{0, -1}, {1, 0}};
  auto r2 = rational_conjugate(IntMatrix::identity(2), p);
  REQUIRE(r2.q.has_value());
  CHECK(*r2.q == p);

  auto r3 = rational_conjugate(IntMatrix{{5, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}});
  CHECK_FALSE(r3.q.has_value());
  CHECK(r3.failing_entry.str().find("/5") != std::string::npos);
}

TEST_CASE("rational conjugate satisfies PM = MQ") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMatrix m = random_matrix(rng, n, -5, 5);
    if (det(m) == 0) continue;
    SignedPermutation sp = random_signed_permutation(rng, n);
    auto r = rational_conjugate(m, sp.matrix());
    if (r.q) CHECK(sp.matrix() * m == m * *r.q);
  }
}

TEST_CASE("integral solving") {
  CHECK(*solve_integral(IntMatrix{{2, -1}, {0, 3}}, {2, 0}) == Vec{1, 0});
  CHECK(*solve_integral(IntMatrix{{4, 0}, {0, 4}}, {4, 0}) == Vec{1, 0});
  CHECK_FALSE(solve_integral(IntMatrix{{4, 0}, {0, 4}}, {2, 0}).has_value());
}

TEST_CASE("integral solving agrees with Smith solvability") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dist(-12, 12);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMatrix m = random_matrix(rng, n, -6, 6);
    if (det(m) == 0) continue;
    Vec k(n);
    for (int i = 0; i < n; ++i) k[i] = dist(rng);
    auto x = solve_integral(m, k);
    // solvable iff each component of left*k is divisible by its invariant factor
    SmithForm f = snf(m);
    Vec lk = f.left * k;
    bool solvable = true;
    for (int i = 0; i < n; ++i)
      if (lk[i] % f.d[i] != 0) solvable = false;
    CHECK(x.has_value() == solvable);
    if (x) CHECK(m * *x == k);
  }
}

TEST_CASE("integer kernel of singular matrices") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    IntMatrix m = random_matrix(rng, n, -3, 3);
    for (int i = 0; i < n; ++i) m(i, n - 1) = m(i, 0);  // force a null direction
    auto basis = integer_kernel(m);
    CHECK(!basis.empty());
    for (const auto& v : basis) {
      Vec img = m * v;
      for (const Int& x : img) CHECK(x == 0);
    }
  }
}
