#pragma once

#include <optional>
#include <vector>

#include "cayley/intmatrix.hpp"

namespace cayley {

/// Column-style Hermite form: h lower-triangular with positive diagonal and
/// off-diagonal row entries reduced into [0, diagonal); m * u == h with u
/// unimodular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

/// left * m * right == diag(d) with d_1 | d_2 | ... | d_n positive.
struct SmithForm {
  std::vector<Int> d;
  IntMatrix left;
  IntMatrix right;
};

HermiteForm hnf(const IntMatrix& m);

/// Hermite form of the column lattice of a rectangular full-row-rank matrix
/// (rows <= cols); returns only the square h.
IntMatrix hnf_of_columns(const IntMatrix& m);

SmithForm snf(const IntMatrix& m);

/// Smith form of an arbitrary square matrix; zero invariant factors are kept
/// (listed last).
SmithForm snf_any(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Exact inverse of a unimodular matrix.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// Q = m^-1 * p * m when integral (so p*m == m*q); otherwise the reduced
/// failing fraction and its position.
struct ConjugateResult {
  std::optional<IntMatrix> q;
  Rat failing_entry;
  int fi = -1;
  int fj = -1;
};
ConjugateResult rational_conjugate(const IntMatrix& m, const IntMatrix& p);

/// x with m*x == k over the integers, or nullopt.
std::optional<Vec> solve_integral(const IntMatrix& m, const Vec& k);

/// Basis of the integer kernel {x : a*x == 0} of a square matrix.
std::vector<Vec> integer_kernel(const IntMatrix& a);

}  // namespace cayley
