#include "cayley/normalform.hpp"

#include <cstdlib>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

// Column reduction to lower-triangular Hermite form; u (if non-null) receives
// the same column operations starting from identity.
void hermite_reduce(IntMatrix& a, IntMatrix* u) {
  const int rows = a.rows();
  const int cols = a.cols();
  int pivot = 0;
  for (int i = 0; i < rows && pivot < cols; ++i) {
    // gcd the entries a(i, pivot..cols) into column `pivot`
    for (;;) {
      int best = -1;
      for (int j = pivot; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (best < 0 || abs(a(i, j)) < abs(a(i, best))) best = j;
      }
      if (best < 0) break;  // row has no pivot among remaining columns
      a.swap_cols(pivot, best);
      if (u) u->swap_cols(pivot, best);
      bool clean = true;
      for (int j = pivot + 1; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Int q = a(i, j) / a(i, pivot);
        a.add_col(j, pivot, -q);
        if (u) u->add_col(j, pivot, -q);
        if (a(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(i, pivot) == 0) continue;  // rank-deficient row, pivot stays
    if (a(i, pivot) < 0) {
      a.negate_col(pivot);
      if (u) u->negate_col(pivot);
    }
    for (int j = 0; j < pivot; ++j) {
      Int q = floor_div(a(i, j), a(i, pivot));
      a.add_col(j, pivot, -q);
      if (u) u->add_col(j, pivot, -q);
    }
    ++pivot;
  }
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("hnf expects a square matrix");
  if (det(m) == 0) throw SingularMatrix();
  HermiteForm f{m, IntMatrix::identity(m.dim())};
  hermite_reduce(f.h, &f.u);
  return f;
}

IntMatrix hnf_of_columns(const IntMatrix& m) {
  IntMatrix a = m;
  hermite_reduce(a, nullptr);
  IntMatrix h(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) h(i, j) = a(i, j);
  return h;
}

SmithForm snf_any(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("snf expects a square matrix");
  const int n = m.dim();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(n);
  IntMatrix right = IntMatrix::identity(n);

  // Fast path: already diagonal, positive, divisibility chain holds.
  {
    bool good = true;
    for (int i = 0; i < n && good; ++i)
      for (int j = 0; j < n && good; ++j)
        if (i != j && a(i, j) != 0) good = false;
    for (int i = 0; i < n && good; ++i)
      if (a(i, i) <= 0) good = false;
    for (int i = 0; i + 1 < n && good; ++i)
      if (a(i + 1, i + 1) % a(i, i) != 0) good = false;
    if (good) {
      SmithForm f{{}, left, right};
      for (int i = 0; i < n; ++i) f.d.push_back(a(i, i));
      return f;
    }
  }

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // find the smallest nonzero entry of the trailing submatrix as pivot
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        // trailing block is zero; remaining factors are 0
        for (int i = t; i < n; ++i) a(i, i) = 0;
        t = n;
        break;
      }
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool reduced = true;
      for (int i = t + 1; i < n; ++i)
        if (a(i, t) != 0) {
          Int q = a(i, t) / a(t, t);
          a.add_row(i, t, -q);
          left.add_row(i, t, -q);
          if (a(i, t) != 0) reduced = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (a(t, j) != 0) {
          Int q = a(t, j) / a(t, t);
          a.add_col(j, t, -q);
          right.add_col(j, t, -q);
          if (a(t, j) != 0) reduced = false;
        }
      if (!reduced) continue;

      // enforce d_t | remaining entries
      bool divides = true;
      for (int i = t + 1; i < n && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            left.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (t >= n) break;
  }

  for (int i = 0; i < n; ++i)
    if (a(i, i) < 0) {
      a.negate_row(i);
      left.negate_row(i);
    }

  SmithForm f{{}, left, right};
  for (int i = 0; i < n; ++i) f.d.push_back(a(i, i));
  return f;
}

SmithForm snf(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("snf expects a square matrix");
  if (det(m) == 0) throw SingularMatrix();
  return snf_any(m);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (!is_unimodular(u)) throw NotUnimodular();
  const int n = u.dim();
  // adjugate via Cramer on unit vectors; n is tiny everywhere this is used
  IntMatrix inv(n);
  Int d = det(u);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      IntMatrix t = u;
      for (int r = 0; r < n; ++r) t(r, i) = (r == j) ? 1 : 0;
      Int di = det(t);
      inv(i, j) = (d == 1) ? di : -di;
    }
  }
  return inv;
}

ConjugateResult rational_conjugate(const IntMatrix& m, const IntMatrix& p) {
  if (!m.square() || !p.square() || m.dim() != p.dim())
    throw DimensionMismatch("rational_conjugate shape");
  Int d = det(m);
  if (d == 0) throw SingularMatrix();
  const int n = m.dim();
  IntMatrix pm = p * m;
  IntMatrix q(n);
  for (int j = 0; j < n; ++j) {
    // Cramer for column j of Q in M*Q = P*M
    for (int i = 0; i < n; ++i) {
      IntMatrix t = m;
      for (int r = 0; r < n; ++r) t(r, i) = pm(r, j);
      Int num = det(t);
      if (num % d != 0) {
        ConjugateResult res;
        res.failing_entry = Rat(num) / Rat(d);
        res.fi = i;
        res.fj = j;
        return res;
      }
      q(i, j) = num / d;
    }
  }
  return ConjugateResult{q, Rat(0), -1, -1};
}

std::optional<Vec> solve_integral(const IntMatrix& m, const Vec& k) {
  if (!m.square()) throw DimensionMismatch("solve_integral shape");
  if (static_cast<int>(k.size()) != m.dim())
    throw DimensionMismatch("solve_integral vector length");
  Int d = det(m);
  if (d == 0) throw SingularMatrix();
  const int n = m.dim();
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    IntMatrix t = m;
    for (int r = 0; r < n; ++r) t(r, i) = k[r];
    Int num = det(t);
    if (num % d != 0) return std::nullopt;
    x[i] = num / d;
  }
  return x;
}

std::vector<Vec> integer_kernel(const IntMatrix& a) {
  SmithForm f = snf_any(a);
  const int n = a.dim();
  std::vector<Vec> basis;
  for (int j = 0; j < n; ++j) {
    if (f.d[j] != 0) continue;
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = f.right(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cayley
