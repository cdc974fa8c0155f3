#include "cayley/linaut.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

IntMatrix SignedPermutation::matrix() const {
  const int n = dim();
  IntMatrix p(n);
  for (int j = 0; j < n; ++j) p(sigma[j], j) = signs[j];
  return p;
}

std::optional<SignedPermutation> SignedPermutation::from_matrix(const IntMatrix& p) {
  if (!p.square()) return std::nullopt;
  const int n = p.dim();
  SignedPermutation sp;
  sp.sigma.assign(n, -1);
  sp.signs.assign(n, 0);
  std::vector<bool> row_used(n, false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Int& x = p(i, j);
      if (x == 0) continue;
      if ((x != 1 && x != -1) || sp.signs[j] != 0 || row_used[i]) return std::nullopt;
      sp.sigma[j] = i;
      sp.signs[j] = (x == 1) ? 1 : -1;
      row_used[i] = true;
    }
    if (sp.signs[j] == 0) return std::nullopt;
  }
  return sp;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation sp;
  sp.sigma.resize(n);
  std::iota(sp.sigma.begin(), sp.sigma.end(), 0);
  sp.signs.assign(n, 1);
  return sp;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
  const int n = dim();
  SignedPermutation r;
  r.sigma.resize(n);
  r.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    r.sigma[j] = sigma[o.sigma[j]];
    r.signs[j] = o.signs[j] * signs[o.sigma[j]];
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = dim();
  SignedPermutation r;
  r.sigma.resize(n);
  r.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    r.sigma[sigma[j]] = j;
    r.signs[sigma[j]] = signs[j];
  }
  return r;
}

int SignedPermutation::order() const {
  SignedPermutation id = identity(dim());
  SignedPermutation cur = *this;
  int k = 1;
  while (!(cur == id)) {
    cur = cur.compose(*this);
    ++k;
    if (k > 4 * dim() * dim() + 8) throw std::logic_error("signed permutation order overflow");
  }
  return k;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPermutation sp;
      sp.sigma = perm;
      sp.signs.resize(n);
      for (int j = 0; j < n; ++j) sp.signs[j] = (mask >> j) & 1 ? -1 : 1;
      out.push_back(std::move(sp));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

LinearStabilizer linear_stabilizer(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("linear_stabilizer shape");
  if (m.dim() > 8) throw DimensionTooLarge("signed permutation enumeration limited to n <= 8");
  if (det(m) == 0) throw SingularMatrix();
  LinearStabilizer stab;
  for (const auto& sp : all_signed_permutations(m.dim())) {
    auto conj = rational_conjugate(m, sp.matrix());
    if (conj.q) stab.members.emplace_back(sp, *conj.q);
  }
  return stab;
}

const IntMatrix* LinearStabilizer::q_for(const SignedPermutation& p) const {
  for (const auto& [sp, q] : members)
    if (sp == p) return &q;
  return nullptr;
}

LinearEdgeTransitivity is_linearly_edge_transitive(const IntMatrix& m, const LinearStabilizer& stab) {
  const int n = m.dim();
  LinearEdgeTransitivity r;
  r.witnesses.resize(n);
  for (const auto& [sp, q] : stab.members) {
    int image = sp.sigma[0];  // P e_1 = +-e_{image+1}
    if (!r.witnesses[image]) r.witnesses[image] = sp;
  }
  r.transitive = std::all_of(r.witnesses.begin(), r.witnesses.end(),
                             [](const auto& w) { return w.has_value(); });
  return r;
}

LinearEdgeTransitivity is_linearly_edge_transitive(const IntMatrix& m) {
  return is_linearly_edge_transitive(m, linear_stabilizer(m));
}

std::optional<SignedPermutation> dim3_order3_witness(const IntMatrix& m) {
  if (!m.square() || m.dim() != 3) throw DimensionMismatch("dim3_order3_witness expects n = 3");
  LinearStabilizer stab = linear_stabilizer(m);
  // P1..P4 first so the canonical generators are preferred as witnesses
  for (const auto& p : {p1_matrix(), p2_matrix(), p3_matrix(), p4_matrix()}) {
    auto sp = SignedPermutation::from_matrix(p);
    if (stab.q_for(*sp)) return sp;
  }
  for (const auto& [sp, q] : stab.members)
    if (sp.order() == 3) return sp;
  return std::nullopt;
}

bool similarity_witness_check(const IntMatrix& a, const IntMatrix& b, const IntMatrix& u) {
  if (!is_unimodular(u)) throw NotUnimodular();
  return a * u == u * b;
}

std::optional<IntMatrix> bounded_similarity_search(const IntMatrix& a, const IntMatrix& b,
                                                   long long bound) {
  if (!a.square() || !b.square() || a.dim() != b.dim())
    throw DimensionMismatch("bounded_similarity_search shape");
  const int n = a.dim();
  if (a == b) return IntMatrix::identity(n);

  // Sylvester system (I (x) A - B^t (x) I) vec(U) = 0, vec column-major.
  const int nn = n * n;
  IntMatrix s(nn);
  auto vid = [n](int row, int col) { return col * n + row; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int r = vid(i, j);
      for (int k = 0; k < n; ++k) {
        s(r, vid(k, j)) += a(i, k);   // (AU)_{ij}
        s(r, vid(i, k)) -= b(k, j);   // (UB)_{ij}
      }
    }

  std::vector<Vec> kernel = integer_kernel(s);
  const int k = static_cast<int>(kernel.size());
  if (k == 0 || k > 6) return std::nullopt;

  // Coefficient ranges that provably cover all entry-bounded solutions: pick
  // an invertible k x k row submatrix S of the basis matrix; then
  // c = S^-1 * u_rows gives |c_i| <= sum_j |adj(S)_{ij}| * bound / |det S|.
  IntMatrix basis(nn, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < nn; ++i) basis(i, j) = kernel[j][i];
  // Greedy choice of k linearly independent rows via fraction-free elimination.
  std::vector<int> rows;
  std::vector<Vec> reduced;  // echelon rows over the k coordinates
  for (int r = 0; r < nn && static_cast<int>(rows.size()) < k; ++r) {
    Vec v(k);
    for (int j = 0; j < k; ++j) v[j] = basis(r, j);
    for (const auto& piv : reduced) {
      int pc = 0;
      while (piv[pc] == 0) ++pc;
      if (v[pc] == 0) continue;
      Int f1 = piv[pc], f2 = v[pc];
      for (int j = 0; j < k; ++j) v[j] = v[j] * f1 - piv[j] * f2;
    }
    if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) {
      rows.push_back(r);
      reduced.push_back(std::move(v));
    }
  }
  if (static_cast<int>(rows.size()) < k) return std::nullopt;

  IntMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = basis(rows[i], j);
  Int dsub = det(sub);
  std::vector<long long> range(k);
  double total = 1.0;
  for (int i = 0; i < k; ++i) {
    Int row_abs = 0;
    for (int j = 0; j < k; ++j) {
      // adj(S)_{ij} = cofactor_{ji}
      IntMatrix minor(k - 1, k - 1);
      int mi = 0;
      for (int r = 0; r < k; ++r) {
        if (r == j) continue;
        int mj = 0;
        for (int c = 0; c < k; ++c) {
          if (c == i) continue;
          minor(mi, mj) = sub(r, c);
          ++mj;
        }
        ++mi;
      }
      Int cof = (k == 1) ? Int(1) : det(minor);
      row_abs += abs(cof);
    }
    Int lim = (row_abs * bound) / abs(dsub) + 1;
    range[i] = static_cast<long long>(lim);
    total *= 2.0 * static_cast<double>(range[i]) + 1.0;
    if (total > 2e7) return std::nullopt;
  }

  std::vector<long long> c(k, 0);
  for (int i = 0; i < k; ++i) c[i] = -range[i];
  for (;;) {
    IntMatrix u(n);
    bool in_bound = true;
    for (int e = 0; e < nn && in_bound; ++e) {
      Int x = 0;
      for (int j = 0; j < k; ++j) x += Int(c[j]) * basis(e, j);
      if (abs(x) > bound) in_bound = false;
      u(e % n, e / n) = x;
    }
    if (in_bound && is_unimodular(u) && a * u == u * b) return u;
    int i = k - 1;
    while (i >= 0) {
      if (c[i] < range[i]) {
        ++c[i];
        break;
      }
      c[i] = -range[i];
      --i;
    }
    if (i < 0) break;
  }
  return std::nullopt;
}

std::vector<Int> char_poly_3(const IntMatrix& p) {
  if (!p.square() || p.dim() != 3) throw DimensionMismatch("char_poly_3 expects n = 3");
  Int tr = p(0, 0) + p(1, 1) + p(2, 2);
  Int m01 = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  Int m02 = p(0, 0) * p(2, 2) - p(0, 2) * p(2, 0);
  Int m12 = p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1);
  return {-det(p), m01 + m02 + m12, -tr};
}

IntMatrix p1_matrix() { return IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }
IntMatrix p2_matrix() { return IntMatrix{{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}; }
IntMatrix p3_matrix() { return IntMatrix{{0, 0, -1}, {1, 0, 0}, {0, -1, 0}}; }
IntMatrix p4_matrix() { return IntMatrix{{0, 0, -1}, {-1, 0, 0}, {0, 1, 0}}; }
IntMatrix q1_matrix() { return IntMatrix{{1, 0, 0}, {0, -1, 1}, {0, -1, 0}}; }
IntMatrix q2_matrix() { return IntMatrix{{1, 0, 1}, {0, -1, 1}, {0, -1, 0}}; }

}  // namespace cayley
