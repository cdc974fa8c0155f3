#pragma once

#include <optional>
#include <vector>

#include "cayley/normalform.hpp"

namespace cayley {

/// Element of the hyperoctahedral group: v_j -> signs[j] * e_{sigma[j]}.
struct SignedPermutation {
  std::vector<int> sigma;  // image axis of e_j
  std::vector<int> signs;  // sign applied to e_j

  int dim() const { return static_cast<int>(sigma.size()); }
  IntMatrix matrix() const;
  static std::optional<SignedPermutation> from_matrix(const IntMatrix& p);
  static SignedPermutation identity(int n);

  SignedPermutation compose(const SignedPermutation& o) const;  // this after o
  SignedPermutation inverse() const;
  int order() const;
  bool operator==(const SignedPermutation&) const = default;
};

/// All 2^n n! signed permutations, in a fixed deterministic order.
std::vector<SignedPermutation> all_signed_permutations(int n);

struct LinearStabilizer {
  std::vector<std::pair<SignedPermutation, IntMatrix>> members;  // P with its Q
  std::size_t order() const { return members.size(); }
  const IntMatrix* q_for(const SignedPermutation& p) const;
};

/// All signed permutations P with M^-1 P M integral (so P M = M Q).
LinearStabilizer linear_stabilizer(const IntMatrix& m);

struct LinearEdgeTransitivity {
  bool transitive = false;
  /// witnesses[i]: a member mapping e_1 to +-e_{i+1}, when found.
  std::vector<std::optional<SignedPermutation>> witnesses;
};
LinearEdgeTransitivity is_linearly_edge_transitive(const IntMatrix& m);
LinearEdgeTransitivity is_linearly_edge_transitive(const IntMatrix& m, const LinearStabilizer& stab);

/// n = 3 only: an order-3 signed permutation in the linear stabilizer, if any.
std::optional<SignedPermutation> dim3_order3_witness(const IntMatrix& m);

/// a*u == u*b with u unimodular.
bool similarity_witness_check(const IntMatrix& a, const IntMatrix& b, const IntMatrix& u);

/// Unimodular U with A*U == U*B and |entries| <= bound, searched through the
/// integer solution lattice of the Sylvester system; nullopt means undecided
/// (never a non-similarity claim).
std::optional<IntMatrix> bounded_similarity_search(const IntMatrix& a, const IntMatrix& b,
                                                   long long bound = 3);

/// Characteristic polynomial coefficients of a 3x3 matrix:
/// lambda^3 + c[2] lambda^2 + c[1] lambda + c[0].
std::vector<Int> char_poly_3(const IntMatrix& p);

// Reference order-3 signed permutations and the two similarity-class representatives.
IntMatrix p1_matrix();
IntMatrix p2_matrix();
IntMatrix p3_matrix();
IntMatrix p4_matrix();
IntMatrix q1_matrix();
IntMatrix q2_matrix();

}  // namespace cayley
