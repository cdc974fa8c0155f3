#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cayley/normalform.hpp"

namespace cayley {

constexpr std::size_t kDefaultEnumerationCap = 20000;

/// Z^n / M Z^n. Canonical representatives go through Smith coordinates:
/// smith_coords(v) = left*v mod d, and the canonical vector is the unique
/// preimage left^-1 * smith_coords(v). Vertices are indexed by the mixed-radix
/// value of the Smith tuple.
class QuotientGroup {
 public:
  explicit QuotientGroup(IntMatrix m);

  int dim() const { return m_.dim(); }
  const IntMatrix& matrix() const { return m_; }
  const SmithForm& smith() const { return smith_; }
  const Int& order() const { return order_; }

  Vec canonical(const Vec& v) const;
  bool congruent(const Vec& v, const Vec& w) const;

  /// Mixed-radix Smith tuple of v, componentwise in [0, d_i).
  Vec smith_coords(const Vec& v) const;
  std::size_t index_of(const Vec& v) const;
  std::size_t index_of_smith(const Vec& s) const;
  Vec smith_of_index(std::size_t idx) const;
  Vec coords_of_index(std::size_t idx) const;

  /// All elements as canonical vectors, in index order.
  std::vector<Vec> elements(std::size_t cap = kDefaultEnumerationCap) const;

 private:
  IntMatrix m_;
  SmithForm smith_;
  IntMatrix left_inv_;
  Int order_;
};

/// Z_{f1} x ... x Z_{fk} with n generator vectors.
struct AbstractGroupSpec {
  std::vector<Int> invariant_factors;
  std::vector<Vec> generators;

  /// Text format: `Z6 x Z2 : [3,0],[1,1]`.
  static AbstractGroupSpec parse(const std::string& text);
};

/// Inductive construction of a defining matrix M with
/// Cay(spec) isomorphic to G(M) via g_i -> e_i. Throws NotGenerating when the
/// generators span a proper subgroup.
IntMatrix matrix_from_group(const AbstractGroupSpec& spec);

}  // namespace cayley
