#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cayley/abelian.hpp"

namespace cayley {

enum class GraphView { Simple, Multigraph };

enum class CycleShape { FourA, ThreeAB, TwoATwoB, Mixed, MixedTrivial };
std::string shape_name(CycleShape s);

/// A generator term: sign * e_axis.
struct GenTerm {
  int axis = 0;
  int sign = 1;
  bool operator==(const GenTerm&) const = default;
};

/// a+b+c+d == 0 (mod M) with the four terms from +-B_n.
struct FourCycleRelation {
  std::vector<GenTerm> terms;  // size 4
  Vec coeffs;                  // per-axis sums, sum |c_i| <= 4
  bool trivial = false;
  CycleShape shape = CycleShape::MixedTrivial;
};

/// Neighbor with edge multiplicity (1 in the simple view).
using AdjList = std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;

class CayleyGraph {
 public:
  CayleyGraph(IntMatrix m, GraphView view, std::size_t cap = kDefaultEnumerationCap);

  const QuotientGroup& group() const { return *group_; }
  GraphView view() const { return view_; }
  int dim() const { return group_->dim(); }
  std::size_t num_vertices() const { return adj_.size(); }
  int degree_simple() const { return degree_simple_; }
  bool degenerate_generator() const { return degenerate_generator_; }
  const AdjList& adjacency() const { return adj_; }

  /// Vertex index of sign*e_axis (axis 0-based).
  std::uint32_t generator_image(int axis, int sign) const;
  /// Vertex index of canonical(v).
  std::uint32_t vertex(const Vec& v) const { return static_cast<std::uint32_t>(group_->index_of(v)); }
  Vec coords(std::uint32_t idx) const { return group_->coords_of_index(idx); }
  /// v + sign*e_axis as a vertex index.
  std::uint32_t step(std::uint32_t v, int axis, int sign) const;

  std::uint32_t multiplicity(std::uint32_t u, std::uint32_t v) const;
  std::set<std::uint32_t> common_neighborhood(const std::vector<std::uint32_t>& vs) const;

  /// Edge list dump `u v gen`, vertices as canonical coordinate tuples and
  /// gen as +-(axis+1).
  std::string dump_edges() const;

 private:
  std::shared_ptr<QuotientGroup> group_;
  GraphView view_;
  AdjList adj_;
  int degree_simple_ = 0;
  bool degenerate_generator_ = false;
  std::vector<Vec> gen_smith_;  // smith coords of +e_i, i = 0..n-1
};

std::vector<FourCycleRelation> four_cycles(const IntMatrix& m);
bool has_nontrivial_4cycles(const IntMatrix& m);
/// Nontrivial relations counted once per {relation, negated relation} pair.
std::size_t nontrivial_4cycle_count_up_to_negation(const std::vector<FourCycleRelation>& rels);

}  // namespace cayley
