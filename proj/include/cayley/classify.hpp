#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/autgroup.hpp"

namespace cayley {

enum class FamilyTag { None, Dim2M1, Dim2M2, Dim2M3, Dim3M1, Dim3M1prime };
std::string family_name(FamilyTag t);

/// Canonical matrix of a family at concrete parameters.
IntMatrix family_matrix(FamilyTag tag, const std::vector<Int>& params);

struct CanonicalFamily {
  FamilyTag tag = FamilyTag::None;
  std::vector<Int> parameters;
  bool parameters_recovered = false;
  /// m * witness_unimodular == witness_left_sign * family_matrix(parameters).
  /// witness_left_sign is the identity in dimension 2.
  std::optional<IntMatrix> witness_unimodular;
  std::optional<IntMatrix> witness_left_sign;
  /// dim-3 only: both Q-class searches exhausted their bound.
  bool undecided = false;
};

CanonicalFamily classify_dim2(const IntMatrix& m);
CanonicalFamily classify_dim3(const IntMatrix& m);

struct FourCycleTaxonomy {
  std::vector<FourCycleRelation> nontrivial;  // full list (closed under negation)
  std::map<CycleShape, std::size_t> counts;   // nontrivial, up to negation
  /// n = 2 only: members of the 4-cycle coefficient column set lying in M Z^2, with the
  /// solving x as certificate.
  std::vector<std::pair<Vec, Vec>> c_members;
};
FourCycleTaxonomy fourcycle_case_taxonomy(const IntMatrix& m);

enum class TriState { False, True, Unknown };

struct ReportOptions {
  std::size_t brute_force_cap = kDefaultBruteForceCap;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  GraphView view = GraphView::Simple;
};

struct ClassificationReport {
  IntMatrix matrix;
  IntMatrix hermite;
  Int order;
  int degree_simple = 0;
  bool degenerate_generator = false;
  GraphView view = GraphView::Simple;
  FourCycleTaxonomy taxonomy;
  std::size_t laut_order = 0;
  bool linear_et = false;
  std::vector<std::optional<SignedPermutation>> linear_witnesses;
  TriState edge_transitive = TriState::Unknown;
  TriState nonlinear_stab = TriState::Unknown;
  CanonicalFamily family;
  // certificates from the brute-force oracle, when within cap
  std::optional<Int> aut_order;
  std::optional<Int> stabilizer0_order;
  std::optional<VertexPerm> nonlinear_example;
  std::optional<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> edge_orbits;
};

ClassificationReport full_report(const IntMatrix& m, const ReportOptions& opts = {});

std::string report_to_json(const ClassificationReport& r);

/// One column-Hermite representative per right-equivalence class with
/// 1 <= det <= det_max.
std::vector<IntMatrix> enumerate_hnf_classes(int dim, long long det_max);

/// Classify every HNF class; `sink` is called in deterministic enumeration
/// order regardless of job count.
void scan(int dim, long long det_max, const ReportOptions& opts, int jobs,
          const std::function<void(std::size_t, const ClassificationReport&)>& sink);

}  // namespace cayley
