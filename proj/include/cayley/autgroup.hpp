#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/linaut.hpp"

namespace cayley {

constexpr std::size_t kDefaultBruteForceCap = 512;

using VertexPerm = std::vector<std::uint32_t>;

struct Automorphism {
  VertexPerm perm;
  std::optional<bool> is_linear;
  std::optional<SignedPermutation> matrix_witness;
};

struct AutGroup {
  std::vector<Automorphism> generators;  // translations + full stabilizer of 0
  Int order;
  Int stabilizer0_order;
  std::vector<VertexPerm> stabilizer0;  // every automorphism fixing vertex 0
};

// -- generic engine on adjacency lists (also used by test oracles) --

/// All automorphisms of a connected (multi)graph fixing `base`. With
/// max_count > 0 the enumeration stops after that many elements (twin-heavy
/// graphs can have stabilizers far too large to list).
std::vector<VertexPerm> stabilizer_perms(const AdjList& adj, std::uint32_t base,
                                         std::size_t max_count = 0);

/// An isomorphism a -> b with f(ra) = rb, if one exists. Both graphs must be
/// connected.
std::optional<VertexPerm> rooted_isomorphism(const AdjList& a, const AdjList& b,
                                             std::uint32_t ra, std::uint32_t rb);

bool is_adjacency_preserving(const AdjList& adj, const VertexPerm& perm);

/// An automorphism satisfying every prescribed image pin, if one exists.
std::optional<VertexPerm> pinned_automorphism(
    const AdjList& adj, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pins);

// -- Cayley graph front ends --

constexpr std::size_t kDefaultStabilizerBudget = 100000;

/// Throws TooLarge when the vertex stabilizer exceeds `stab_budget` elements
/// (its order can be exponential in |V| for twin-heavy graphs).
AutGroup automorphism_group(const CayleyGraph& g, std::size_t cap = kDefaultBruteForceCap,
                            std::size_t stab_budget = kDefaultStabilizerBudget);

struct EdgeTransitivity {
  bool transitive = false;
  /// Orbit partition of the undirected edge set.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> orbits;
};
EdgeTransitivity is_edge_transitive(const CayleyGraph& g, std::size_t cap = kDefaultBruteForceCap);

/// Genuine orbit check: verifies that every translation is an automorphism
/// and that the orbit of 0 covers the vertex set.
bool is_vertex_transitive(const CayleyGraph& g, std::size_t cap = kDefaultBruteForceCap);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<VertexPerm> mapping;
};
IsomorphismResult are_isomorphic(const CayleyGraph& g1, const CayleyGraph& g2,
                                 std::size_t cap = kDefaultBruteForceCap);

struct AdamResult {
  bool isomorphic = false;
  std::optional<SignedPermutation> witness;
};
/// Group isomorphism carrying +-B_n to +-B_n: a signed permutation P with
/// hnf(P*m1) == hnf(m2).
AdamResult adam_isomorphic(const IntMatrix& m1, const IntMatrix& m2);

/// Vertex permutation induced by v -> canonical(P v).
VertexPerm linear_action(const CayleyGraph& g, const IntMatrix& p);

/// Stabilizer elements that agree with no signed-permutation action; empty
/// certifies Aut(G,0) == LAut(G,0). With max_elements > 0, stops after that
/// many nonlinear elements. Always terminates: there are at most 2^n n!
/// distinct linear actions, so either the stabilizer is that small and is
/// enumerated in full, or a nonlinear element shows up among the first
/// 2^n n! + 1 stabilizer elements found.
std::vector<Automorphism> nonlinear_stabilizer_elements(const CayleyGraph& g,
                                                        std::size_t cap = kDefaultBruteForceCap,
                                                        std::size_t max_elements = 0);

}  // namespace cayley
