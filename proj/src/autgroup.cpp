#include "cayley/autgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

std::uint32_t adj_mult(const AdjList& adj, std::uint32_t u, std::uint32_t v) {
  for (const auto& [w, m] : adj[u])
    if (w == v) return m;
  return 0;
}

struct SearchOrder {
  std::vector<std::uint32_t> order;   // BFS order, order[0] = root
  std::vector<std::int64_t> parent;   // parent[v] in BFS tree, -1 for root
};

SearchOrder bfs_order(const AdjList& adj, std::uint32_t root) {
  SearchOrder so;
  so.parent.assign(adj.size(), -2);
  so.order.reserve(adj.size());
  so.order.push_back(root);
  so.parent[root] = -1;
  for (std::size_t head = 0; head < so.order.size(); ++head) {
    std::uint32_t u = so.order[head];
    for (const auto& [w, m] : adj[u])
      if (so.parent[w] == -2) {
        so.parent[w] = u;
        so.order.push_back(w);
      }
  }
  return so;
}

// Backtracking extension of a partial rooted map along BFS order. Calls
// `emit` for every complete isomorphism; emit returning false stops the
// search.
template <typename Emit>
void extend(const AdjList& a, const AdjList& b, const SearchOrder& so, std::size_t depth,
            VertexPerm& map, std::vector<std::int64_t>& inv, Emit&& emit, bool& stop) {
  if (stop) return;
  if (depth == so.order.size()) {
    if (!emit(map)) stop = true;
    return;
  }
  std::uint32_t u = so.order[depth];
  auto consistent = [&](std::uint32_t cand) {
    // consistency with every already-mapped neighbor of u, both directions
    for (const auto& [q, mq] : a[u]) {
      if (map[q] == UINT32_MAX || q == u) continue;
      if (adj_mult(b, cand, map[q]) != mq) return false;
    }
    for (const auto& [w, mw] : b[cand]) {
      if (inv[w] < 0 || static_cast<std::uint32_t>(inv[w]) == u) continue;
      if (adj_mult(a, u, static_cast<std::uint32_t>(inv[w])) != mw) return false;
    }
    return true;
  };
  if (map[u] != UINT32_MAX) {  // pinned in advance
    if (consistent(map[u])) extend(a, b, so, depth + 1, map, inv, emit, stop);
    return;
  }
  std::uint32_t p = static_cast<std::uint32_t>(so.parent[u]);
  std::uint32_t fp = map[p];
  std::uint32_t need = adj_mult(a, p, u);
  for (const auto& [cand, m] : b[fp]) {
    if (m != need || inv[cand] >= 0) continue;
    if (!consistent(cand)) continue;
    map[u] = cand;
    inv[cand] = u;
    extend(a, b, so, depth + 1, map, inv, emit, stop);
    map[u] = UINT32_MAX;
    inv[cand] = -1;
    if (stop) return;
  }
}

using PinList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

template <typename Emit>
void rooted_search(const AdjList& a, const AdjList& b, std::uint32_t ra, std::uint32_t rb,
                   Emit&& emit, const PinList& pins = {}) {
  if (a.size() != b.size()) return;
  if (a[ra].size() != b[rb].size()) return;
  SearchOrder so = bfs_order(a, ra);
  if (so.order.size() != a.size()) return;  // disconnected; not expected here
  VertexPerm map(a.size(), UINT32_MAX);
  std::vector<std::int64_t> inv(b.size(), -1);
  map[ra] = rb;
  inv[rb] = ra;
  for (const auto& [v, img] : pins) {
    if (map[v] != UINT32_MAX || inv[img] >= 0) {
      if (map[v] != img) return;  // conflicting pins
      continue;
    }
    if (a[v].size() != b[img].size()) return;
    map[v] = img;
    inv[img] = v;
  }
  bool stop = false;
  extend(a, b, so, 1, map, inv, emit, stop);
}

}  // namespace

std::vector<VertexPerm> stabilizer_perms(const AdjList& adj, std::uint32_t base,
                                         std::size_t max_count) {
  std::vector<VertexPerm> out;
  if (adj.empty()) return out;
  if (adj.size() == 1) return {VertexPerm{0}};
  rooted_search(adj, adj, base, base, [&](const VertexPerm& p) {
    out.push_back(p);
    return max_count == 0 || out.size() < max_count;
  });
  return out;
}

std::optional<VertexPerm> pinned_automorphism(
    const AdjList& adj, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pins) {
  if (adj.empty()) return std::nullopt;
  if (adj.size() == 1) return VertexPerm{0};
  std::uint32_t ra = 0, rb = 0;
  PinList rest;
  bool have_root = false;
  for (const auto& [v, img] : pins) {
    if (!have_root) {
      ra = v;
      rb = img;
      have_root = true;
    } else {
      rest.emplace_back(v, img);
    }
  }
  std::optional<VertexPerm> found;
  rooted_search(adj, adj, ra, rb,
                [&](const VertexPerm& p) {
                  found = p;
                  return false;
                },
                rest);
  return found;
}

std::optional<VertexPerm> rooted_isomorphism(const AdjList& a, const AdjList& b,
                                             std::uint32_t ra, std::uint32_t rb) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 1) return VertexPerm{rb};
  std::optional<VertexPerm> found;
  rooted_search(a, b, ra, rb, [&](const VertexPerm& p) {
    found = p;
    return false;
  });
  return found;
}

bool is_adjacency_preserving(const AdjList& adj, const VertexPerm& perm) {
  for (std::uint32_t u = 0; u < adj.size(); ++u)
    for (const auto& [w, m] : adj[u])
      if (adj_mult(adj, perm[u], perm[w]) != m) return false;
  return true;
}

namespace {

std::vector<VertexPerm> translation_perms(const CayleyGraph& g) {
  std::vector<VertexPerm> ts;
  const std::size_t nv = g.num_vertices();
  for (int i = 0; i < g.dim(); ++i) {
    VertexPerm t(nv);
    for (std::uint32_t v = 0; v < nv; ++v) t[v] = g.step(v, i, 1);
    ts.push_back(std::move(t));
  }
  return ts;
}

void check_cap(const CayleyGraph& g, std::size_t cap) {
  if (g.num_vertices() > cap) throw TooLarge("graph exceeds brute-force cap");
}

}  // namespace

AutGroup automorphism_group(const CayleyGraph& g, std::size_t cap, std::size_t stab_budget) {
  check_cap(g, cap);
  AutGroup res;
  res.stabilizer0 = stabilizer_perms(g.adjacency(), 0, stab_budget + 1);
  if (stab_budget > 0 && res.stabilizer0.size() > stab_budget)
    throw TooLarge("vertex stabilizer exceeds enumeration budget");
  res.stabilizer0_order = Int(res.stabilizer0.size());
  res.order = Int(g.num_vertices()) * res.stabilizer0_order;

  for (auto& t : translation_perms(g)) {
    if (!is_adjacency_preserving(g.adjacency(), t))
      throw std::logic_error("translation failed adjacency check");
    res.generators.push_back(Automorphism{std::move(t), std::nullopt, std::nullopt});
  }
  for (const auto& s : res.stabilizer0)
    res.generators.push_back(Automorphism{s, std::nullopt, std::nullopt});
  return res;
}

EdgeTransitivity is_edge_transitive(const CayleyGraph& g, std::size_t cap) {
  check_cap(g, cap);
  const auto& adj = g.adjacency();
  const std::size_t nv = g.num_vertices();

  EdgeTransitivity res;
  if (adj.empty() || adj[0].empty()) {
    res.transitive = true;
    return res;
  }

  // The graph is vertex-transitive, so every edge is a translate of an edge
  // at vertex 0, and the orbit partition is decided on the incident edges
  // {0, w}: two of them lie in one Aut orbit iff a pinned automorphism maps
  // one onto the other. This avoids materializing the stabilizer, which can
  // be exponentially large on twin-heavy graphs.
  std::vector<std::uint32_t> incident;
  for (const auto& [w, m] : adj[0]) incident.push_back(w);
  const std::size_t k = incident.size();

  // translation sending w to 0 maps {0, w} to {-w + 0, 0} = {0, neg(w)}
  auto negate = [&](std::uint32_t w) { return g.vertex(neg(g.coords(w))); };

  std::vector<std::size_t> cls(k);
  for (std::size_t i = 0; i < k; ++i) cls[i] = i;
  auto find = [&](std::size_t i) {
    while (cls[i] != i) i = cls[i] = cls[cls[i]];
    return i;
  };
  auto unite = [&](std::size_t i, std::size_t j) { cls[find(i)] = find(j); };
  auto slot = [&](std::uint32_t w) {
    for (std::size_t i = 0; i < k; ++i)
      if (incident[i] == w) return i;
    return k;  // unreachable for valid input
  };

  for (std::size_t i = 0; i < k; ++i) unite(i, slot(negate(incident[i])));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (find(i) == find(j)) continue;
      // f(0)=0, f(a)=b, or f(0)=b, f(a)=0
      if (pinned_automorphism(adj, {{0, 0}, {incident[i], incident[j]}}) ||
          pinned_automorphism(adj, {{0, incident[j]}, {incident[i], 0}}))
        unite(i, j);
    }

  std::map<std::size_t, std::size_t> orbit_index;
  for (std::size_t i = 0; i < k; ++i)
    if (!orbit_index.count(find(i))) {
      orbit_index[find(i)] = res.orbits.size();
      res.orbits.emplace_back();
    }
  for (std::uint32_t u = 0; u < nv; ++u)
    for (const auto& [w, m] : adj[u])
      if (u < w) {
        // translate {u, w} back to the incident edge {0, w - u}
        std::uint32_t d = g.vertex(sub(g.coords(w), g.coords(u)));
        res.orbits[orbit_index[find(slot(d))]].emplace_back(u, w);
      }
  res.transitive = res.orbits.size() == 1;
  return res;
}

bool is_vertex_transitive(const CayleyGraph& g, std::size_t cap) {
  check_cap(g, cap);
  std::vector<VertexPerm> ts = translation_perms(g);
  for (const auto& t : ts)
    if (!is_adjacency_preserving(g.adjacency(), t)) return false;
  // orbit of 0 under translations
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::uint32_t v = queue.back();
    queue.pop_back();
    // forward closure is enough: each translation has finite order
    for (const auto& t : ts) {
      std::uint32_t w = t[v];
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

IsomorphismResult are_isomorphic(const CayleyGraph& g1, const CayleyGraph& g2, std::size_t cap) {
  check_cap(g1, cap);
  check_cap(g2, cap);
  IsomorphismResult res;
  if (g1.num_vertices() != g2.num_vertices()) return res;
  if (g1.num_vertices() == 1) {
    res.isomorphic = true;
    res.mapping = VertexPerm{0};
    return res;
  }
  // Both graphs are Cayley, hence vertex-transitive: if any isomorphism
  // exists, one exists with f(0) = 0.
  auto m = rooted_isomorphism(g1.adjacency(), g2.adjacency(), 0, 0);
  if (m) {
    res.isomorphic = true;
    res.mapping = std::move(m);
  }
  return res;
}

AdamResult adam_isomorphic(const IntMatrix& m1, const IntMatrix& m2) {
  if (!m1.square() || !m2.square() || m1.dim() != m2.dim())
    throw DimensionMismatch("adam_isomorphic shape");
  AdamResult res;
  if (abs(det(m1)) != abs(det(m2))) return res;
  IntMatrix h2 = hnf(m2).h;
  for (const auto& sp : all_signed_permutations(m1.dim())) {
    if (hnf(sp.matrix() * m1).h == h2) {
      res.isomorphic = true;
      res.witness = sp;
      return res;
    }
  }
  return res;
}

VertexPerm linear_action(const CayleyGraph& g, const IntMatrix& p) {
  VertexPerm perm(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) perm[v] = g.vertex(p * g.coords(v));
  return perm;
}

std::vector<Automorphism> nonlinear_stabilizer_elements(const CayleyGraph& g, std::size_t cap,
                                                        std::size_t max_elements) {
  check_cap(g, cap);

  LinearStabilizer lstab = linear_stabilizer(g.group().matrix());
  std::set<VertexPerm> linear_perms_set;
  for (const auto& [sp, q] : lstab.members) linear_perms_set.insert(linear_action(g, sp.matrix()));

  // Lazy enumeration. If every stabilizer element is linear the stabilizer
  // has at most |linear_perms_set| elements and the search finishes; if not,
  // a nonlinear element appears among the first |linear_perms_set| + 1
  // distinct elements found, so the bounded variant stops early even on
  // graphs with astronomically large stabilizers.
  std::vector<Automorphism> out;
  if (g.num_vertices() == 1) return out;
  rooted_search(g.adjacency(), g.adjacency(), 0, 0, [&](const VertexPerm& p) {
    if (!linear_perms_set.count(p)) out.push_back(Automorphism{p, false, std::nullopt});
    return max_elements == 0 || out.size() < max_elements;
  });
  return out;
}

}  // namespace cayley
