#include "cayley/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

std::string shape_name(CycleShape s) {
  switch (s) {
    case CycleShape::FourA: return "4a";
    case CycleShape::ThreeAB: return "3a+b";
    case CycleShape::TwoATwoB: return "2a+2b";
    case CycleShape::Mixed: return "mixed";
    case CycleShape::MixedTrivial: return "mixed-trivial";
  }
  return "?";
}

CayleyGraph::CayleyGraph(IntMatrix m, GraphView view, std::size_t cap)
    : group_(std::make_shared<QuotientGroup>(std::move(m))), view_(view) {
  if (group_->order() > Int(cap)) throw TooLarge("graph order exceeds cap");
  const int n = group_->dim();
  const std::size_t nv = static_cast<std::size_t>(group_->order());

  gen_smith_.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    gen_smith_.push_back(group_->smith_coords(e));
  }

  adj_.assign(nv, {});
  const auto& d = group_->smith().d;
  for (std::size_t v = 0; v < nv; ++v) {
    Vec s = group_->smith_of_index(v);
    std::map<std::uint32_t, std::uint32_t> nbrs;
    for (int i = 0; i < n; ++i) {
      for (int sign : {1, -1}) {
        Vec t(n);
        for (int c = 0; c < n; ++c) t[c] = floor_mod(s[c] + sign * gen_smith_[i][c], d[c]);
        std::size_t w = group_->index_of_smith(t);
        if (w == v) {
          // e_i == 0: degenerate generator, contributes no edge
          if (v == 0) degenerate_generator_ = true;
          continue;
        }
        nbrs[static_cast<std::uint32_t>(w)] += 1;
      }
    }
    auto& row = adj_[v];
    row.reserve(nbrs.size());
    for (auto& [w, mult] : nbrs) row.emplace_back(w, view_ == GraphView::Simple ? 1u : mult);
  }
  degree_simple_ = adj_.empty() ? 0 : static_cast<int>(adj_[0].size());
}

std::uint32_t CayleyGraph::generator_image(int axis, int sign) const {
  const int n = group_->dim();
  Vec e(n);
  e[axis] = sign;
  return static_cast<std::uint32_t>(group_->index_of(e));
}

std::uint32_t CayleyGraph::step(std::uint32_t v, int axis, int sign) const {
  const int n = group_->dim();
  const auto& d = group_->smith().d;
  Vec s = group_->smith_of_index(v);
  for (int c = 0; c < n; ++c) s[c] = floor_mod(s[c] + sign * gen_smith_[axis][c], d[c]);
  return static_cast<std::uint32_t>(group_->index_of_smith(s));
}

std::uint32_t CayleyGraph::multiplicity(std::uint32_t u, std::uint32_t v) const {
  for (const auto& [w, mult] : adj_[u])
    if (w == v) return mult;
  return 0;
}

std::set<std::uint32_t> CayleyGraph::common_neighborhood(const std::vector<std::uint32_t>& vs) const {
  std::set<std::uint32_t> acc;
  bool first = true;
  for (auto v : vs) {
    std::set<std::uint32_t> cur;
    for (const auto& [w, mult] : adj_[v]) cur.insert(w);
    if (first) {
      acc = std::move(cur);
      first = false;
    } else {
      std::set<std::uint32_t> inter;
      std::set_intersection(acc.begin(), acc.end(), cur.begin(), cur.end(),
                            std::inserter(inter, inter.begin()));
      acc = std::move(inter);
    }
  }
  return acc;
}

std::string CayleyGraph::dump_edges() const {
  std::ostringstream os;
  const int n = dim();
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    for (int i = 0; i < n; ++i) {
      for (int sign : {1, -1}) {
        std::uint32_t w = step(static_cast<std::uint32_t>(v), i, sign);
        if (w == v) continue;
        if (w < v) continue;  // one direction per edge
        os << '(' << vec_str(coords(static_cast<std::uint32_t>(v))) << ") ("
           << vec_str(coords(w)) << ") " << (sign > 0 ? "+" : "-") << (i + 1) << '\n';
      }
    }
  }
  return os.str();
}

namespace {

CycleShape classify_shape(const std::vector<GenTerm>& terms, bool trivial) {
  if (trivial) return CycleShape::MixedTrivial;
  std::map<std::pair<int, int>, int> mult;
  for (const auto& t : terms) mult[{t.axis, t.sign}] += 1;
  std::vector<int> pattern;
  for (auto& [k, c] : mult) pattern.push_back(c);
  std::sort(pattern.rbegin(), pattern.rend());
  if (pattern == std::vector<int>{4}) return CycleShape::FourA;
  if (pattern == std::vector<int>{3, 1}) return CycleShape::ThreeAB;
  if (pattern == std::vector<int>{2, 2}) return CycleShape::TwoATwoB;
  return CycleShape::Mixed;
}

}  // namespace

std::vector<FourCycleRelation> four_cycles(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("four_cycles expects square matrix");
  if (det(m) == 0) throw SingularMatrix();
  const int n = m.dim();

  std::vector<GenTerm> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back({i, 1});
    gens.push_back({i, -1});
  }
  const int g = static_cast<int>(gens.size());

  std::vector<FourCycleRelation> out;
  for (int a = 0; a < g; ++a)
    for (int b = a; b < g; ++b)
      for (int c = b; c < g; ++c)
        for (int e = c; e < g; ++e) {
          std::vector<GenTerm> terms{gens[a], gens[b], gens[c], gens[e]};
          Vec sum(n);
          for (const auto& t : terms) sum[t.axis] += t.sign;
          if (!solve_integral(m, sum)) continue;
          bool trivial = false;
          for (int i = 0; i < 4 && !trivial; ++i)
            for (int j = i + 1; j < 4 && !trivial; ++j)
              if (terms[i].axis == terms[j].axis && terms[i].sign == -terms[j].sign) trivial = true;
          FourCycleRelation rel;
          rel.terms = std::move(terms);
          rel.coeffs = std::move(sum);
          rel.trivial = trivial;
          rel.shape = classify_shape(rel.terms, trivial);
          out.push_back(std::move(rel));
        }
  return out;
}

bool has_nontrivial_4cycles(const IntMatrix& m) {
  for (const auto& rel : four_cycles(m))
    if (!rel.trivial) return true;
  return false;
}

std::size_t nontrivial_4cycle_count_up_to_negation(const std::vector<FourCycleRelation>& rels) {
  std::size_t count = 0;
  for (const auto& rel : rels)
    if (!rel.trivial) ++count;
  // negating all four terms maps nontrivial relations to distinct ones in pairs
  return count / 2;
}

}  // namespace cayley
