#include "cayley/abelian.hpp"

#include <algorithm>
#include <set>

#include "cayley/errors.hpp"

namespace cayley {

QuotientGroup::QuotientGroup(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.dim() < 1) throw DimensionMismatch("quotient matrix must be square, n >= 1");
  Int d = det(m_);
  if (d == 0) throw SingularMatrix();
  smith_ = snf(m_);
  left_inv_ = inverse_unimodular(smith_.left);
  order_ = abs(d);
}

Vec QuotientGroup::smith_coords(const Vec& v) const {
  Vec s = smith_.left * v;
  for (int i = 0; i < dim(); ++i) s[i] = floor_mod(s[i], smith_.d[i]);
  return s;
}

Vec QuotientGroup::canonical(const Vec& v) const { return left_inv_ * smith_coords(v); }

bool QuotientGroup::congruent(const Vec& v, const Vec& w) const {
  return solve_integral(m_, sub(v, w)).has_value();
}

std::size_t QuotientGroup::index_of_smith(const Vec& s) const {
  Int idx = 0;
  for (int i = dim() - 1; i >= 0; --i) idx = idx * smith_.d[i] + s[i];
  return static_cast<std::size_t>(idx);
}

std::size_t QuotientGroup::index_of(const Vec& v) const { return index_of_smith(smith_coords(v)); }

Vec QuotientGroup::smith_of_index(std::size_t idx) const {
  Vec s(dim());
  Int rest = idx;
  for (int i = 0; i < dim(); ++i) {
    s[i] = rest % smith_.d[i];
    rest /= smith_.d[i];
  }
  return s;
}

Vec QuotientGroup::coords_of_index(std::size_t idx) const { return left_inv_ * smith_of_index(idx); }

std::vector<Vec> QuotientGroup::elements(std::size_t cap) const {
  if (order_ > Int(cap)) throw TooLarge("group order exceeds enumeration cap");
  std::size_t n = static_cast<std::size_t>(order_);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(coords_of_index(i));
  return out;
}

namespace {

Vec reduce_mod_factors(const Vec& v, const std::vector<Int>& f) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = floor_mod(v[i], f[i]);
  return r;
}

std::size_t tuple_index(const Vec& v, const std::vector<Int>& f) {
  Int idx = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) idx = idx * f[i] + v[i];
  return static_cast<std::size_t>(idx);
}

Int element_order(const Vec& g, const std::vector<Int>& f) {
  Int o = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Int oi = f[i] / gcd(f[i], g[i]);
    o = lcm(o, oi);
  }
  return o;
}

}  // namespace

AbstractGroupSpec AbstractGroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("group spec needs ':' between factors and generators");
  AbstractGroupSpec spec;

  std::string head;
  for (char c : text.substr(0, colon))
    if (!std::isspace(static_cast<unsigned char>(c))) head += c;
  std::size_t pos = 0;
  while (pos < head.size()) {
    if (head[pos] == 'x' || head[pos] == 'X') {
      ++pos;
      continue;
    }
    if (head[pos] != 'Z' && head[pos] != 'z') throw ParseError("expected Z<k> factor in group spec");
    ++pos;
    std::string num;
    while (pos < head.size() && std::isdigit(static_cast<unsigned char>(head[pos]))) num += head[pos++];
    if (num.empty()) throw ParseError("missing modulus after Z in group spec");
    spec.invariant_factors.emplace_back(num);
  }
  if (spec.invariant_factors.empty()) throw ParseError("no factors in group spec");

  std::string tail;
  for (char c : text.substr(colon + 1))
    if (!std::isspace(static_cast<unsigned char>(c))) tail += c;
  pos = 0;
  while (pos < tail.size()) {
    if (tail[pos] == ',') ++pos;
    if (pos >= tail.size() || tail[pos] != '[') throw ParseError("expected '[' before generator vector");
    auto end = tail.find(']', pos);
    if (end == std::string::npos) throw ParseError("unbalanced '[' in generator list");
    std::string body = tail.substr(pos + 1, end - pos - 1);
    Vec g;
    std::string cur;
    for (char c : body + ",") {
      if (c == ',') {
        if (cur.empty()) throw ParseError("empty generator entry");
        g.emplace_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (g.size() != spec.invariant_factors.size()) throw ParseError("generator length does not match factor count");
    spec.generators.push_back(std::move(g));
    pos = end + 1;
  }
  if (spec.generators.empty()) throw ParseError("no generators in group spec");
  for (auto& g : spec.generators) g = reduce_mod_factors(g, spec.invariant_factors);
  return spec;
}

IntMatrix matrix_from_group(const AbstractGroupSpec& spec) {
  const auto& f = spec.invariant_factors;
  for (const auto& fi : f)
    if (fi < 1) throw ParseError("invariant factors must be positive");
  Int gamma_order = 1;
  for (const auto& fi : f) gamma_order *= fi;
  if (gamma_order > Int(kDefaultEnumerationCap) * 10)
    throw TooLarge("abstract group too large for the inductive construction");

  const int n = static_cast<int>(spec.generators.size());
  IntMatrix m(n);

  // closure of the subgroup generated by the processed generators
  std::set<std::size_t> subgroup;
  std::vector<Vec> sub_elems;
  subgroup.insert(tuple_index(Vec(f.size()), f));
  sub_elems.push_back(Vec(f.size()));

  auto grow_subgroup = [&](const Vec& g) {
    std::vector<Vec> frontier = sub_elems;
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& e : frontier) {
        Vec w = reduce_mod_factors(add(e, g), f);
        if (subgroup.insert(tuple_index(w, f)).second) {
          sub_elems.push_back(w);
          next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
  };

  for (int i = 0; i < n; ++i) {
    const Vec& gi = spec.generators[i];
    if (i == 0) {
      m(0, 0) = element_order(gi, f);
      grow_subgroup(gi);
      continue;
    }
    // a = minimal positive integer with a*g_i in <g_1..g_{i-1}>
    Int a = 0;
    Vec target;
    Int o = element_order(gi, f);
    for (Int cand = 1; cand <= o; ++cand) {
      Vec w(f.size());
      for (std::size_t c = 0; c < f.size(); ++c) w[c] = floor_mod(cand * gi[c], f[c]);
      if (subgroup.count(tuple_index(w, f))) {
        a = cand;
        target = w;
        break;
      }
    }
    // o*g_i = 0 is always in the subgroup, so a is set
    // lexicographically smallest x with sum x_j g_j = a*g_i, x_j in [0, M(j,j))
    Vec x(i);
    bool found = false;
    std::vector<Int> limit(i);
    for (int j = 0; j < i; ++j) limit[j] = m(j, j);
    Vec cursor(i);
    for (;;) {
      Vec acc(f.size());
      for (int j = 0; j < i; ++j)
        for (std::size_t c = 0; c < f.size(); ++c) acc[c] += cursor[j] * spec.generators[j][c];
      if (reduce_mod_factors(acc, f) == target) {
        x = cursor;
        found = true;
        break;
      }
      int j = i - 1;
      while (j >= 0) {
        cursor[j] += 1;
        if (cursor[j] < limit[j]) break;
        cursor[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
    if (!found) throw ParseError("internal: no coefficient vector for generator relation");
    for (int j = 0; j < i; ++j) m(j, i) = x[j];
    m(i, i) = a;
    grow_subgroup(gi);
  }

  if (Int(sub_elems.size()) != gamma_order) throw NotGenerating();
  return m;
}

}  // namespace cayley
