#include "cayley/classify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

using nlohmann::json;

std::vector<Int> positive_divisors(const Int& n) {
  std::vector<Int> out;
  Int a = abs(n);
  if (a == 0 || a > Int("1000000000000000")) return out;
  for (Int i = 1; i * i <= a; ++i)
    if (a % i == 0) {
      out.push_back(i);
      if (i * i != a) out.push_back(a / i);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool perfect_square(const Int& x, Int& root) {
  if (x < 0) return false;
  root = sqrt(x);
  return root * root == x;
}

/// Integer solutions of x^2 + x y + y^2 == t, t > 0, deterministic order.
std::vector<std::pair<Int, Int>> norm_form_points(const Int& t) {
  std::vector<std::pair<Int, Int>> pts;
  Int q = 4 * t / 3;
  Int r = Int(sqrt(q)) + 1;
  for (Int x = -r; x <= r; ++x) {
    Int disc = 4 * t - 3 * x * x;
    Int s;
    if (!perfect_square(disc, s)) continue;
    if ((s - x) % 2 != 0 && (s + x) % 2 != 0) continue;
    if ((x + s) % 2 == 0) pts.emplace_back(x, (-x + s) / 2);
    if (s != 0 && (x - s) % 2 == 0) pts.emplace_back(x, (-x - s) / 2);
  }
  return pts;
}

/// Unimodular U with m * U == f, if one exists (requires |det f| == |det m|).
std::optional<IntMatrix> right_factor(const IntMatrix& m, const IntMatrix& f) {
  const int n = m.dim();
  IntMatrix u(n);
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    for (int i = 0; i < n; ++i) col[i] = f(i, j);
    auto x = solve_integral(m, col);
    if (!x) return std::nullopt;
    for (int i = 0; i < n; ++i) u(i, j) = (*x)[i];
  }
  if (!is_unimodular(u)) return std::nullopt;
  return u;
}

/// Tries m * U == S * F over all signed permutations S, identity first.
bool try_family_candidate(const IntMatrix& m, FamilyTag tag, const std::vector<Int>& params,
                          const std::vector<SignedPermutation>& sps, CanonicalFamily& out) {
  IntMatrix f = family_matrix(tag, params);
  if (abs(det(f)) != abs(det(m))) return false;
  for (const auto& sp : sps) {
    auto u = right_factor(m, sp.matrix() * f);
    if (!u) continue;
    out.tag = tag;
    out.parameters = params;
    out.parameters_recovered = true;
    out.witness_unimodular = std::move(*u);
    out.witness_left_sign = sp.matrix();
    return true;
  }
  return false;
}

/// Parameters read off directly when m already has the family's shape.
std::optional<std::vector<Int>> pattern_params(const IntMatrix& m, FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Dim2M1:
      if (m(0, 0) == m(1, 1) && m(0, 1) == m(1, 0)) return std::vector<Int>{m(0, 0), m(1, 0)};
      break;
    case FamilyTag::Dim2M2:
      if (m(0, 0) == m(1, 1) && m(0, 1) == -m(1, 0)) return std::vector<Int>{m(0, 0), m(1, 0)};
      break;
    case FamilyTag::Dim2M3:
      if (m(0, 0) == m(1, 0) && m(0, 1) == -m(1, 1)) return std::vector<Int>{m(0, 0), m(1, 1)};
      break;
    case FamilyTag::Dim3M1:
      if (m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2) && m(0, 1) == m(1, 2) && m(1, 2) == m(2, 0) &&
          m(0, 2) == m(1, 0) && m(1, 0) == m(2, 1))
        return std::vector<Int>{m(0, 0), m(0, 2), m(0, 1)};
      break;
    case FamilyTag::Dim3M1prime:
      if (m(0, 0) == m(1, 0) && m(1, 0) == m(2, 0) && m(1, 1) == m(0, 2) &&
          m(1, 2) == -m(0, 1) - m(0, 2) && m(2, 1) == m(1, 2) && m(2, 2) == m(0, 1))
        return std::vector<Int>{m(0, 0), m(0, 1), m(0, 2)};
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace

std::string family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::Dim2M1: return "Dim2-M1";
    case FamilyTag::Dim2M2: return "Dim2-M2";
    case FamilyTag::Dim2M3: return "Dim2-M3";
    case FamilyTag::Dim3M1: return "Dim3-M1";
    case FamilyTag::Dim3M1prime: return "Dim3-M1prime";
    default: return "None";
  }
}

IntMatrix family_matrix(FamilyTag tag, const std::vector<Int>& p) {
  IntMatrix f;
  switch (tag) {
    case FamilyTag::Dim2M1:
      f = IntMatrix(2);
      f(0, 0) = p[0]; f(0, 1) = p[1];
      f(1, 0) = p[1]; f(1, 1) = p[0];
      return f;
    case FamilyTag::Dim2M2:
      f = IntMatrix(2);
      f(0, 0) = p[0]; f(0, 1) = -p[1];
      f(1, 0) = p[1]; f(1, 1) = p[0];
      return f;
    case FamilyTag::Dim2M3:
      f = IntMatrix(2);
      f(0, 0) = p[0]; f(0, 1) = -p[1];
      f(1, 0) = p[0]; f(1, 1) = p[1];
      return f;
    case FamilyTag::Dim3M1:
      f = IntMatrix(3);
      f(0, 0) = p[0]; f(0, 1) = p[2]; f(0, 2) = p[1];
      f(1, 0) = p[1]; f(1, 1) = p[0]; f(1, 2) = p[2];
      f(2, 0) = p[2]; f(2, 1) = p[1]; f(2, 2) = p[0];
      return f;
    case FamilyTag::Dim3M1prime:
      f = IntMatrix(3);
      f(0, 0) = p[0]; f(0, 1) = p[1]; f(0, 2) = p[2];
      f(1, 0) = p[0]; f(1, 1) = p[2]; f(1, 2) = -p[1] - p[2];
      f(2, 0) = p[0]; f(2, 1) = -p[1] - p[2]; f(2, 2) = p[1];
      return f;
    default:
      throw std::logic_error("family_matrix on None");
  }
}

CanonicalFamily classify_dim2(const IntMatrix& m) {
  if (!m.square() || m.dim() != 2) throw DimensionMismatch("classify_dim2 expects n = 2");
  Int d = det(m);
  if (d == 0) throw SingularMatrix();
  CanonicalFamily res;
  LinearStabilizer stab = linear_stabilizer(m);
  if (!is_linearly_edge_transitive(m, stab).transitive) return res;

  const std::vector<FamilyTag> tags{FamilyTag::Dim2M1, FamilyTag::Dim2M2, FamilyTag::Dim2M3};
  // a matrix already in canonical shape keeps its own parameters
  for (FamilyTag tag : tags)
    if (auto p = pattern_params(m, tag)) {
      res.tag = tag;
      res.parameters = *p;
      res.parameters_recovered = true;
      res.witness_unimodular = IntMatrix::identity(2);
      res.witness_left_sign = IntMatrix::identity(2);
      return res;
    }

  std::vector<SignedPermutation> id_only{SignedPermutation::identity(2)};
  std::vector<Int> divs = positive_divisors(d);
  // M1: det = a^2 - b^2 = (a-b)(a+b)
  for (const Int& t : {d, Int(-d)})
    for (const Int& p : divs)
      for (const Int& u : {p, Int(-p)}) {
        Int v = t / u;
        if ((u + v) % 2 != 0) continue;
        std::vector<Int> params{(u + v) / 2, (v - u) / 2};
        if (try_family_candidate(m, FamilyTag::Dim2M1, params, id_only, res)) return res;
      }
  // M2: det = a^2 + b^2
  {
    Int ad = abs(d);
    for (Int aa = 0; aa * aa <= ad; ++aa) {
      Int bb;
      if (!perfect_square(ad - aa * aa, bb)) continue;
      for (const Int& a : {aa, Int(-aa)})
        for (const Int& b : {bb, Int(-bb)}) {
          if (try_family_candidate(m, FamilyTag::Dim2M2, {a, b}, id_only, res)) return res;
          if (b == 0) break;
        }
    }
  }
  // M3: det = 2ab
  if (d % 2 == 0)
    for (const Int& p : positive_divisors(d / 2))
      for (const Int& a : {p, Int(-p)})
        for (const Int& t : {d, Int(-d)})
          if (try_family_candidate(m, FamilyTag::Dim2M3, {a, t / (2 * a)}, id_only, res)) return res;

  // linearly edge-transitive yet unrecovered: classify by the stabilizer
  // member swapping the axes, leaving parameters open
  for (const auto& [sp, q] : stab.members) {
    if (sp.sigma[0] != 1) continue;
    if (sp.signs[0] * sp.signs[1] == -1) {
      res.tag = FamilyTag::Dim2M2;
      return res;
    }
    IntMatrix refl{{1, 0}, {0, -1}};
    IntMatrix swap{{0, 1}, {1, 0}};
    if (bounded_similarity_search(q, refl, 8)) {
      res.tag = FamilyTag::Dim2M1;
      return res;
    }
    if (bounded_similarity_search(q, swap, 8)) {
      res.tag = FamilyTag::Dim2M3;
      return res;
    }
  }
  res.undecided = true;
  return res;
}

CanonicalFamily classify_dim3(const IntMatrix& m) {
  if (!m.square() || m.dim() != 3) throw DimensionMismatch("classify_dim3 expects n = 3");
  Int d = det(m);
  if (d == 0) throw SingularMatrix();
  CanonicalFamily res;
  LinearStabilizer stab = linear_stabilizer(m);
  if (!is_linearly_edge_transitive(m, stab).transitive) return res;

  for (FamilyTag tag : {FamilyTag::Dim3M1, FamilyTag::Dim3M1prime})
    if (auto p = pattern_params(m, tag)) {
      res.tag = tag;
      res.parameters = *p;
      res.parameters_recovered = true;
      res.witness_unimodular = IntMatrix::identity(3);
      res.witness_left_sign = IntMatrix::identity(3);
      return res;
    }

  std::vector<SignedPermutation> sps = all_signed_permutations(3);
  // M1: det = (a+b+c)(x^2 + x y + y^2) with x = a-b, y = b-c
  for (const Int& t2 : positive_divisors(d))
    for (const Int& s : {Int(d / t2), Int(-d / t2)})
      for (const auto& [x, y] : norm_form_points(t2)) {
        if ((s + 2 * x + y) % 3 != 0) continue;
        Int a = (s + 2 * x + y) / 3;
        if (try_family_candidate(m, FamilyTag::Dim3M1, {a, a - x, a - x - y}, sps, res)) return res;
      }
  // M1': det = -3a(b^2 + b c + c^2)
  if (d % 3 == 0)
    for (const Int& p : positive_divisors(d / 3))
      for (const Int& a : {p, Int(-p)}) {
        Int t2 = -d / (3 * a);
        if (t2 <= 0) continue;
        for (const auto& [b, c] : norm_form_points(t2))
          if (try_family_candidate(m, FamilyTag::Dim3M1prime, {a, b, c}, sps, res)) return res;
      }

  // fall back to the similarity class of Q for an order-3 member
  auto w = dim3_order3_witness(m);
  if (w) {
    const IntMatrix* q = stab.q_for(*w);
    for (long long bound : {3, 8}) {
      if (bounded_similarity_search(*q, q2_matrix(), bound)) {
        res.tag = FamilyTag::Dim3M1;
        return res;
      }
      if (bounded_similarity_search(*q, q1_matrix(), bound)) {
        res.tag = FamilyTag::Dim3M1prime;
        return res;
      }
    }
  }
  res.undecided = true;
  return res;
}

FourCycleTaxonomy fourcycle_case_taxonomy(const IntMatrix& m) {
  FourCycleTaxonomy tx;
  for (auto& rel : four_cycles(m)) {
    if (rel.trivial) continue;
    tx.counts[rel.shape] += 1;
    tx.nontrivial.push_back(std::move(rel));
  }
  for (auto& [shape, cnt] : tx.counts) cnt /= 2;  // relations come in +- pairs
  if (m.dim() == 2) {
    static const std::vector<std::pair<long long, long long>> c_set{
        {4, 0}, {3, 1}, {1, 3}, {0, 4}, {3, -1}, {1, -3}, {2, 0}, {0, 2}};
    for (const auto& [k1, k2] : c_set) {
      Vec k{Int(k1), Int(k2)};
      if (auto x = solve_integral(m, k)) tx.c_members.emplace_back(k, *x);
    }
  }
  return tx;
}

ClassificationReport full_report(const IntMatrix& m, const ReportOptions& opts) {
  if (!m.square()) throw DimensionMismatch("full_report expects a square matrix");
  Int d = det(m);
  if (d == 0) throw SingularMatrix();
  const int n = m.dim();

  ClassificationReport r;
  r.matrix = m;
  r.hermite = hnf(m).h;
  r.order = abs(d);
  r.view = opts.view;
  r.taxonomy = fourcycle_case_taxonomy(m);

  {
    QuotientGroup g(m);
    std::set<Vec> images;
    for (int i = 0; i < n; ++i)
      for (int sg : {1, -1}) {
        Vec e(n);
        e[i] = sg;
        Vec s = g.smith_coords(e);
        bool zero = std::all_of(s.begin(), s.end(), [](const Int& x) { return x == 0; });
        if (zero)
          r.degenerate_generator = true;
        else
          images.insert(std::move(s));
      }
    r.degree_simple = static_cast<int>(images.size());
  }

  if (n <= 8) {
    LinearStabilizer stab = linear_stabilizer(m);
    r.laut_order = stab.order();
    LinearEdgeTransitivity let = is_linearly_edge_transitive(m, stab);
    r.linear_et = let.transitive;
    r.linear_witnesses = std::move(let.witnesses);
  }

  if (n == 2)
    r.family = classify_dim2(m);
  else if (n == 3)
    r.family = classify_dim3(m);

  if (r.order <= Int(opts.brute_force_cap)) {
    CayleyGraph g(m, opts.view, std::max(opts.enumeration_cap, opts.brute_force_cap));
    EdgeTransitivity et = is_edge_transitive(g, opts.brute_force_cap);
    r.edge_transitive = et.transitive ? TriState::True : TriState::False;
    r.edge_orbits = std::move(et.orbits);
    auto nonlin = nonlinear_stabilizer_elements(g, opts.brute_force_cap, 1);
    r.nonlinear_stab = nonlin.empty() ? TriState::False : TriState::True;
    if (!nonlin.empty()) r.nonlinear_example = std::move(nonlin.front().perm);
    try {
      AutGroup aut = automorphism_group(g, opts.brute_force_cap);
      r.aut_order = aut.order;
      r.stabilizer0_order = aut.stabilizer0_order;
    } catch (const TooLarge&) {
      // stabilizer beyond the enumeration budget; orders stay unreported
    }
  }
  return r;
}

namespace {

json jint(const Int& x) {
  if (x >= Int(std::numeric_limits<std::int64_t>::min()) &&
      x <= Int(std::numeric_limits<std::int64_t>::max()))
    return x.convert_to<std::int64_t>();
  return x.str();
}

json jvec(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(jint(x));
  return a;
}

json jmat(const IntMatrix& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(jint(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

json jtri(TriState t) {
  if (t == TriState::Unknown) return nullptr;
  return t == TriState::True;
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  json j;
  j["matrix"] = jmat(r.matrix);
  j["hnf"] = jmat(r.hermite);
  j["order"] = jint(r.order);
  j["degree"] = r.degree_simple;
  j["degenerate_generator"] = r.degenerate_generator;
  j["view"] = r.view == GraphView::Simple ? "simple" : "multi";

  json fc;
  std::size_t total = 0;
  json shapes = json::object();
  for (const auto& [shape, cnt] : r.taxonomy.counts) {
    shapes[shape_name(shape)] = cnt;
    total += cnt;
  }
  fc["nontrivial_count"] = total;
  fc["shapes"] = std::move(shapes);
  json rels = json::array();
  for (const auto& rel : r.taxonomy.nontrivial) {
    json e;
    json terms = json::array();
    for (const auto& t : rel.terms) terms.push_back(t.sign * (t.axis + 1));
    e["terms"] = std::move(terms);
    e["coeffs"] = jvec(rel.coeffs);
    e["shape"] = shape_name(rel.shape);
    rels.push_back(std::move(e));
  }
  fc["relations"] = std::move(rels);
  if (r.matrix.dim() == 2) {
    json cm = json::array();
    for (const auto& [col, x] : r.taxonomy.c_members)
      cm.push_back(json{{"column", jvec(col)}, {"x", jvec(x)}});
    fc["c_members"] = std::move(cm);
  }
  j["four_cycles"] = std::move(fc);

  j["laut_order"] = r.laut_order;
  j["linear_et"] = r.linear_et;
  j["edge_transitive"] = jtri(r.edge_transitive);
  j["nonlinear_stab"] = jtri(r.nonlinear_stab);

  if (r.family.tag == FamilyTag::None) {
    j["family"] = nullptr;
    j["params"] = nullptr;
  } else {
    j["family"] = family_name(r.family.tag);
    j["params"] = r.family.parameters_recovered ? jvec(r.family.parameters) : json(nullptr);
  }

  json certs;
  json lw = json::array();
  for (const auto& w : r.linear_witnesses)
    lw.push_back(w ? jmat(w->matrix()) : json(nullptr));
  certs["linear_witnesses"] = std::move(lw);
  if (r.family.witness_unimodular) {
    certs["family_witness"] = json{{"u", jmat(*r.family.witness_unimodular)},
                                   {"left_sign", jmat(*r.family.witness_left_sign)}};
  }
  if (r.family.tag != FamilyTag::None || r.matrix.dim() == 2 || r.matrix.dim() == 3)
    certs["family_undecided"] = r.family.undecided;
  if (r.aut_order) {
    certs["aut_order"] = jint(*r.aut_order);
    certs["stabilizer0_order"] = jint(*r.stabilizer0_order);
  }
  if (r.nonlinear_example) certs["nonlinear_example"] = *r.nonlinear_example;
  if (r.edge_orbits) {
    json orbits = json::array();
    for (const auto& orbit : *r.edge_orbits) {
      json o = json::array();
      for (const auto& [u, v] : orbit) o.push_back(json::array({u, v}));
      orbits.push_back(std::move(o));
    }
    certs["edge_orbits"] = std::move(orbits);
  }
  j["certificates"] = std::move(certs);
  return j.dump();
}

std::vector<IntMatrix> enumerate_hnf_classes(int dim, long long det_max) {
  if (dim != 2 && dim != 3) throw DimensionMismatch("scan supports dimensions 2 and 3");
  if (det_max < 1) return {};
  std::vector<IntMatrix> out;
  if (dim == 2) {
    for (long long d1 = 1; d1 <= det_max; ++d1)
      for (long long d2 = 1; d1 * d2 <= det_max; ++d2)
        for (long long b = 0; b < d2; ++b) {
          IntMatrix m(2);
          m(0, 0) = d1;
          m(1, 0) = b;
          m(1, 1) = d2;
          out.push_back(std::move(m));
        }
  } else {
    for (long long d1 = 1; d1 <= det_max; ++d1)
      for (long long d2 = 1; d1 * d2 <= det_max; ++d2)
        for (long long d3 = 1; d1 * d2 * d3 <= det_max; ++d3)
          for (long long b21 = 0; b21 < d2; ++b21)
            for (long long b31 = 0; b31 < d3; ++b31)
              for (long long b32 = 0; b32 < d3; ++b32) {
                IntMatrix m(3);
                m(0, 0) = d1;
                m(1, 0) = b21;
                m(1, 1) = d2;
                m(2, 0) = b31;
                m(2, 1) = b32;
                m(2, 2) = d3;
                out.push_back(std::move(m));
              }
  }
  return out;
}

void scan(int dim, long long det_max, const ReportOptions& opts, int jobs,
          const std::function<void(std::size_t, const ClassificationReport&)>& sink) {
  std::vector<IntMatrix> classes = enumerate_hnf_classes(dim, det_max);
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, 32);

  std::vector<std::unique_ptr<ClassificationReport>> results(classes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;  // guards error, drain position, and the sink
  std::size_t drained = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= classes.size()) return;
      try {
        auto rep = std::make_unique<ClassificationReport>(full_report(classes[i], opts));
        std::lock_guard lock(mu);
        results[i] = std::move(rep);
        // drain completed prefix in enumeration order, freeing as we go
        while (drained < results.size() && results[drained]) {
          sink(drained, *results[drained]);
          results[drained].reset();
          ++drained;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cayley
