#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <random>
#include <set>

#include "cayley/classify.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

namespace {

void check_family_witness(const IntMatrix& m, const CanonicalFamily& f) {
  REQUIRE(f.witness_unimodular.has_value());
  REQUIRE(f.witness_left_sign.has_value());
  CHECK(is_unimodular(*f.witness_unimodular));
  CHECK(m * *f.witness_unimodular ==
        *f.witness_left_sign * family_matrix(f.tag, f.parameters));
}

}  // namespace

TEST_CASE("family canonical matrices") {
  CHECK(family_matrix(FamilyTag::Dim2M1, {Int(3), Int(1)}) == IntMatrix{{3, 1}, {1, 3}});
  CHECK(family_matrix(FamilyTag::Dim2M2, {Int(3), Int(1)}) == IntMatrix{{3, -1}, {1, 3}});
  CHECK(family_matrix(FamilyTag::Dim2M3, {Int(2), Int(3)}) == IntMatrix{{2, -3}, {2, 3}});
  CHECK(family_matrix(FamilyTag::Dim3M1, {Int(2), Int(1), Int(0)}) ==
        IntMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}});
  CHECK(family_matrix(FamilyTag::Dim3M1prime, {Int(1), Int(1), Int(0)}) ==
        IntMatrix{{1, 1, 0}, {1, 0, -1}, {1, -1, 1}});
}

TEST_CASE("dimension 2 classification, fixed cases") {
  {
    CanonicalFamily f = classify_dim2(IntMatrix{{3, 1}, {1, 3}});
    CHECK(f.tag == FamilyTag::Dim2M1);
    CHECK(f.parameters == std::vector<Int>{3, 1});
    CHECK(*f.witness_unimodular == IntMatrix::identity(2));
    check_family_witness(IntMatrix{{3, 1}, {1, 3}}, f);
  }
  {
    CanonicalFamily f = classify_dim2(IntMatrix{{3, -1}, {1, 3}});
    CHECK(f.tag == FamilyTag::Dim2M2);
    CHECK(f.parameters == std::vector<Int>{3, 1});
  }
  {
    CanonicalFamily f = classify_dim2(IntMatrix{{2, -3}, {2, 3}});
    CHECK(f.tag == FamilyTag::Dim2M3);
    check_family_witness(IntMatrix{{2, -3}, {2, 3}}, f);
  }
  CHECK(classify_dim2(IntMatrix{{6, 0}, {0, 2}}).tag == FamilyTag::None);
  CHECK(classify_dim2(IntMatrix{{2, -1}, {0, 3}}).tag == FamilyTag::None);
  CHECK(classify_dim2(IntMatrix{{4, 3}, {0, 1}}).tag == FamilyTag::Dim2M3);  // = M3(2,1)*U
}

TEST_CASE("dimension 2 classification is right-equivalence invariant") {
  std::mt19937_64 rng(109);
  for (const IntMatrix& m :
       {IntMatrix{{3, 1}, {1, 3}}, IntMatrix{{3, -1}, {1, 3}}, IntMatrix{{2, -3}, {2, 3}},
        IntMatrix{{6, 0}, {0, 2}}}) {
    CanonicalFamily base = classify_dim2(m);
    for (int t = 0; t < 10; ++t) {
      IntMatrix mu = m * random_unimodular(rng, 2);
      CanonicalFamily f = classify_dim2(mu);
      CHECK(f.tag == base.tag);
      if (f.tag != FamilyTag::None && f.parameters_recovered) check_family_witness(mu, f);
    }
  }
}

TEST_CASE("dimension 3 classification, fixed cases") {
  {
    IntMatrix m{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}};
    CanonicalFamily f = classify_dim3(m);
    CHECK(f.tag == FamilyTag::Dim3M1);
    CHECK(f.parameters == std::vector<Int>{2, 1, 0});
    check_family_witness(m, f);
  }
  {
    IntMatrix m{{1, 1, 0}, {1, 0, -1}, {1, -1, 1}};
    CanonicalFamily f = classify_dim3(m);
    CHECK(f.tag == FamilyTag::Dim3M1prime);
    CHECK(f.parameters == std::vector<Int>{1, 1, 0});
    check_family_witness(m, f);
  }
  CHECK(classify_dim3(IntMatrix{{7, 0, 0}, {0, 3, 0}, {0, 0, 2}}).tag == FamilyTag::None);
  CHECK(classify_dim3(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}).tag != FamilyTag::None);
}

TEST_CASE("dimension 3 classification is right-equivalence invariant") {
  std::mt19937_64 rng(113);
  for (const IntMatrix& m :
       {IntMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}}, IntMatrix{{1, 1, 0}, {1, 0, -1}, {1, -1, 1}}}) {
    CanonicalFamily base = classify_dim3(m);
    for (int t = 0; t < 6; ++t) {
      IntMatrix mu = m * random_unimodular(rng, 3, 5);
      CanonicalFamily f = classify_dim3(mu);
      CHECK(f.tag == base.tag);
      if (f.parameters_recovered) check_family_witness(mu, f);
    }
  }
}

TEST_CASE("four cycle taxonomy") {
  {
    FourCycleTaxonomy t = fourcycle_case_taxonomy(IntMatrix{{4, 0}, {0, 4}});
    CHECK(t.counts.at(CycleShape::FourA) == 2);
    std::set<Vec> cols;
    for (const auto& [col, x] : t.c_members) {
      cols.insert(col);
      CHECK(IntMatrix{{4, 0}, {0, 4}} * x == col);
    }
    CHECK(cols.count(Vec{4, 0}) == 1);
    CHECK(cols.count(Vec{0, 4}) == 1);
  }
  {
    FourCycleTaxonomy t = fourcycle_case_taxonomy(IntMatrix{{3, 1}, {1, 2}});
    CHECK(t.counts.count(CycleShape::ThreeAB) == 1);
    CHECK(!t.nontrivial.empty());
  }
  {
    FourCycleTaxonomy t = fourcycle_case_taxonomy(IntMatrix{{5, 0}, {0, 7}});
    CHECK(t.counts.empty());
    CHECK(t.nontrivial.empty());
    CHECK(t.c_members.empty());
  }
}

TEST_CASE("full report, fixed example") {
  ClassificationReport r = full_report(IntMatrix{{2, -1}, {0, 3}});
  CHECK(r.order == 6);
  CHECK(r.hermite == IntMatrix{{1, 0}, {3, 6}});
  CHECK(r.degree_simple == 3);
  CHECK_FALSE(r.degenerate_generator);
  CHECK(r.laut_order == 4);
  CHECK_FALSE(r.linear_et);
  CHECK(r.edge_transitive == TriState::True);
  CHECK(r.nonlinear_stab == TriState::True);
  CHECK(r.family.tag == FamilyTag::None);
  REQUIRE(r.aut_order.has_value());
  CHECK(*r.aut_order == 72);
  REQUIRE(r.nonlinear_example.has_value());
  REQUIRE(r.edge_orbits.has_value());
  CHECK(r.edge_orbits->size() == 1);
}

TEST_CASE("full report beyond the brute force cap leaves oracles unknown") {
  ReportOptions opts;
  opts.brute_force_cap = 10;
  ClassificationReport r = full_report(IntMatrix{{4, 0}, {0, 4}}, opts);
  CHECK(r.order == 16);
  CHECK(r.linear_et);  // algebraic part still runs
  CHECK(r.edge_transitive == TriState::Unknown);
  CHECK(r.nonlinear_stab == TriState::Unknown);
  CHECK_FALSE(r.aut_order.has_value());
}

TEST_CASE("report json carries the documented fields") {
  ClassificationReport r = full_report(IntMatrix{{3, 1}, {1, 3}});
  auto j = nlohmann::json::parse(report_to_json(r));
  for (const char* key : {"matrix", "hnf", "order", "degree", "four_cycles", "laut_order",
                          "linear_et", "edge_transitive", "nonlinear_stab", "family", "params",
                          "certificates"})
    CHECK(j.contains(key));
  CHECK(j["order"] == 8);
  CHECK(j["family"] == "Dim2-M1");
  CHECK(j["params"] == nlohmann::json::array({3, 1}));
  CHECK(j["linear_et"] == true);
  CHECK(j["certificates"]["aut_order"] == 1152);
}

TEST_CASE("hermite class enumeration") {
  CHECK(enumerate_hnf_classes(2, 1).size() == 1);
  auto classes = enumerate_hnf_classes(2, 4);
  CHECK(classes.size() == 15);  // sum of sigma(d), d = 1..4
  std::set<std::string> distinct;
  for (const auto& m : classes) {
    CHECK(hnf(m).h == m);
    CHECK(det(m) >= 1);
    CHECK(det(m) <= 4);
    distinct.insert(m.str());
  }
  CHECK(distinct.size() == classes.size());

  // the circulant (2,1,0) class shows up in the dimension 3 enumeration
  IntMatrix target = hnf(IntMatrix{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}}).h;
  bool found = false;
  for (const auto& m : enumerate_hnf_classes(3, 9))
    if (m == target) found = true;
  CHECK(found);
}

TEST_CASE("swapping rows of an odd-first-column matrix lands in the same class") {
  for (int k = 0; k <= 20; ++k) {
    IntMatrix a{{0, 2}, {2 * k + 1, 2}};  // rows of [[2k+1,2],[0,2]] swapped
    IntMatrix b{{2 * k + 2, 2}, {1, 2}};
    CHECK(hnf(a).h == hnf(b).h);
  }
}

TEST_CASE("scan visits every class in order, any job count") {
  ReportOptions opts;
  std::vector<IntMatrix> seq1;
  scan(2, 6, opts, 1, [&](std::size_t idx, const ClassificationReport& r) {
    CHECK(idx == seq1.size());
    seq1.push_back(r.matrix);
    CHECK(r.hermite == r.matrix);
    CHECK(r.edge_transitive != TriState::Unknown);
  });
  auto classes = enumerate_hnf_classes(2, 6);
  CHECK(seq1.size() == classes.size());

  std::vector<IntMatrix> seq4;
  scan(2, 6, opts, 4, [&](std::size_t idx, const ClassificationReport& r) {
    CHECK(idx == seq4.size());
    seq4.push_back(r.matrix);
  });
  CHECK(seq1 == seq4);
}

TEST_CASE("scan agrees with the characterization on a small range") {
  ReportOptions opts;
  scan(2, 30, opts, 0, [&](std::size_t, const ClassificationReport& r) {
    CHECK(r.linear_et == (r.family.tag != FamilyTag::None));
    if (r.linear_et) {
      REQUIRE(r.edge_transitive == TriState::True);
      CHECK(r.nonlinear_stab != TriState::Unknown);
    }
    if (r.edge_transitive == TriState::False) CHECK_FALSE(r.linear_et);
  });
}
