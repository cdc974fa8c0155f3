#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/classify.hpp"
#include "cayley/errors.hpp"
#include "cayley/verify.hpp"

using namespace cayley;
using nlohmann::json;

namespace {

std::string tri(TriState t) {
  switch (t) {
    case TriState::True: return "yes";
    case TriState::False: return "no";
    default: return "unknown";
  }
}

void print_text_report(const ClassificationReport& r, std::ostream& os) {
  os << "matrix:            " << r.matrix.str() << "\n";
  os << "hermite form:      " << r.hermite.str() << "\n";
  os << "group order:       " << r.order << "\n";
  os << "degree (simple):   " << r.degree_simple
     << (r.degenerate_generator ? "  [degenerate generator]" : "") << "\n";
  std::size_t cycles = 0;
  for (const auto& [shape, cnt] : r.taxonomy.counts) cycles += cnt;
  os << "nontrivial 4-cycles: " << cycles;
  if (cycles) {
    os << "  (";
    bool first = true;
    for (const auto& [shape, cnt] : r.taxonomy.counts) {
      if (!first) os << ", ";
      os << shape_name(shape) << ": " << cnt;
      first = false;
    }
    os << ")";
  }
  os << "\n";
  os << "linear stabilizer: " << r.laut_order << "\n";
  os << "linearly edge-transitive: " << (r.linear_et ? "yes" : "no") << "\n";
  os << "edge-transitive:   " << tri(r.edge_transitive) << "\n";
  os << "nonlinear stabilizer elements: " << tri(r.nonlinear_stab) << "\n";
  if (r.family.tag == FamilyTag::None) {
    os << "family:            none\n";
  } else {
    os << "family:            " << family_name(r.family.tag);
    if (r.family.parameters_recovered) {
      os << " with parameters (";
      for (std::size_t i = 0; i < r.family.parameters.size(); ++i)
        os << (i ? "," : "") << r.family.parameters[i];
      os << ")";
    } else {
      os << " (parameters unrecovered)";
    }
    os << "\n";
  }
  if (r.aut_order) os << "|Aut|:             " << *r.aut_order << "\n";
}

json family_json(const CanonicalFamily& fam) {
  json j;
  j["family"] = fam.tag == FamilyTag::None ? json(nullptr) : json(family_name(fam.tag));
  if (fam.tag != FamilyTag::None && fam.parameters_recovered) {
    json p = json::array();
    for (const Int& x : fam.parameters) p.push_back(x.convert_to<std::int64_t>());
    j["params"] = std::move(p);
    json u = json::array();
    for (int i = 0; i < fam.witness_unimodular->rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < fam.witness_unimodular->cols(); ++k)
        row.push_back((*fam.witness_unimodular)(i, k).convert_to<std::int64_t>());
      u.push_back(std::move(row));
    }
    j["witness_unimodular"] = std::move(u);
  } else {
    j["params"] = nullptr;
  }
  j["undecided"] = fam.undecided;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry analysis of Cayley graphs over integer quotient lattices"};
  app.require_subcommand(1);

  std::string view_name = "simple";
  std::string output = "text";
  long long det_max = 16;
  long long cap = kDefaultBruteForceCap;
  int jobs = 0;
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("CAYLEY_CAP")) cap = std::atoll(env);

  app.add_option("--view", view_name, "graph view: simple|multi")
      ->check(CLI::IsMember({"simple", "multi"}));
  app.add_option("--output", output, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--det-max", det_max, "scan determinant bound");
  app.add_option("--cap", cap, "brute-force vertex cap");
  app.add_option("--jobs", jobs, "worker threads for scan (0 = auto)");
  app.add_option("--seed", seed, "seed for randomized verification corpora");

  std::string matrix_text, matrix_text2, suite = "all";
  int scan_dim = 2;

  auto* analyze = app.add_subcommand("analyze", "full report for one matrix");
  analyze->add_option("matrix", matrix_text, "matrix, e.g. \"2,-1;0,3\" or [[2,-1],[0,3]]")
      ->required();

  auto* classify = app.add_subcommand("classify", "canonical family of one matrix");
  classify->add_option("matrix", matrix_text)->required();

  auto* scan_cmd = app.add_subcommand("scan", "classify every Hermite class up to a determinant");
  scan_cmd->add_option("--dim", scan_dim, "dimension (2 or 3)")->check(CLI::IsMember({2, 3}));

  auto* verify = app.add_subcommand("verify", "run a reproduction suite");
  verify->add_option("suite", suite, "dim2|dim3|fourcycles|adam|linearity|all");

  auto* adam = app.add_subcommand("adam", "generator-preserving isomorphism test for two matrices");
  adam->add_option("matrix1", matrix_text)->required();
  adam->add_option("matrix2", matrix_text2)->required();

  for (CLI::App* sub : {analyze, classify, scan_cmd, verify, adam}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  GraphView view = view_name == "multi" ? GraphView::Multigraph : GraphView::Simple;
  ReportOptions opts;
  opts.view = view;
  if (cap > 0) opts.brute_force_cap = static_cast<std::size_t>(cap);

  try {
    if (analyze->parsed()) {
      ClassificationReport r = full_report(IntMatrix::parse(matrix_text), opts);
      if (output == "json")
        std::cout << json::parse(report_to_json(r)).dump(2) << "\n";
      else
        print_text_report(r, std::cout);
      return 0;
    }

    if (classify->parsed()) {
      IntMatrix m = IntMatrix::parse(matrix_text);
      CanonicalFamily fam;
      if (m.dim() == 2)
        fam = classify_dim2(m);
      else if (m.dim() == 3)
        fam = classify_dim3(m);
      else
        throw DimensionMismatch("classification covers dimensions 2 and 3");
      if (output == "json") {
        std::cout << family_json(fam).dump(2) << "\n";
      } else if (fam.tag == FamilyTag::None) {
        std::cout << (fam.undecided ? "undecided\n" : "none\n");
      } else {
        std::cout << family_name(fam.tag);
        if (fam.parameters_recovered) {
          std::cout << " (";
          for (std::size_t i = 0; i < fam.parameters.size(); ++i)
            std::cout << (i ? "," : "") << fam.parameters[i];
          std::cout << ")";
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (scan_cmd->parsed()) {
      if (det_max < 1 || static_cast<std::size_t>(det_max) > kDefaultEnumerationCap)
        throw TooLarge("det-max outside 1.." + std::to_string(kDefaultEnumerationCap));
      std::map<std::string, std::size_t> by_family;
      std::size_t rows = 0, linear_et = 0, edge_transitive = 0, nonlinear = 0;
      cayley::scan(scan_dim, det_max, opts, jobs,
                   [&](std::size_t, const ClassificationReport& r) {
                     if (output == "json") std::cout << report_to_json(r) << "\n";
                     ++rows;
                     by_family[family_name(r.family.tag)] += 1;
                     if (r.linear_et) ++linear_et;
                     if (r.edge_transitive == TriState::True) ++edge_transitive;
                     if (r.nonlinear_stab == TriState::True) ++nonlinear;
                   });
      std::ostream& os = output == "json" ? std::cerr : std::cout;
      os << "classes: " << rows << "  linearly edge-transitive: " << linear_et
         << "  edge-transitive: " << edge_transitive << "  with nonlinear stabilizer: " << nonlinear
         << "\n";
      os << "families:";
      for (const auto& [name, cnt] : by_family) os << "  " << name << ": " << cnt;
      os << "\n";
      return 0;
    }

    if (verify->parsed()) {
      std::vector<std::string> suites =
          suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
      bool all_pass = true;
      VerifyLog log = [](const std::string& s) { std::cerr << "  " << s << "\n"; };
      for (const std::string& s : suites) {
        for (const CriterionResult& res : run_suite(s, seed, log)) {
          std::cout << (res.pass ? "PASS" : "FAIL") << " [" << s << "] criterion " << res.id << " "
                    << res.name << " (" << res.checks << " checks)"
                    << (res.pass ? "" : ": " + res.detail) << "\n";
          all_pass = all_pass && res.pass;
        }
      }
      return all_pass ? 0 : 1;
    }

    if (adam->parsed()) {
      IntMatrix m1 = IntMatrix::parse(matrix_text);
      IntMatrix m2 = IntMatrix::parse(matrix_text2);
      AdamResult res = adam_isomorphic(m1, m2);
      if (output == "json") {
        json j;
        j["adam_isomorphic"] = res.isomorphic;
        if (res.witness) {
          json w = json::array();
          IntMatrix p = res.witness->matrix();
          for (int i = 0; i < p.rows(); ++i) {
            json row = json::array();
            for (int k = 0; k < p.cols(); ++k) row.push_back(p(i, k).convert_to<std::int64_t>());
            w.push_back(std::move(row));
          }
          j["witness"] = std::move(w);
        }
        std::cout << j.dump(2) << "\n";
      } else if (res.isomorphic) {
        std::cout << "adam-isomorphic via P = " << res.witness->matrix().str() << "\n";
      } else {
        std::cout << "not adam-isomorphic\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TooLarge& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
