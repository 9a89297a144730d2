#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "isg/claims.hpp"
#include "isg/error.hpp"
#include "isg/json_io.hpp"

namespace {

using isg::json;

constexpr int kExitVerification = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) isg::raise(isg::errc::invalid_input, "cannot open file " + path);
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) isg::raise(isg::errc::invalid_input, path + " is not valid JSON");
  return doc;
}

isg::SemigroupSpec load_spec(const std::string& path, size_t max_elements, size_t subset_cap) {
  auto spec = isg::spec_from_json(load_json_file(path));
  if (max_elements) spec.limits.element_cap = max_elements;
  if (subset_cap) spec.limits.subset_exhaustive_cap = subset_cap;
  return spec;
}

void print_table_text(const isg::FiniteSemigroup& s, std::ostream& os) {
  os << "*";
  for (size_t j = 0; j < s.size(); ++j) os << " | " << s.label(static_cast<int>(j));
  os << "\n";
  for (size_t i = 0; i < s.size(); ++i) {
    os << s.label(static_cast<int>(i));
    for (size_t j = 0; j < s.size(); ++j)
      os << " | " << s.label(s.op(static_cast<int>(i), static_cast<int>(j)));
    os << "\n";
  }
}

void print_table_csv(const isg::FiniteSemigroup& s, std::ostream& os) {
  auto quote = [](const std::string& v) { return "\"" + v + "\""; };
  os << "\"*\"";
  for (size_t j = 0; j < s.size(); ++j) os << "," << quote(s.label(static_cast<int>(j)));
  os << "\n";
  for (size_t i = 0; i < s.size(); ++i) {
    os << quote(s.label(static_cast<int>(i)));
    for (size_t j = 0; j < s.size(); ++j)
      os << "," << quote(s.label(s.op(static_cast<int>(i), static_cast<int>(j))));
    os << "\n";
  }
}

json table_to_json(const isg::FiniteSemigroup& s) {
  json t;
  t["elements"] = s.labels();
  json rows = json::array();
  for (size_t i = 0; i < s.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < s.size(); ++j)
      row.push_back(s.op(static_cast<int>(i), static_cast<int>(j)));
    rows.push_back(row);
  }
  t["op"] = rows;
  return t;
}

void print_report_text(const isg::FiniteSemigroup& s, const isg::StructureReport& r,
                       std::ostream& os) {
  auto label_list = [&](const std::vector<int>& idx) {
    std::string out;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ", ";
      out += s.label(idx[i]);
    }
    return out.empty() ? std::string("none") : out;
  };
  os << "order: " << r.order << "\n";
  os << "commutative: " << (r.is_commutative ? "yes" : "no") << "\n";
  os << "identity: " << (r.identity ? s.label(*r.identity) : "none") << "\n";
  os << "zero: " << (r.zero ? s.label(*r.zero) : "none") << "\n";
  os << "idempotents (" << r.special.idempotents.size()
     << "): " << label_list(r.special.idempotents) << "\n";
  os << "nilpotents (" << r.special.nilpotents.size() << "): " << label_list(r.special.nilpotents)
     << "\n";
  os << "units (" << r.special.units.size() << "): " << label_list(r.special.units) << "\n";
  os << "zero-divisor pairs: " << r.special.zero_divisor_total << "\n";
  os << "subgroup orders" << (r.subgroups.exact ? " (exact): " : " (partial): ");
  {
    std::string out;
    for (long o : r.subgroups.orders) out += (out.empty() ? "" : ", ") + std::to_string(o);
    os << "{" << out << "}\n";
  }
  os << "maximal subgroups:\n";
  for (const auto& mg : r.subgroups.maximal)
    os << "  at " << s.label(mg.idempotent) << ": order " << mg.elements.size() << "\n";
  if (!r.ideals.principal.empty()) {
    os << "ideals: " << r.ideals.principal.size() << " principal, proper ideal: "
       << (r.ideals.has_proper_ideal ? "yes" : "no");
    if (r.ideals.all_ideal_count) os << ", all ideals: " << *r.ideals.all_ideal_count;
    os << "\n";
  } else {
    os << "ideals: not enumerated\n";
  }
  const auto& sm = r.smarandache;
  os << "smarandache:\n";
  os << "  S-semigroup: " << (sm.is_s_semigroup ? "yes" : "no") << "\n";
  os << "  S-Lagrange: " << (sm.is_s_lagrange ? "yes" : "no") << "\n";
  os << "  S-weakly-Lagrange: " << (sm.is_s_weakly_lagrange ? "yes" : "no") << "\n";
  for (const auto& sc : sm.s_p_sylow)
    os << "  subgroup order " << sc.order << " (p = " << sc.prime << "): " << sc.cls << "\n";
  os << "  S-Cauchy elements: " << sm.s_cauchy_elements.size() << "\n";
  os << "  S-hyper subsemigroup: " << (sm.has_s_hyper_subsemigroup ? "yes" : "no");
  if (sm.hyper_witness) os << "  witness: " << label_list(*sm.hyper_witness);
  os << "\n";
  os << "  simple: " << (sm.is_simple ? "yes" : "no") << "\n";
  os << "  doubly simple: " << (sm.is_doubly_simple ? "yes" : "no") << "\n";
  if (!r.method_notes.empty()) {
    os << "notes:\n";
    for (const auto& n : r.method_notes) os << "  - " << n << "\n";
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"interval semigroup constructor and analyzer"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  size_t max_elements = 0;
  size_t subset_cap = 0;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--max-elements", max_elements, "override the element cap");
  app.add_option("--subset-oracle-cap", subset_cap,
                 "override the exhaustive subset-search threshold");

  std::string spec_path, expr_path, prefix;
  std::string claims_path = ISG_DEFAULT_CLAIMS_PATH;
  bool with_table = false, csv = false;

  auto* construct = app.add_subcommand("construct", "build a semigroup and list its elements");
  construct->add_option("spec", spec_path, "SemigroupSpec JSON file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "build and run the structure analyzer");
  analyze_cmd->add_option("spec", spec_path, "SemigroupSpec JSON file")->required();
  analyze_cmd->add_flag("--table", with_table, "also emit the Cayley table");
  analyze_cmd->add_flag("--csv", csv, "emit the table as CSV");

  auto* table_cmd = app.add_subcommand("table", "emit the Cayley table");
  table_cmd->add_option("spec", spec_path, "SemigroupSpec JSON file")->required();
  table_cmd->add_flag("--csv", csv, "emit CSV instead of text");

  auto* verify = app.add_subcommand("verify-claims", "re-verify the cataloged worked examples");
  verify->add_option("prefix", prefix, "only run entries whose id starts with this prefix");
  verify->add_option("--claims", claims_path, "claims catalog path");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression within a carrier");
  eval_cmd->add_option("spec", spec_path, "SemigroupSpec JSON file")->required();
  eval_cmd->add_option("expr", expr_path, "expression JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) {
    auto s = isg::FiniteSemigroup::build(load_spec(spec_path, max_elements, subset_cap));
    if (as_json) {
      json out;
      out["schema"] = 1;
      out["spec"] = isg::spec_to_json(s.spec());
      out["order"] = s.size();
      out["elements"] = s.labels();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "order: " << s.size() << "\n";
      for (const auto& l : s.labels()) std::cout << l << "\n";
    }
    return 0;
  }

  if (analyze_cmd->parsed()) {
    auto s = isg::FiniteSemigroup::build(load_spec(spec_path, max_elements, subset_cap));
    auto rep = isg::analyze(s);
    if (as_json) {
      json out = isg::report_to_json(s, rep);
      if (with_table) out["table"] = table_to_json(s);
      std::cout << out.dump(2) << "\n";
    } else {
      print_report_text(s, rep, std::cout);
      if (with_table) {
        std::cout << "\ncayley table:\n";
        csv ? print_table_csv(s, std::cout) : print_table_text(s, std::cout);
      }
    }
    return 0;
  }

  if (table_cmd->parsed()) {
    auto s = isg::FiniteSemigroup::build(load_spec(spec_path, max_elements, subset_cap));
    if (as_json) {
      json out;
      out["schema"] = 1;
      out["spec"] = isg::spec_to_json(s.spec());
      out["table"] = table_to_json(s);
      std::cout << out.dump(2) << "\n";
    } else {
      csv ? print_table_csv(s, std::cout) : print_table_text(s, std::cout);
    }
    return 0;
  }

  if (verify->parsed()) {
    auto entries = isg::load_claims(claims_path);
    auto results = isg::run_claims(entries, prefix);
    size_t pass = 0, fail = 0, discrepancy = 0;
    for (const auto& r : results) {
      if (r.verdict == "PASS") ++pass;
      if (r.verdict == "FAIL") ++fail;
      if (r.verdict == "KNOWN_DISCREPANCY") ++discrepancy;
    }
    if (as_json) {
      json out;
      out["schema"] = 1;
      json list = json::array();
      for (const auto& r : results) {
        json one;
        one["id"] = r.id;
        one["verdict"] = r.verdict;
        one["detail"] = r.detail;
        list.push_back(one);
      }
      out["results"] = list;
      json summary;
      summary["pass"] = pass;
      summary["known_discrepancy"] = discrepancy;
      summary["fail"] = fail;
      out["summary"] = summary;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& r : results)
        std::cout << r.verdict << "  " << r.id << "  (" << r.detail << ")\n";
      std::cout << "summary: " << pass << " pass, " << discrepancy << " known discrepancies, "
                << fail << " failures\n";
    }
    return fail == 0 ? 0 : kExitVerification;
  }

  if (eval_cmd->parsed()) {
    auto spec = load_spec(spec_path, max_elements, subset_cap);
    json expr = load_json_file(expr_path);
    auto value = isg::eval_expression(spec, expr);
    bool used_det = expr.dump().find("\"det\"") != std::string::npos;
    if (as_json) {
      json out;
      out["schema"] = 1;
      out["value"] = isg::render_semigroup_element(value);
      out["element"] = isg::element_to_json(value);
      if (used_det)
        out["notes"] = json::array({"determinant subtraction: |u - v| on ordered domains, "
                                    "(u - v) mod m on modular domains"});
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << isg::render_semigroup_element(value) << "\n";
      if (used_det)
        std::cout << "note: determinant subtraction is |u - v| on ordered domains, "
                     "(u - v) mod m on modular domains\n";
    }
    return 0;
  }

  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const isg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == isg::errc::resource_cap ? kExitResource : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
