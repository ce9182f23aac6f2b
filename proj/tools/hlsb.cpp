// hlsb: check and construct Hom-Lie superbialgebras from definition files.
//
// Exit codes: 0 pass, 1 axiom or hypothesis failure, 2 usage/parse error.

#include "hlsb/catalog.hpp"
#include "hlsb/constructions.hpp"
#include "hlsb/io.hpp"
#include "hlsb/yang_baxter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace hlsb;
using nlohmann::ordered_json;

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ordered_json report_json(const CheckReport& r) { return ordered_json::parse(report_to_json(r)); }

// Text report: every axiom that was checked, then the residual witnesses.
void print_text(std::ostream& os, const std::string& name, const std::vector<std::string>& axioms, const CheckReport& r) {
  os << name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& a : axioms) os << "  " << (r.failed(a) ? "fail" : "ok  ") << "  " << a << "\n";
  if (!r.passed()) {
    std::istringstream lines(r.to_text());
    for (std::string l; std::getline(lines, l);) os << "    " << l << "\n";
  }
}

const Definition& pick_instance(const DefinitionFile& f, const std::string& variant) {
  if (!variant.empty()) {
    for (const auto& d : f.instances)
      if (d.variant == variant) return d;
    throw UsageError("no variant '" + variant + "'");
  }
  if (f.instances.size() != 1) throw UsageError("file has " + std::to_string(f.instances.size()) + " variants; pick one with --variant");
  return f.instances.front();
}

template <class Map>
const typename Map::mapped_type& named(const Map& m, const std::string& name, const char* what) {
  if (name.empty()) throw UsageError(std::string("missing --") + what);
  auto it = m.find(name);
  if (it == m.end()) throw UsageError(std::string("no ") + what + " named '" + name + "' in the file");
  return it->second;
}

HomSuperBialgebra with_zero_cobracket(const HomSuperAlgebra& A) {
  return HomSuperBialgebra(A, Tensor3(A.basis, Parity::even));
}

int cmd_check(const std::string& path, bool multiplicative, const std::string& format) {
  DefinitionFile f = read_definition_file(path);
  const bool mult = multiplicative || f.multiplicative;
  bool ok = true;
  ordered_json out;
  out["file"] = path;
  out["multiplicative"] = mult;
  out["instances"] = ordered_json::array();
  for (const auto& d : f.instances) {
    CheckReport r = check_bialgebra(d.structure, mult);
    ok = ok && r.passed();
    const std::string name = d.name().empty() ? path : d.name();
    if (format == "json") {
      ordered_json inst = report_json(r);
      ordered_json axioms = ordered_json::array();
      for (const auto& a : bialgebra_axioms(mult)) axioms.push_back({{"axiom", a}, {"passed", !r.failed(a)}});
      out["instances"].push_back({{"name", name}, {"passed", r.passed()}, {"axioms", axioms},
                                  {"violations", inst["violations"]}});
    } else {
      print_text(std::cout, name, bialgebra_axioms(mult), r);
    }
  }
  if (format == "json") {
    out["passed"] = ok;
    std::cout << out.dump(2) << "\n";
  }
  return ok ? kPass : kFail;
}

struct ConstructArgs {
  std::string verb, file, out, variant, morphism, r, t, rep;
  int power = -1;
};

int cmd_construct(const ConstructArgs& a) {
  DefinitionFile f = read_definition_file(a.file);
  const Definition& in = pick_instance(f, a.variant);
  Definition out;
  out.id = in.id.empty() ? a.verb : in.id + "-" + a.verb;
  out.description = a.verb + " of " + (in.name().empty() ? a.file : in.name());
  out.multiplicative = in.multiplicative;
  out.space = in.space;
  bool same_basis_result = true;

  if (a.verb == "twist") {
    if (a.power >= 0 && !a.morphism.empty()) throw UsageError("give either --morphism or --power");
    if (a.power >= 0)
      out.structure = twist_power(in.structure, a.power);
    else
      out.structure = twist(in.structure, Morphism{named(in.morphisms, a.morphism, "morphism")});
  } else if (a.verb == "dual") {
    out.structure = dualize(in.structure);
    same_basis_result = false;
  } else if (a.verb == "double") {
    HomSuperAlgebra gstar = dualize(in.structure).algebra;
    ManinSupertriple m = manin_supertriple(in.structure.algebra, gstar);
    if (!m.report.passed()) {
      std::cerr << "double is not a Manin supertriple:\n" << m.report.to_text();
      return kFail;
    }
    out.structure = with_zero_cobracket(m.algebra);
    same_basis_result = false;
  } else if (a.verb == "semidirect") {
    out.structure = with_zero_cobracket(semidirect_product(in.structure.algebra, named(in.representations, a.rep, "rep")));
    same_basis_result = false;
  } else if (a.verb == "coboundary") {
    RMatrix r(in.structure.algebra, named(in.tensors, a.r, "r"));
    out.structure = coboundary_from_r(in.structure.algebra, r);
  } else if (a.verb == "perturb") {
    RMatrix t(in.structure.algebra, named(in.tensors, a.t, "t"));
    out.structure = perturb_cobracket(in.structure, t);
  } else {
    throw UsageError("unknown verb '" + a.verb + "'");
  }
  if (same_basis_result) {
    out.tensors = in.tensors;
    out.morphisms = in.morphisms;
  }
  std::ofstream os(a.out);
  if (!os) throw UsageError("cannot write '" + a.out + "'");
  os << write_definition(out);
  return kPass;
}

int cmd_catalog(const std::string& sub, const std::string& row, const std::string& format) {
  if (sub == "list") {
    for (const auto& r : catalog_list())
      std::cout << r.id << "\t" << r.sign_variants() << "\t" << r.description << "\n";
    return kPass;
  }
  std::vector<CatalogRow> rows;
  if (row.empty()) {
    rows = catalog_list();
  } else {
    try {
      rows.push_back(catalog_row(row));
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  CatalogSummary s = verify_all(rows);
  if (format == "json") {
    ordered_json out;
    out["passed"] = s.passed();
    out["instances"] = ordered_json::array();
    for (const auto& e : s.entries) {
      ordered_json inst = report_json(e.report);
      out["instances"].push_back({{"row", e.row}, {"name", e.instance}, {"passed", e.report.passed()},
                                  {"violations", inst["violations"]}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : s.entries) {
      std::cout << (e.report.passed() ? "PASS  " : "FAIL  ") << e.instance << "\n";
      if (!e.report.passed()) std::cout << e.report.to_text();
    }
    std::cout << s.entries.size() - s.failures() << "/" << s.entries.size() << " instances pass\n";
  }
  return s.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for Hom-Lie superbialgebras"};
  app.require_subcommand(1);

  std::string file, format = "text";
  bool multiplicative = false;
  auto* check = app.add_subcommand("check", "verify every bialgebra axiom of a definition file");
  check->add_option("file", file, "definition file")->required();
  check->add_flag("--multiplicative", multiplicative, "also check (co)multiplicativity");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a derived structure and write it as a definition file");
  construct->add_option("verb", ca.verb)->required()->check(
      CLI::IsMember({"twist", "dual", "double", "semidirect", "coboundary", "perturb"}));
  construct->add_option("file", ca.file)->required();
  construct->add_option("--out", ca.out, "output file")->required();
  construct->add_option("--variant", ca.variant, "variant label when the file has several");
  construct->add_option("--morphism", ca.morphism, "named morphism (twist)");
  construct->add_option("--power", ca.power, "twist by alpha^N (twist)")->check(CLI::NonNegativeNumber);
  construct->add_option("--r", ca.r, "named r-matrix (coboundary)");
  construct->add_option("--t", ca.t, "named perturbation tensor (perturb)");
  construct->add_option("--rep", ca.rep, "named representation (semidirect)");

  std::string sub, row, cformat = "text";
  auto* catalog = app.add_subcommand("catalog", "list or verify the built-in classification catalog");
  catalog->add_option("action", sub)->required()->check(CLI::IsMember({"list", "verify"}));
  catalog->add_option("--row", row, "restrict verify to one row id");
  catalog->add_option("--format", cformat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, multiplicative, format);
    if (construct->parsed()) return cmd_construct(ca);
    return cmd_catalog(sub, row, cformat);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HypothesisError& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
