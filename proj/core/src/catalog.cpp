#include "hlsb/catalog.hpp"

#include "io_internal.hpp"

#include <stdexcept>

namespace hlsb {

namespace detail {
extern const std::string_view catalog_json;
}

namespace {

CheckReport check_instance(const Definition& d, const std::string& expected, bool mult, const CheckOptions& opt) {
  if (expected == "algebra-only") return check_algebra(d.structure.algebra, mult);
  if (expected == "coalgebra-only") return check_coalgebra(d.structure.coalgebra(), mult, opt);
  return check_bialgebra(d.structure, mult, opt);
}

}  // namespace

std::vector<CatalogRow> parse_catalog(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("", "expected an object");
  auto v = j.find("format_version");
  if (v == j.end() || !v->is_number_integer() || v->get<int>() != 1)
    throw ParseError("/format_version", "unsupported format_version (expected 1)");
  auto rows = j.find("rows");
  if (rows == j.end() || !rows->is_array()) throw ParseError("/rows", "expected an array");
  std::vector<CatalogRow> out;
  for (std::size_t i = 0; i < rows->size(); ++i) {
    DefinitionFile f = detail::parse_definition_json((*rows)[i], "/rows/" + std::to_string(i), false);
    if (f.id.empty()) throw ParseError("/rows/" + std::to_string(i), "catalog rows need an id");
    for (const auto& r : out)
      if (r.id == f.id) throw ParseError("/rows/" + std::to_string(i) + "/id", "duplicate row id '" + f.id + "'");
    out.push_back({f.id, f.description, f.expected, f.multiplicative, std::move(f.instances)});
  }
  return out;
}

const std::vector<CatalogRow>& catalog_list() {
  static const std::vector<CatalogRow> rows = parse_catalog(detail::catalog_json);
  return rows;
}

const CatalogRow& catalog_row(const std::string& id) {
  for (const auto& r : catalog_list())
    if (r.id == id) return r;
  throw std::out_of_range("unknown catalog row '" + id + "'");
}

CheckReport verify_row(const CatalogRow& row, const CheckOptions& opt) {
  CheckReport rep;
  for (const auto& d : row.instances) rep.append(check_instance(d, row.expected, row.multiplicative, opt), d.name() + "/");
  return rep;
}

bool CatalogSummary::passed() const { return failures() == 0; }

std::size_t CatalogSummary::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.report.passed() ? 0 : 1;
  return n;
}

CatalogSummary verify_all(const std::vector<CatalogRow>& rows, const CheckOptions& opt) {
  CatalogSummary s;
  for (const auto& row : rows)
    for (const auto& d : row.instances)
      s.entries.push_back({row.id, d.name(), check_instance(d, row.expected, row.multiplicative, opt)});
  return s;
}

}  // namespace hlsb
