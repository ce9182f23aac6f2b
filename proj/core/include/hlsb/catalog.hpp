#pragma once
// The classification tables as data: one row per printed entry, one
// instance per sign/stratum variant.

#include "hlsb/io.hpp"

#include <string>
#include <vector>

namespace hlsb {

struct CatalogRow {
  std::string id;
  std::string description;
  std::string expected;  // bialgebra | algebra-only | coalgebra-only
  bool multiplicative = false;
  std::vector<Definition> instances;

  std::size_t sign_variants() const { return instances.size(); }
};

// Rows in file order (two-dim, diag-*, jordan-*). Parsed once.
const std::vector<CatalogRow>& catalog_list();
// throws std::out_of_range for an unknown id
const CatalogRow& catalog_row(const std::string& id);
// Rows from an arbitrary catalog document {"format_version":1,"rows":[...]}.
std::vector<CatalogRow> parse_catalog(std::string_view json_text);

// Checks matching row.expected on every instance; violations are prefixed
// with the instance name ("diag-3[+]/compatibility").
CheckReport verify_row(const CatalogRow& row, const CheckOptions& opt = {});

struct CatalogSummary {
  struct Entry {
    std::string row;
    std::string instance;
    CheckReport report;
  };
  std::vector<Entry> entries;  // sorted by row id order of the input, then variant

  bool passed() const;
  std::size_t failures() const;
};

CatalogSummary verify_all(const std::vector<CatalogRow>& rows, const CheckOptions& opt = {});
inline CatalogSummary verify_all(const CheckOptions& opt = {}) { return verify_all(catalog_list(), opt); }

}  // namespace hlsb
