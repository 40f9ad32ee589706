#pragma once

#include "tessparam/params.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tessparam {

struct CatalogEntry {
  std::string id;
  std::string title;
  Scalar lambda_V{1};
  std::optional<Scalar> mu_VE, mu_EP, mu_PV, xi, kappa, psi, tau;
  bool ftf = true;
  bool on_fundamental_curve = false;
  std::string provenance;
  std::optional<std::string> generator_id;
  std::string notes;
  /// Closed-form adjacencies beyond the seven-tuple, keyed as "mu_VP" etc.
  std::vector<std::pair<std::string, Scalar>> extra;
  /// How the entry is reproduced from other inputs, if at all.
  std::string recipe;
  std::function<TessParams()> reproduce;

  bool fully_specified() const;
  /// Throws std::logic_error when the entry is partial.
  TessParams params() const;
};

/// Ids of all stored entries; parameterized families appear with
/// representative arguments.
std::vector<std::string> catalog_ids();

/// Accepts stored ids and family ids such as "ex11_spoke_cube(k=2,n=0)".
CatalogEntry catalog_get(const std::string& id);

CatalogEntry spoke_cube_entry(int k, int n);
CatalogEntry core_prism_cube_entry(int k, int n);

struct CatalogFailure {
  std::string id;
  std::string check;
  std::string detail;
};

struct CatalogReport {
  std::size_t entries = 0;
  std::size_t checks = 0;
  std::vector<CatalogFailure> failures;
  bool ok() const { return failures.empty(); }
};

CatalogReport verify_catalog();

}  // namespace tessparam
