#pragma once

#include "tessparam/params.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tessparam {

/// Parameter names in file order.
const std::vector<std::string>& param_names();
/// Field of `p` by name (see param_names). Throws ParseError.
Scalar& param_field(TessParams& p, const std::string& name);
const Scalar& param_field(const TessParams& p, const std::string& name);

/// Which fields a parameter source actually supplied.
struct ParamInput {
  TessParams params;
  std::vector<std::string> supplied;
  bool has(const std::string& name) const;
  /// True when all seven mean values were given.
  bool complete() const;
};

/// Reads a JSON parameter object. Values may be decimal or "p/q" strings,
/// JSON numbers, {"a","b","c","d"} objects for (a + b pi^2)/(c + d pi^2),
/// or {"exact": ...} objects as emitted by the command-line tool. A
/// top-level "params" member is read in place of the whole document.
/// Throws ParseError.
ParamInput params_from_json(const std::string& text);
/// Reads "mu_VE=4,mu_EP=3,..."; "ve", "ep", "pv" are accepted as short keys.
ParamInput params_from_assignments(std::string_view text);
/// Flat JSON object with exact string values.
std::string params_to_json(const TessParams& p);

}  // namespace tessparam
