#include "tessparam/params_io.hpp"

#include "tessparam/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace tessparam {

using json = nlohmann::ordered_json;

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = {"lambda_V", "mu_VE", "mu_EP", "mu_PV",
                                                 "xi",       "kappa", "psi",   "tau"};
  return names;
}

Scalar& param_field(TessParams& p, const std::string& name) {
  if (name == "lambda_V") return p.lambda_V;
  if (name == "mu_VE") return p.mu_VE;
  if (name == "mu_EP") return p.mu_EP;
  if (name == "mu_PV") return p.mu_PV;
  if (name == "xi") return p.xi;
  if (name == "kappa") return p.kappa;
  if (name == "psi") return p.psi;
  if (name == "tau") return p.tau;
  throw ParseError("unknown parameter \"" + name + "\"");
}

const Scalar& param_field(const TessParams& p, const std::string& name) {
  return param_field(const_cast<TessParams&>(p), name);
}

bool ParamInput::has(const std::string& name) const {
  return std::find(supplied.begin(), supplied.end(), name) != supplied.end();
}

bool ParamInput::complete() const {
  for (const auto& n : param_names())
    if (n != "lambda_V" && !has(n)) return false;
  return true;
}

namespace {

Rational read_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return parse_rational(v.dump());
  throw ParseError("expected a number, got " + v.dump());
}

Scalar read_scalar(const json& v) {
  try {
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    if (v.is_number()) return Scalar(read_rational(v));
    if (v.is_object()) {
      if (v.contains("exact")) return read_scalar(v["exact"]);
      for (const char* k : {"a", "b", "c", "d"})
        if (!v.contains(k)) throw ParseError("pi^2 fraction object needs a, b, c and d");
      return Scalar::linear_fraction(read_rational(v["a"]), read_rational(v["b"]), read_rational(v["c"]),
                                     read_rational(v["d"]));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad scalar ") + v.dump() + ": " + e.what());
  }
  throw ParseError("bad scalar " + v.dump());
}

std::string canonical_key(std::string key) {
  if (key == "ve") return "mu_VE";
  if (key == "ep") return "mu_EP";
  if (key == "pv") return "mu_PV";
  if (key == "lambda_v") return "lambda_V";
  return key;
}

void set(ParamInput& in, const std::string& raw_key, const Scalar& value) {
  std::string key = canonical_key(raw_key);
  if (in.has(key)) throw ParseError("parameter \"" + key + "\" given twice");
  param_field(in.params, key) = value;
  in.supplied.push_back(key);
}

void require_cyclic(const ParamInput& in) {
  for (const char* k : {"mu_VE", "mu_EP", "mu_PV"})
    if (!in.has(k)) throw ParseError(std::string("missing parameter ") + k);
}

}  // namespace

ParamInput params_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parameter file: ") + e.what());
  }
  if (doc.is_object() && doc.contains("params")) doc = doc["params"];
  if (!doc.is_object()) throw ParseError("parameter file must hold a JSON object");
  ParamInput in;
  for (const auto& [key, value] : doc.items()) set(in, key, read_scalar(value));
  require_cyclic(in);
  return in;
}

ParamInput params_from_assignments(std::string_view text) {
  ParamInput in;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value, got \"" + std::string(item) + "\"");
    std::string key(item.substr(0, eq));
    std::string value(item.substr(eq + 1));
    Scalar s;
    try {
      s = Scalar::parse(value);
    } catch (const std::exception& e) {
      throw ParseError("bad value for " + key + ": " + e.what());
    }
    set(in, key, s);
  }
  require_cyclic(in);
  return in;
}

std::string params_to_json(const TessParams& p) {
  json doc = json::object();
  for (const auto& n : param_names()) doc[n] = param_field(p, n).to_string();
  return doc.dump(2);
}

}  // namespace tessparam
