#pragma once

#include "sunvol/exact.hpp"
#include "sunvol/kernels.hpp"
#include "sunvol/numerics.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

// JSON views of the domain types.  Every output object carries "schema": 1;
// the readers accept exactly the documented fields and throw SchemaError on
// anything malformed (missing field, unknown enum text, wrong shape).

namespace sunvol::serialize {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- enum text ------------------------------------------------------------

inline euler::RangeConvention convention_from_string(const std::string& s) {
  if (s == "covering") return euler::RangeConvention::Covering;
  if (s == "quotient") return euler::RangeConvention::Quotient;
  throw SchemaError("unknown range convention \"" + s + "\"");
}

inline euler::ChartContext chart_context_from_string(const std::string& s) {
  if (s == "su-full") return euler::ChartContext::SUFull;
  if (s == "projective") return euler::ChartContext::ProjectiveSpace;
  if (s == "truncated") return euler::ChartContext::TruncatedHaar;
  if (s == "hurwitz") return euler::ChartContext::HurwitzSphere;
  throw SchemaError("unknown chart context \"" + s + "\"");
}

inline kernels::KernelContext kernel_context_from_string(const std::string& s) {
  if (s == "haar-su") return kernels::KernelContext::HaarSU;
  if (s == "pure-state") return kernels::KernelContext::PureState;
  if (s == "truncated") return kernels::KernelContext::TruncatedHaar;
  if (s == "hurwitz") return kernels::KernelContext::Hurwitz;
  throw SchemaError("unknown kernel context \"" + s + "\"");
}

inline kernels::FactorForm factor_form_from_string(const std::string& s) {
  if (s == "sin2a") return kernels::FactorForm::Sin2A;
  if (s == "cospowsin") return kernels::FactorForm::CosPowSin;
  if (s == "cossinpow") return kernels::FactorForm::CosSinPow;
  throw SchemaError("unknown factor form \"" + s + "\"");
}

// ---- angle vectors ----------------------------------------------------------

inline json to_json(const euler::AngleVector& av) {
  json angles = json::array();
  for (const auto& a : av.angles)
    angles.push_back({{"i", a.index}, {"value", a.value}, {"lo", a.lo}, {"hi", a.hi}});
  json j{{"schema", 1},
         {"n", av.n},
         {"context", euler::to_string(av.context)},
         {"convention", euler::to_string(av.convention)},
         {"xi", av.xi},
         {"angles", std::move(angles)}};
  if (av.beta) j["beta"] = *av.beta;
  if (av.beta_range) j["beta_range"] = {av.beta_range->first, av.beta_range->second};
  return j;
}

inline euler::AngleVector angle_vector_from_json(const json& j) {
  try {
    euler::AngleVector av;
    av.n = j.at("n").get<int>();
    av.context = chart_context_from_string(j.at("context").get<std::string>());
    av.convention = convention_from_string(j.at("convention").get<std::string>());
    av.xi = j.value("xi", 1.0);
    for (const auto& a : j.at("angles")) {
      euler::AngleSlot slot;
      slot.index = a.at("i").get<int>();
      slot.value = a.at("value").get<double>();
      slot.lo = a.at("lo").get<double>();
      slot.hi = a.at("hi").get<double>();
      av.angles.push_back(slot);
    }
    if (j.contains("beta")) av.beta = j.at("beta").get<double>();
    if (j.contains("beta_range"))
      av.beta_range = std::make_pair(j.at("beta_range").at(0).get<double>(),
                                     j.at("beta_range").at(1).get<double>());
    return av;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed angle vector: ") + e.what());
  }
}

// ---- kernels ----------------------------------------------------------------

inline json to_json(const kernels::ProductKernel& k) {
  json factors = json::array();
  for (const auto& f : k.factors) {
    json jf{{"index", f.angle_index}, {"form", kernels::to_string(f.form)}};
    if (f.form != kernels::FactorForm::Sin2A) jf["p"] = f.p;
    factors.push_back(std::move(jf));
  }
  return json{{"schema", 1},
              {"n", k.n},
              {"context", kernels::to_string(k.context)},
              {"xi", k.xi},
              {"factors", std::move(factors)}};
}

inline kernels::ProductKernel kernel_from_json(const json& j) {
  try {
    kernels::ProductKernel k;
    k.n = j.at("n").get<int>();
    k.context = kernel_context_from_string(j.at("context").get<std::string>());
    k.xi = j.value("xi", 1.0);
    for (const auto& jf : j.at("factors")) {
      kernels::KernelFactor f;
      f.angle_index = jf.at("index").get<int>();
      f.form = factor_form_from_string(jf.at("form").get<std::string>());
      f.p = jf.value("p", 1);
      k.factors.push_back(f);
    }
    return k;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed kernel: ") + e.what());
  }
}

// ---- exact volumes ----------------------------------------------------------

inline std::string rational_str(const BigRational& r) { return r.str(); }

inline json to_json(const ExactVolume& v) {
  return json{{"schema", 1},
              {"exact", v.str()},
              {"rational", rational_str(v.coeff())},
              {"pi_pow", rational_str(v.pi_pow())},
              {"sqrt_arg", v.sqrt_arg().str()},
              {"float", v.to_double()},
              {"latex", v.latex()}};
}

// ---- integration results ------------------------------------------------------

inline json to_json(const numerics::IntegrationResult& r) {
  json j{{"schema", 1},
         {"method", numerics::to_string(r.method)},
         {"value", r.value},
         {"abs_error_estimate", r.abs_error_estimate},
         {"n_evals", r.n_evals}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

}  // namespace sunvol::serialize
