#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of polynomials, log values, reports and convention sets.
 *
 * Multiprecision reals are written as decimal strings so that no digits are
 * lost to binary64; residuals are plain numbers.
 */

#include "multigamma/conventions.hpp"
#include "multigamma/identities.hpp"
#include "multigamma/log_value.hpp"
#include "multigamma/multiplication.hpp"
#include "multigamma/rational_poly.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <type_traits>

namespace multigamma {

using Json = nlohmann::ordered_json;

/// Scientific notation with `digits` significant digits; zero prints as "0".
template <class Real>
std::string format_real(const Real& x, unsigned digits) {
  if (x == 0) return "0";
  std::ostringstream os;
  os << std::scientific << std::setprecision(static_cast<int>(digits > 0 ? digits - 1 : 0)) << x;
  return os.str();
}

/// "a", "a+bi" or "a-bi" at the given digits.
template <class Real>
std::string format_complex(const Complex<Real>& z, unsigned digits) {
  if (z.im == 0) return format_real(z.re, digits);
  const std::string im = format_real(z.im < 0 ? Real(-z.im) : z.im, digits);
  return format_real(z.re, digits) + (z.im < 0 ? "-" : "+") + im + "i";
}

inline Json to_json(const RationalPoly& poly) {
  Json coeffs = Json::array();
  for (const auto& c : poly.coeffs())
    coeffs.push_back(Json::array({numerator_of(c).str(), denominator_of(c).str()}));
  return Json{{"coeffs", coeffs}};
}

inline RationalPoly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
    const BigInt num(pair[0].get<std::string>()), den(pair[1].get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator");
    coeffs.push_back(Rational(num, den));
  }
  return RationalPoly(std::move(coeffs));
}

template <class Real>
Json to_json(const LogValue<Real>& v, unsigned digits) {
  Json j{{"re", format_real(v.value.re, digits)},
         {"im", format_real(v.value.im, digits)},
         {"method", method_name(v.method)},
         {"err_est", format_real(v.err_est, 3)}};
  if (v.discrepancy) j["discrepancy"] = format_real(*v.discrepancy, 3);
  return j;
}

inline Json to_json(const IdentityReport& rep) {
  Json params{{"r", rep.r}};
  if (rep.p) params["p"] = *rep.p;
  Json j{{"identity", rep.identity}, {"params", params}, {"residual", "exact"}, {"pass", rep.pass}};
  if (rep.witness) j["witness"] = *rep.witness;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

template <class Real>
Json to_json(const ResidualReport<Real>& rep, unsigned digits) {
  Json params{{"r", rep.r}, {"p", rep.p}, {"z", format_complex(rep.z, digits)}};
  return Json{{"identity", rep.identity},
              {"params", params},
              {"residual", static_cast<double>(rep.residual)},
              {"pass", rep.pass}};
}

inline Json to_json(const ConventionEvidence& e) {
  return Json{{"check", e.check},       {"s_phi", e.s_phi},       {"sigma_phi", to_string(e.sigma_phi)},
              {"s_R", e.s_R},           {"residual", e.residual}, {"pass", e.pass}};
}

inline Json to_json(const ConventionSet& conv) {
  conv.require_resolved();
  Json evidence = Json::array();
  for (const auto& e : conv.evidence) evidence.push_back(to_json(e));
  return Json{{"s_phi", conv.s_phi},
              {"sigma_phi", to_string(conv.sigma_phi)},
              {"s_R", conv.s_R},
              {"evidence", evidence}};
}

inline ConventionSet conventions_from_json(const Json& j) {
  const auto sigma = j.at("sigma_phi");
  const Rational sigma_phi = sigma.is_string() ? parse_rational(sigma.get<std::string>()) : Rational(sigma.get<long>());
  ConventionSet conv = ConventionSet::resolved_with(j.at("s_phi").get<int>(), sigma_phi, j.at("s_R").get<int>());
  if (j.contains("evidence")) {
    for (const auto& e : j.at("evidence")) {
      const auto es = e.at("sigma_phi");
      conv.evidence.push_back({e.at("check").get<std::string>(), e.at("s_phi").get<int>(),
                               es.is_string() ? parse_rational(es.get<std::string>()) : Rational(es.get<long>()),
                               e.at("s_R").get<int>(), e.at("residual").get<double>(), e.at("pass").get<bool>()});
    }
  }
  return conv;
}

inline ConventionSet load_conventions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConventionError("conventions file not found: " + path);
  try {
    return conventions_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw ConventionError("malformed conventions file " + path + ": " + e.what());
  }
}

inline void save_conventions(const ConventionSet& conv, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(conv).dump(2) << "\n";
}

}  // namespace multigamma
