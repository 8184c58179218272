#pragma once
// JSON forms of the library's values and reports. JSON is the canonical
// output; render_text flattens any of these documents for terminals.
//
// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings. Readers accept both.

#include "okc/compare/compare.hpp"
#include "okc/divisor/divisor.hpp"
#include "okc/lazard/lazard.hpp"

#include <json.hpp>

#include <string>

namespace okc::io {

using Json = nlohmann::ordered_json;

Json bigint_json(const BigInt& c);
/// Throws std::invalid_argument on anything but an integer or a decimal string.
BigInt bigint_from_json(const Json& j);

/// [{degree, monomials, rank, torsion, basis}] with homological degrees.
Json lazard_json(const LazardRing& l);

/// {"c1,c2": coeff, ...}, keyed by the exponents of x1..xs.
Json k_poly_json(const KClass& k);
KClass k_class_from_json(const MultiProj& p, const Json& j);

/// {space: {dims}, beta_terms: [{exp, poly}]}, beta exponents ascending.
Json bm_class_json(const BMClass& a);
/// Throws std::invalid_argument on malformed input, including exponents
/// beyond a factor's dimension.
BMClass bm_class_from_json(const Json& j);

/// {"dims": [...], "components": [{"multidegree": [...], "multiplicity": n}]}
Json snc_config_json(const SNCConfig& d);
/// Throws std::invalid_argument on malformed input (and whatever SNCConfig
/// rejects).
SNCConfig snc_config_from_json(const Json& j);

Json divisor_report_json(const SNCConfig& d, const DivisorClassResult& res, const RecursionReport& rec);
Json triangle_report_json(const CompleteIntersection& x, const FundamentalTriangleReport& rep);

/// One "path: value" line per leaf, in document order.
std::string render_text(const Json& j);

}  // namespace okc::io
