#pragma once

#include "symdec/dispersion.hpp"
#include "symdec/int_dist.hpp"
#include "symdec/oracle.hpp"
#include "symdec/sums.hpp"

#include "json.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symdec {

using Json = nlohmann::ordered_json;

/// {"atoms": [{"x": <integer>, "p": "<num>/<den>"}, ...]}. Probabilities must
/// be fraction strings; JSON numbers are rejected with Error(kParseError).
IntDist distribution_from_json(const Json& j);
IntDist parse_distribution(std::string_view text);
Json to_json(const IntDist& d);

/// A JSON array of fraction strings, e.g. ["2/3", "1/3"].
std::vector<Rational> parse_probability_list(std::string_view text);

/// Rationals serialize as fraction strings, doubles as JSON numbers.
Json to_json(const Number& n);
Json to_json(const MedianInterval& m);
Json to_json(const DispersionResult& r);
Json to_json(const MainInequalityReport& r);
Json to_json(const ProofChainTrace<Rational>& t);
Json to_json(const ProofChainTrace<double>& t);
Json to_json(const OracleReport& r);
Json to_json(const ConcentrationReport& r);
Json to_json(const SignSearchReport& r);
Json to_json(const FloatPmf& pmf);

/// "n,q_n,ratio" header plus one LF-terminated row per entry; shortest
/// round-trip decimal formatting independent of the locale.
std::string llt_csv(std::span<const LltScanRow> rows);

}  // namespace symdec
