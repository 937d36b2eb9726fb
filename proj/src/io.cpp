#include "symdec/io.hpp"

#include "symdec/error.hpp"


namespace symdec {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
}

Rational probability_from_json(const Json& p) {
  if (!p.is_string())
    throw Error(ErrorCode::kParseError,
                "probabilities must be fraction strings such as \"1/3\", got " + p.dump());
  return parse_rational(p.get<std::string>());
}

template <typename Scalar>
Json vector_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(Number(x)));
  return out;
}

template <typename Scalar>
Json trace_json(const ProofChainTrace<Scalar>& t) {
  return Json{{"a", to_json(Number(t.a))},
              {"a_prime", to_json(Number(t.a_prime))},
              {"p", vector_json(t.p_vec)},
              {"v", vector_json(t.v_vec)},
              {"v_sorted", vector_json(t.v_sorted_vec)},
              {"w", vector_json(t.w_vec)},
              {"dot_pv", to_json(Number(t.dot_pv))},
              {"dot_pv_sorted", to_json(Number(t.dot_pv_sorted))},
              {"dot_pw", to_json(Number(t.dot_pw))},
              {"chain_holds", t.chain_holds}};
}

}  // namespace

IntDist distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array())
    throw Error(ErrorCode::kParseError, "expected an object with an \"atoms\" array");
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    if (!a.is_object() || !a.contains("x") || !a.contains("p"))
      throw Error(ErrorCode::kParseError, "each atom needs \"x\" and \"p\": " + a.dump());
    const auto& x = a.at("x");
    if (!x.is_number_integer())
      throw Error(ErrorCode::kParseError, "atom value must be an integer, got " + x.dump());
    atoms.push_back({x.get<std::int64_t>(), probability_from_json(a.at("p"))});
  }
  return IntDist::from_atoms(std::move(atoms));
}

IntDist parse_distribution(std::string_view text) {
  return distribution_from_json(parse_json(text));
}

Json to_json(const IntDist& d) {
  Json atoms = Json::array();
  for (const auto& a : d.atoms()) atoms.push_back(Json{{"x", a.x}, {"p", to_string(a.p)}});
  return Json{{"atoms", std::move(atoms)}};
}

std::vector<Rational> parse_probability_list(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected a JSON array of fractions");
  std::vector<Rational> probs;
  for (const auto& p : j) probs.push_back(probability_from_json(p));
  return probs;
}

Json to_json(const Number& n) {
  if (const auto* r = std::get_if<Rational>(&n)) return to_string(*r);
  return std::get<double>(n);
}

Json to_json(const MedianInterval& m) {
  return Json{{"lo", to_string(m.lo)}, {"hi", to_string(m.hi)}};
}

Json to_json(const DispersionResult& r) {
  Json minimizers = Json::array();
  minimizers.push_back(to_json(r.minimizer_lo));
  if (r.is_interval()) minimizers.push_back(to_json(r.minimizer_hi));
  Json out{{"value", to_json(r.value)},
           {"minimizers", std::move(minimizers)},
           {"interval", r.is_interval()},
           {"exact", r.exact}};
  if (!r.exact) out["tolerance"] = r.tolerance;
  return out;
}

Json to_json(const MainInequalityReport& r) {
  return Json{{"d_f_x", to_json(r.d_f_x)},
              {"d_f_x_plus", to_json(r.d_f_x_plus)},
              {"holds", r.holds},
              {"equality", r.equality},
              {"equivalence_explains_equality", r.equivalence_explains_equality}};
}

Json to_json(const ProofChainTrace<Rational>& t) { return trace_json(t); }
Json to_json(const ProofChainTrace<double>& t) { return trace_json(t); }

Json to_json(const OracleReport& r) {
  Json minimizers = Json::array();
  for (const auto& d : r.minimizers) minimizers.push_back(to_json(d));
  return Json{{"num_assignments", r.num_assignments},
              {"min_value", to_string(r.min_value)},
              {"plus_form_value", to_string(r.plus_form_value)},
              {"theorem_holds", r.theorem_holds},
              {"equality_cases_all_equivalent", r.equality_cases_all_equivalent},
              {"minimizers", std::move(minimizers)}};
}

Json to_json(const ConcentrationReport& r) {
  return Json{{"argmax_x", r.argmax_x},
              {"q_max", to_json(r.q_max)},
              {"mode", r.exact ? "exact" : "float"}};
}

Json to_json(const SignSearchReport& r) {
  return Json{{"lhs_q", to_string(r.lhs_q)},
              {"rhs_q_best", to_string(r.rhs_q_best)},
              {"rhs_q_all_plus", to_string(r.rhs_q_all_plus)},
              {"best_signs", r.best_signs},
              {"patterns_searched", r.patterns_searched},
              {"inequality_holds", r.inequality_holds}};
}

Json to_json(const FloatPmf& pmf) {
  return Json{{"offset", pmf.offset},
              {"mass", pmf.mass},
              {"total_mass", pmf.total_mass()},
              {"mass_drift", pmf.mass_drift()}};
}

std::string llt_csv(std::span<const LltScanRow> rows) {
  std::string out = "n,q_n,ratio\n";
  for (const auto& row : rows)
    out += std::to_string(row.n) + "," + format_double(row.q_n) + "," + format_double(row.ratio) +
           "\n";
  return out;
}

}  // namespace symdec
