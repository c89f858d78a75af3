#include "invharm/serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "invharm/errors.hpp"

namespace invharm {

using nlohmann::json;

namespace {

Integer parse_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (!v.is_string()) throw DomainError("json: coefficient must be a decimal string");
  Integer z;
  if (z.set_str(v.get<std::string>(), 10) != 0) throw DomainError("json: bad integer '" + v.get<std::string>() + "'");
  return z;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
}

}  // namespace

std::string to_json(const SchurSeries& s) {
  json terms = json::array();
  for (const auto& [key, coeff] : s.terms())
    terms.push_back({{"q", key.grade}, {"lambda", key.lambda.parts()}, {"coeff", coeff.get_str()}});
  return json{{"n", s.degree_n()}, {"terms", terms}}.dump();
}

SchurSeries schur_series_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    SchurSeries s(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
      s.add(t.at("q").get<int>(), Partition(t.at("lambda").get<std::vector<int>>()), parse_integer(t.at("coeff")));
    return s;
  } catch (const json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
}

std::string to_json(const QPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return json{{"coefficients", coeffs}}.dump();
}

QPoly qpoly_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(parse_integer(c));
    return QPoly(std::move(coeffs));
  } catch (const json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
}

std::string to_csv(const QPoly& p) {
  std::ostringstream out;
  out << "degree,dimension\n";
  for (int d = 0; d <= p.degree(); ++d) out << d << ',' << p.coefficient(d).get_str() << '\n';
  return out.str();
}

std::string to_csv(const SchurSeries& s) {
  std::ostringstream out;
  out << "q,lambda,coeff\n";
  for (const auto& [key, coeff] : s.terms()) {
    out << key.grade << ',';
    for (std::size_t i = 0; i < key.lambda.parts().size(); ++i) out << (i ? " " : "") << key.lambda.parts()[i];
    out << ',' << coeff.get_str() << '\n';
  }
  return out.str();
}

std::string coefficient_list(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) out += (d ? "," : "") + p.coefficient(d).get_str();
  return out;
}

}  // namespace invharm
