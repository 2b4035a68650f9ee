#include "bessel/recurrence.hpp"

#include <stdexcept>

#include "json.hpp"

namespace bessel {
namespace {

using nlohmann::json;

json rational_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  const mpz_class num(j.at("num").get<std::string>(), 10);
  const mpz_class den(j.at("den").get<std::string>(), 10);
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json poly_json(const Polynomial<Rational>& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_json(c));
  return out;
}

Polynomial<Rational> poly_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& item : j) c.push_back(rational_from_json(item));
  return Polynomial<Rational>(std::move(c));
}

}  // namespace

std::string form_to_json(const YLinearForm<Rational>& form) {
  const json out{{"k", rational_json(form.k)},
                 {"ell", form.ell},
                 {"P", poly_json(form.P)},
                 {"Q", poly_json(form.Q)}};
  return out.dump();
}

YLinearForm<Rational> form_from_json(const std::string& text) {
  const json j = json::parse(text);
  YLinearForm<Rational> form{rational_from_json(j.at("k")), j.at("ell").get<int>(),
                             poly_from_json(j.at("P")), poly_from_json(j.at("Q"))};
  if (form.ell < 1) throw std::invalid_argument("ell must be >= 1");
  return form;
}

}  // namespace bessel
