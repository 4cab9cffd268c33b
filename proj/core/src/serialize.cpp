#include "bianchi/serialize.hpp"

#include <stdexcept>
#include <string>

namespace bianchi {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

Integer integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const Rational r = parse_rational(v.get<std::string>());
    if (is_integer(r)) return r.get_num();
  }
  throw std::invalid_argument(std::string("field \"") + key + "\" must be an integer");
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const KElement& z) { return Json::array({to_string(z.x()), to_string(z.y())}); }

Json to_json(const ExtendedMatrix& p) {
  const KMatrix2& a = p.A();
  Json f = p.f().fits_slong_p() ? Json(p.f().get_si()) : Json(p.f().get_str());
  return Json{{"m", p.m()},
              {"f", std::move(f)},
              {"A", Json::array({Json::array({to_json(a(0, 0)), to_json(a(0, 1))}),
                                 Json::array({to_json(a(1, 0)), to_json(a(1, 1))})})}};
}

Json to_json(const OrthoMap& p) {
  Json entries = Json::array();
  for (const Rational& r : p.P.data()) entries.push_back(to_string(r));
  return Json{{"m", p.m}, {"P", std::move(entries)}};
}

Json to_json(const HermitianK& h) {
  return Json{{"s1", to_string(h.s1)}, {"s2", to_string(h.s2)}, {"s", to_json(h.s)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  throw std::invalid_argument("rational must be a string \"p/q\"");
}

KElement kelement_from_json(std::int64_t m, const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("element of K must be a pair [x, y]");
  }
  return KElement(m, rational_from_json(j[0]), rational_from_json(j[1]));
}

ExtendedMatrix extended_matrix_from_json(const Json& j) {
  const std::int64_t m = int_field(j, "m");
  field_params(m);
  const Integer f = integer_field(j, "f");
  const Json& rows = field(j, "A");
  if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || rows[0].size() != 2 ||
      !rows[1].is_array() || rows[1].size() != 2) {
    throw std::invalid_argument("field \"A\" must be a 2x2 array");
  }
  KMatrix2 a(kelement_from_json(m, rows[0][0]), kelement_from_json(m, rows[0][1]),
             kelement_from_json(m, rows[1][0]), kelement_from_json(m, rows[1][1]));
  return ExtendedMatrix::from_scaled(f, a);
}

OrthoMap ortho_map_from_json(const Json& j) {
  const std::int64_t m = int_field(j, "m");
  field_params(m);
  const Json& entries = field(j, "P");
  if (!entries.is_array() || entries.size() != 16) {
    throw std::invalid_argument("field \"P\" must hold 16 rationals");
  }
  OrthoMap p{m, QMatrix(4, 4)};
  for (std::size_t i = 0; i < 16; ++i) p.P(i / 4, i % 4) = rational_from_json(entries[i]);
  return p;
}

HermitianK hermitian_from_json(std::int64_t m, const Json& j) {
  return {rational_from_json(field(j, "s1")), rational_from_json(field(j, "s2")),
          kelement_from_json(m, field(j, "s"))};
}

}  // namespace bianchi
