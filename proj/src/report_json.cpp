#include "trinom/report_json.hpp"

namespace trinom {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

mpz_class integer_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 0);
  const Json& v = j.at(key);
  if (v.is_string()) {
    mpz_class out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw ParseError(std::string("field \"") + key + "\" is not an integer", 0);
    return out;
  }
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<std::int64_t>()));
  throw ParseError(std::string("field \"") + key + "\" is not an integer", 0);
}

std::string rational(const Dyadic& d) { return d.to_rational().get_str(); }

}  // namespace

Json to_json(const Trinomial& f) {
  return Json{{"c1", f.c1.get_str()}, {"c2", f.c2.get_str()}, {"c3", f.c3.get_str()}, {"a2", str(f.a2)}, {"a3", str(f.a3)}};
}

Trinomial trinomial_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("trinomial must be a JSON object", 0);
  const mpz_class a2 = integer_field(j, "a2");
  const mpz_class a3 = integer_field(j, "a3");
  if (!a2.fits_slong_p() || !a3.fits_slong_p()) throw DomainError("exponent exceeds 2^62");
  return Trinomial(integer_field(j, "c1"), integer_field(j, "c2"), integer_field(j, "c3"), a2.get_si(), a3.get_si());
}

Json to_json(const SolvedRoot& r) {
  Json j{{"num", r.value.get_num().get_str()},
         {"den", r.value.get_den().get_str()},
         {"degenerate", r.degenerate},
         {"certified", r.certified},
         {"bracket_lo", rational(r.bracket.lo())},
         {"bracket_hi", rational(r.bracket.hi())},
         {"iterate", r.target == IterateTarget::f ? "f" : "f'"},
         {"source", to_string(r.source)}};
  if (r.source == BracketSource::series) {
    j["series"] = to_string(r.kind);
    j["ell"] = str(r.ell);
    j["alpha_certified"] = r.alpha_certified;
  }
  return j;
}

Json to_json(const SolveReport& r) {
  Json roots = Json::array();
  for (const SolvedRoot& z : r.roots) roots.push_back(to_json(z));
  return Json{{"m", str(r.m)}, {"ill_conditioned", r.ill_conditioned}, {"messages", r.messages}, {"roots", roots}};
}

Json to_json(const RootTally& t) {
  return Json{{"positive", str(t.positive)}, {"negative", str(t.negative)}, {"total", str(t.total())},
              {"degenerate", str(t.degenerate)}};
}

Json to_json(const SignResult& s) {
  return Json{{"sign", str(to_int(s.sign))}, {"provenance", to_string(s.provenance)}, {"bits_used", str(s.bits_used)},
              {"fallback", s.fallback}};
}

}  // namespace trinom
