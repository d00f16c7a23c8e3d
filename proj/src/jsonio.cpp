#include "charcalc/jsonio.hpp"

namespace charcalc {

using nlohmann::json;

json poly_to_json(const GradedPoly& p) {
  json generators = json::array();
  for (const auto& g : p.ring()->generators())
    generators.push_back({{"name", g.name},
                          {"weight", g.weight},
                          {"parity", g.parity == Parity::even ? "even" : "odd"}});
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < p.ring()->size(); ++i)
      if (m.exponent(i) > 0) mono[p.ring()->generator(i).name] = m.exponent(i);
    terms.push_back({{"monomial", mono}, {"num", c.num_string()}, {"den", c.den_string()}});
  }
  return {{"generators", generators}, {"terms", terms}};
}

GradedPoly poly_from_json(const json& j) {
  std::vector<GeneratorSpec> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back({g.at("name").get<std::string>(), g.at("weight").get<unsigned>(),
                    g.at("parity").get<std::string>() == "odd" ? Parity::odd : Parity::even});
  RingPtr ring = Ring::make(std::move(gens));
  GradedPoly p(ring);
  for (const auto& t : j.at("terms")) {
    std::map<std::string, std::uint32_t> exps;
    for (const auto& [name, e] : t.at("monomial").items())
      exps[name] = e.get<std::uint32_t>();
    Rational c(mpz_class(t.at("num").get<std::string>()),
               mpz_class(t.at("den").get<std::string>()));
    p.add_term(ring->monomial(exps), c);
  }
  return p;
}

}  // namespace charcalc
