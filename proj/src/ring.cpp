#include "charcalc/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace charcalc {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Ring::Ring(std::vector<GeneratorSpec> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (!valid_identifier(g.name))
      throw std::invalid_argument("Ring: generator name \"" + g.name +
                                  "\" is not an identifier");
    if (g.weight == 0) throw std::invalid_argument("Ring: generator weight must be positive");
    if (!index_.emplace(g.name, i).second)
      throw std::invalid_argument("Ring: duplicate generator \"" + g.name + "\"");
  }
}

RingPtr Ring::make(std::vector<GeneratorSpec> generators) {
  return RingPtr(new Ring(std::move(generators)));
}

RingPtr Ring::weighted_even(const std::string& prefix, unsigned n) {
  std::vector<GeneratorSpec> gens;
  gens.reserve(n);
  for (unsigned i = 1; i <= n; ++i)
    gens.push_back({prefix + std::to_string(i), i, Parity::even});
  return make(std::move(gens));
}

std::size_t Ring::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::invalid_argument("Ring: unknown generator \"" + name + "\"");
  return it->second;
}

unsigned Ring::weight_of(const Monomial& m) const {
  unsigned w = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) w += gens_[i].weight * m.exponent(i);
  return w;
}

Monomial Ring::monomial(const std::map<std::string, std::uint32_t>& exps) const {
  Monomial m(size());
  for (const auto& [name, e] : exps) {
    std::size_t i = index_of(name);
    if (gens_[i].parity == Parity::odd && e > 1)
      throw std::invalid_argument("Ring: odd generator \"" + name + "\" squared");
    m.set_exponent(i, e);
  }
  return m;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += gens_[i].name;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace charcalc
