#ifndef CHARCALC_RING_HPP
#define CHARCALC_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace charcalc {

enum class Parity { even, odd };

/// A named ring generator with its grading weight. Weights are in abstract
/// grading units; each ring fixes its own convention (the degree-2 or
/// degree-4 meaning of one unit is up to the caller).
struct GeneratorSpec {
  std::string name;
  unsigned weight = 1;
  Parity parity = Parity::even;

  friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
    return a.name == b.name && a.weight == b.weight && a.parity == b.parity;
  }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Exponent vector over the generators of a ring, indexed by declaration
/// order. Odd generators carry exponent at most 1. Monomials compare
/// lexicographically on the exponent vector, which gives every polynomial a
/// canonical term order.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n_generators) : e_(n_generators, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t size() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  void set_exponent(std::size_t i, std::uint32_t e) { e_[i] = e; }
  bool is_unit() const {
    for (auto e : e_)
      if (e != 0) return false;
    return true;
  }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
  std::vector<std::uint32_t> e_;
};

/// Immutable list of generators with unique names. Shared by all polynomials
/// over it; two rings are compatible when their generator lists are equal.
class Ring {
public:
  static RingPtr make(std::vector<GeneratorSpec> generators);

  /// n generators "<prefix>1".."<prefix>n" with weight(<prefix>i) = i, even.
  static RingPtr weighted_even(const std::string& prefix, unsigned n);

  std::size_t size() const { return gens_.size(); }
  const GeneratorSpec& generator(std::size_t i) const { return gens_[i]; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }

  bool has(const std::string& name) const { return index_.count(name) != 0; }
  std::size_t index_of(const std::string& name) const;

  unsigned weight_of(const Monomial& m) const;

  /// Builds a monomial from name -> exponent pairs; validates odd exponents.
  Monomial monomial(const std::map<std::string, std::uint32_t>& exps) const;

  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.gens_ == b.gens_; }

private:
  explicit Ring(std::vector<GeneratorSpec> gens);
  std::vector<GeneratorSpec> gens_;
  std::map<std::string, std::size_t> index_;
};

/// True when the two handles denote structurally equal rings.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace charcalc

#endif
