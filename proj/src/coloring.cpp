#include <array>
#include <string>

#include "eulab/bounds.hpp"
#include "eulab/error.hpp"

namespace eulab::bounds {

namespace {

constexpr std::int64_t kMaxRingSize = 20'000'000;

ResidueRing prime_power_ring(EInt pi, int k) {
  if (k < 1) throw DomainError("coloring: exponent must be >= 1");
  const EInt modulus = pow(pi, static_cast<unsigned>(k));
  if (norm_wide(modulus) > kMaxRingSize) throw DomainError("coloring: residue ring too large to enumerate");
  return ResidueRing(modulus);
}

}  // namespace

int Coloring::group_of(EInt x) const {
  const int g = assignment[static_cast<std::size_t>(ring.index_of(x))];
  if (g < 0) throw DomainError("Coloring: " + to_string(x) + " is not a reduced residue");
  return g;
}

Coloring antipodal_coloring(EInt pi, int k) {
  if (norm_wide(pi) % 2 == 0) throw DomainError("antipodal_coloring: prime " + to_string(pi) + " has even norm");
  Coloring c{prime_power_ring(pi, k), 2, {}};
  const auto size = static_cast<std::size_t>(c.ring.size());
  constexpr std::int8_t kUnset = 2;
  c.assignment.assign(size, kUnset);
  for (std::size_t i = 0; i < size; ++i) {
    const EInt r = c.ring.representative(static_cast<std::int64_t>(i));
    if (divides(pi, r)) {
      c.assignment[i] = -1;
      continue;
    }
    if (c.assignment[i] != kUnset) continue;
    c.assignment[i] = 0;
    c.assignment[static_cast<std::size_t>(c.ring.index_of(-r))] = 1;
  }
  return c;
}

Coloring twist_coloring(EInt pi, EInt rho0) {
  if (divides(pi, rho0)) throw DomainError("twist_coloring: pi divides rho0");
  const EInt one_plus = EInt{1, 0} + rho0;
  if (one_plus.is_zero()) throw DomainError("twist_coloring: 1 + rho0 == 0");
  const int delta = valuation(one_plus, pi);
  Coloring c{prime_power_ring(pi, delta + 1), 3, {}};
  const ResidueRing& ring = c.ring;
  const EInt forward = ring.reduce(-rho0);
  const EInt backward = ring.reduce(-ring.inverse(rho0));
  const auto size = static_cast<std::size_t>(ring.size());
  constexpr std::int8_t kUnset = 3;
  c.assignment.assign(size, kUnset);
  for (std::size_t i = 0; i < size; ++i) {
    const EInt r = ring.representative(static_cast<std::int64_t>(i));
    if (divides(pi, r)) {
      c.assignment[i] = -1;
      continue;
    }
    const auto j1 = static_cast<std::size_t>(ring.index_of(forward * r));
    const auto j2 = static_cast<std::size_t>(ring.index_of(backward * r));
    if (j1 == i || j2 == i)
      throw std::logic_error("twist_coloring: r == -rho0*r mod pi^(delta+1), contradicting delta");
    std::array<bool, 3> used{};
    for (auto j : {j1, j2})
      if (c.assignment[j] >= 0 && c.assignment[j] < 3) used[static_cast<std::size_t>(c.assignment[j])] = true;
    std::int8_t g = 0;
    while (used[static_cast<std::size_t>(g)]) ++g;
    c.assignment[i] = g;
  }
  return c;
}

bool coloring_separates(const Coloring& c, EInt multiplier) {
  const EInt m = c.ring.reduce(multiplier);
  for (std::size_t i = 0; i < c.assignment.size(); ++i) {
    if (c.assignment[i] < 0) continue;
    const EInt r = c.ring.representative(static_cast<std::int64_t>(i));
    const auto j = static_cast<std::size_t>(c.ring.index_of(m * r));
    if (c.assignment[j] == c.assignment[i]) return false;
  }
  return true;
}

}  // namespace eulab::bounds
