#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polytoric/geometry.hpp"

namespace polytoric {

/// apply_map(scale(p0(), t), map) reproduces the queried polygon exactly.
struct EquivalenceWitness {
  Rational t;
  UnimodularAffineMap map;

  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

/// The triangle conv{(1,0),(0,1),(-1,-1)}.
const Polygon& p0();

/// Decides whether `p` is a unimodular affine image of t * p0() for some
/// rational t > 0, returning the first witness found.
std::optional<EquivalenceWitness> equiv_scaled_p0(const Polygon& p);

/// Every witness over the six vertex correspondences.
std::vector<EquivalenceWitness> equiv_scaled_p0_all(const Polygon& p);

/// Deterministic pseudo-random unimodular affine map. Matrix entries stay
/// within [-size, size]; the translation is a small rational.
UnimodularAffineMap random_unimodular(std::uint64_t seed, std::int64_t size);

}  // namespace polytoric
