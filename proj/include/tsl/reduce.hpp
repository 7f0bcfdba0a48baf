#ifndef TSL_REDUCE_HPP
#define TSL_REDUCE_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "tsl/form.hpp"

namespace tsl {

/// A change of basis U with U^T M_f U = M_g, det U = +-1.
using UnimodularMap = Mat3;

/// Default node budget for isometry and automorphism backtracking.
inline constexpr std::uint64_t default_isometry_budget = 50'000'000;

struct Reduction {
    TernaryForm form;
    UnimodularMap map; // columns: the reduced basis in the input coordinates
};

/// Greedy (pairwise + closest-vector) basis reduction. Cheap, not canonical.
Reduction greedy_reduce(const TernaryForm& f);

/// Minkowski reduction: the basis realises the successive minima a <= b <= c,
/// hence |f| <= a, |e| <= a, |d| <= b. Among all such bases the one with the
/// lexicographically largest (d, e, f) is returned, which makes the result a
/// class invariant; the output of this function is idempotent.
Reduction minkowski_reduce(const TernaryForm& f);

/// U with U^T M_f U = M_g when f and g are isometric.
std::optional<UnimodularMap> is_isometric(const TernaryForm& f, const TernaryForm& g,
                                          std::uint64_t budget = default_isometry_budget);

std::vector<UnimodularMap> automorphisms(const TernaryForm& f, std::uint64_t budget = default_isometry_budget);
Int automorphism_order(const TernaryForm& f, std::uint64_t budget = default_isometry_budget);

} // namespace tsl

#endif
