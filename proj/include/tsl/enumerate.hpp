#ifndef TSL_ENUMERATE_HPP
#define TSL_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tsl/form.hpp"

namespace tsl {

/// Candidate-node budget shared by every enumeration entry point.
inline constexpr std::uint64_t default_vector_budget = 100'000'000;

struct RepResult {
    Int n = 0;
    Int count = 0;
    /// R(n,f), sorted lexicographically, when requested.
    std::optional<std::vector<Vec3>> solutions;
};

struct ThetaPrefix {
    Int bound = 0;
    /// counts[n] = r(n,f) for 0 <= n <= bound.
    std::vector<Int> counts;
};

struct ShortVector {
    Vec3 x;
    Int value = 0;
};

/// r(n,f): exact count of integer solutions of f(x) = n.
RepResult rep_count(const TernaryForm& f, Int n, bool keep_solutions = false,
                    std::uint64_t budget = default_vector_budget);
Int rep_count_binary(const BinaryForm& ell, Int n);
ThetaPrefix theta_prefix(const TernaryForm& f, Int bound, std::uint64_t budget = default_vector_budget);
/// All x with 0 < f(x) <= bound, both signs, sorted by (value, lexicographic triple).
std::vector<ShortVector> short_vectors(const TernaryForm& f, Int bound,
                                       std::uint64_t budget = default_vector_budget);

/// Memoised r(k^2, f) for increasing k; used wherever only squares matter.
class SquareCounts {
public:
    explicit SquareCounts(const TernaryForm& f);
    Int operator()(Int k);
    const TernaryForm& form() const { return form_; }

private:
    TernaryForm form_;
    TernaryForm reduced_;
    std::vector<Int> cache_;
};

namespace detail {

/// Fincke-Pohst layers for x^T G x <= 2*bound, all integer arithmetic. The
/// visitor receives (x, value) for each lattice point, including 0.
template <typename Visitor>
void for_each_in_ellipsoid(const Mat3& g, Int bound, std::uint64_t budget, Visitor&& visit);

/// Points with x^T G x == 2*n exactly; the innermost coordinate is solved, not scanned.
template <typename Visitor>
void for_each_on_level(const Mat3& g, Int n, std::uint64_t budget, Visitor&& visit);

} // namespace detail

} // namespace tsl

#include "tsl/detail/ellipsoid.ipp"

#endif
