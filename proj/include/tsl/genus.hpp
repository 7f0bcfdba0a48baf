#ifndef TSL_GENUS_HPP
#define TSL_GENUS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tsl/form.hpp"

namespace tsl {

struct GenusClass {
    TernaryForm form; // Minkowski-reduced representative
    Int automorphism_order = 0;
};

struct GenusData {
    TernaryForm base;
    std::vector<GenusClass> classes;
    Rational mass;
    std::vector<Int> neighbor_primes;
    /// Position of the class of `base` in `classes`.
    std::size_t base_index = 0;

    std::size_t class_number() const { return classes.size(); }
};

struct GenusOptions {
    /// Number of neighbour primes, taken as the smallest primes not dividing 2D.
    int prime_count = 2;
    std::size_t max_classes = 64;
};

/// The p-neighbours of f, one per isotropic line mod p, each Minkowski-reduced.
std::vector<TernaryForm> p_neighbors(const TernaryForm& f, Int p);

/// Smallest `count` primes not dividing 2D.
std::vector<Int> neighbor_primes(const TernaryForm& f, int count);

GenusData enumerate_genus(const TernaryForm& f, const GenusOptions& options = {});

/// r(n, gen f) = (1/w) sum r(n,g)/o(g).
Rational genus_average_rep(const GenusData& g, Int n);

struct SquareWitness {
    Int n = 0;
    std::size_t first = 0; // class indices whose r(n^2,.) differ
    std::size_t second = 0;
};

struct SquareDistinction {
    bool indistinguishable = true;
    std::optional<SquareWitness> witness;
};

/// Compares r(n^2, .) across all classes for n <= bound. With `conductor_only`
/// the scan is restricted to n whose prime factors all divide 2D.
SquareDistinction indistinguishable_by_squares(const GenusData& g, Int bound, bool conductor_only = false);

} // namespace tsl

#endif
