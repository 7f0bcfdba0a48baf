#ifndef TSL_LOCAL_HPP
#define TSL_LOCAL_HPP

#include <utility>
#include <vector>

#include "tsl/form.hpp"

namespace tsl {

/// Jacobi symbol (a/m) for odd positive m.
int jacobi(Int a, Int m);

/// Hecke weight h_p(d, lambda) = (p^{l+1}-1)/(p-1) - (-D/p) (p^l-1)/(p-1) for p not dividing 2D.
/// (-D/p) equals (-d/p) because D = 4d.
Int hecke_weight(Discriminant4 d, Int p, int lambda);

/// n = n1 * n2 with every prime of n1 dividing 2D and gcd(n2, 2D) = 1.
struct SquareFactorization {
    Int n = 1;
    Int n1 = 1;
    Int n2 = 1;
    /// (p, ord_p(n)) for the primes of n2, ascending.
    std::vector<std::pair<Int, int>> exponents;
};

SquareFactorization split_by_conductor(Int n, Discriminant4 d);

/// One rank-one piece of the canonical odd-p Jordan splitting. Within a block
/// of equal valuation every piece carries class +1 except the last, which
/// carries the class of the block determinant.
struct JordanComponent {
    int valuation = 0;
    int unit_class = 1; // +1 square unit, -1 non-square unit
    int dimension = 1;

    friend bool operator==(const JordanComponent&, const JordanComponent&) = default;
};

struct JordanOdd {
    Int p = 0;
    std::vector<JordanComponent> components;

    /// Components of the given valuation.
    std::vector<JordanComponent> block(int valuation) const;
};

/// Diagonalisation of the Gram matrix M_f over Z_p, p odd. Arithmetic is exact
/// modulo p^k with k = ord_p(D) + 3 + extra_precision.
JordanOdd jordan_odd(const TernaryForm& f, Int p, int extra_precision = 0);

/// True iff the valuation-zero Jordan block of L_p is anisotropic.
bool unimodular_part_anisotropic(const TernaryForm& f, Int p);

/// L_p ~ <Delta_p, p, -p>: valuations (0,1,1), non-square unit block, and the
/// p-modular plane hyperbolic.
bool terminal_condition_at(const TernaryForm& f, Int p);

} // namespace tsl

#endif
