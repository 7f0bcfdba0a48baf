#ifndef TSL_FORM_HPP
#define TSL_FORM_HPP

#include <array>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "tsl/arith.hpp"
#include "tsl/errors.hpp"
#include "tsl/matrix.hpp"

namespace tsl {

/// Positive definite ternary form ax^2+by^2+cz^2+dyz+ezx+fxy, written [a,b,c,d,e,f].
///
/// Forms built with make_form() are non-classic integral: gcd(a,b,c,d,e,f) = 1.
/// Sublattices (Watson sublattices, Gamma pairs, rescaled neighbours before
/// normalisation) are carried by the same type through make_lattice(), which
/// drops only the primitivity requirement.
///
/// All linear algebra uses the doubled Gram matrix G (even diagonal 2a,2b,2c,
/// off-diagonals d,e,f) so that B(x,y) = x^T G y / 2 never needs fractions.
struct TernaryForm {
    Int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    Mat3 gram() const;
    std::array<Int, 6> coeffs() const { return {a, b, c, d, e, f}; }
    Int content() const;
    bool is_primitive() const { return content() == 1; }
    /// Scale is Z exactly when all cross coefficients are even.
    bool integral_scale() const { return d % 2 == 0 && e % 2 == 0 && f % 2 == 0; }
    Int value(const Vec3& x) const;

    friend auto operator<=>(const TernaryForm&, const TernaryForm&) = default;
};

/// Positive definite binary form ax^2+bxy+cy^2, written [a,b,c].
struct BinaryForm {
    Int a = 0, b = 0, c = 0;

    friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

/// D = 4 det(M_f) = det(G)/2, always a positive integer.
struct Discriminant4 {
    Int value = 0;

    /// The prime support of 2D, i.e. of 8 det(M_f).
    bool conductor_prime(Int p) const { return p == 2 || value % p == 0; }

    friend auto operator<=>(const Discriminant4&, const Discriminant4&) = default;
};

TernaryForm make_form(Int a, Int b, Int c, Int d, Int e, Int f);
TernaryForm make_form(const std::array<Int, 6>& coeffs);
TernaryForm make_lattice(Int a, Int b, Int c, Int d, Int e, Int f);
/// Doubled Gram matrix back to a form; checks evenness and definiteness only.
TernaryForm form_from_gram(const Mat3& g);
BinaryForm make_binary(Int a, Int b, Int c);

bool is_positive_definite(const Mat3& g);
Discriminant4 discriminant4(const TernaryForm& f);
Int discriminant4(const Mat3& g);

/// <1> + [a,2b,c] as the ternary form [1,a,c,2b,0,0].
TernaryForm direct_sum_one(const BinaryForm& ell);
TernaryForm diagonal(Int a, Int b, Int c);
/// Q scaled by an integer factor (makes a lattice, not a primitive form).
TernaryForm scaled(const TernaryForm& f, Int factor);
/// Divide by the content, giving the primitive form on the same space.
TernaryForm primitive_part(const TernaryForm& f);
/// The form of the sublattice spanned by the columns of `basis`.
TernaryForm transform(const TernaryForm& f, const Mat3& basis);

TernaryForm parse_form(std::string_view text);
BinaryForm parse_binary(std::string_view text);
std::string to_string(const TernaryForm& f);
std::string to_string(const BinaryForm& f);
std::ostream& operator<<(std::ostream& os, const TernaryForm& f);
std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

} // namespace tsl

#endif
