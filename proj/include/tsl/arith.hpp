#ifndef TSL_ARITH_HPP
#define TSL_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tsl {

using Int = std::int64_t;
using Wide = __int128;

/// floor(sqrt(n)) for n >= 0, exact.
Wide isqrt(Wide n);

inline Wide floor_div(Wide a, Wide b)
{
    Wide q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Wide ceil_div(Wide a, Wide b)
{
    Wide q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Nearest integer to a/b, ties toward +infinity. b > 0.
inline Wide round_div(Wide a, Wide b) { return floor_div(2 * a + b, 2 * b); }

inline Int mod(Int a, Int m)
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mulmod(Int a, Int b, Int m);
Int powmod(Int base, Int exp, Int m);
/// Inverse of a modulo m; a must be a unit.
Int invmod(Int a, Int m);
Int ipow(Int base, unsigned exp);

bool is_prime(Int n);
/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);
std::vector<Int> prime_divisors(Int n);
/// p-adic valuation of n != 0.
int valuation(Int n, Int p);
bool is_squarefree(Int n);

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
    Rational(Int num = 0, Int den = 1);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const { return Wide(num_) * o.den_ < Wide(o.num_) * den_; }

    std::string str() const;

private:
    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace tsl

#endif
