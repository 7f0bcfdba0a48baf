#include "tsl/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace tsl {

Wide isqrt(Wide n)
{
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n < 2) return n;
    Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Int mulmod(Int a, Int b, Int m)
{
    Wide r = (Wide(a) * b) % m;
    if (r < 0) r += m;
    return static_cast<Int>(r);
}

Int powmod(Int base, Int exp, Int m)
{
    Int result = 1 % m;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

Int invmod(Int a, Int m)
{
    Int g = m, x = 0, x1 = 1, r = mod(a, m);
    while (r != 0) {
        Int q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("invmod: not a unit");
    return mod(x, m);
}

Int ipow(Int base, unsigned exp)
{
    Int r = 1;
    while (exp--) r *= base;
    return r;
}

bool is_prime(Int n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(Int n)
{
    std::vector<std::pair<Int, int>> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

int valuation(Int n, Int p)
{
    if (n == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_squarefree(Int n)
{
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

Rational::Rational(Int num, Int den)
{
    if (den == 0) throw std::domain_error("Rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

namespace {
Rational from_wide(Wide num, Wide den)
{
    Wide a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    return Rational(static_cast<Int>(num / a), static_cast<Int>(den / a));
}
} // namespace

Rational Rational::operator+(const Rational& o) const
{
    return from_wide(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const
{
    return from_wide(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const
{
    return from_wide(Wide(num_) * o.num_, Wide(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const
{
    if (o.num_ == 0) throw std::domain_error("Rational division by zero");
    Wide n = Wide(num_) * o.den_, d = Wide(den_) * o.num_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return from_wide(n, d);
}

std::string Rational::str() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace tsl
