// Independent brute-force references. Nothing here calls the enumeration or
// reduction code under test.
#ifndef TSL_TEST_ORACLES_HPP
#define TSL_TEST_ORACLES_HPP

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "tsl/form.hpp"

namespace oracle {

using tsl::Int;
using tsl::Mat3;
using tsl::TernaryForm;
using tsl::Vec3;

inline Int q_value(const TernaryForm& f, Int x, Int y, Int z)
{
    return f.a * x * x + f.b * y * y + f.c * z * z + f.d * y * z + f.e * z * x + f.f * x * y;
}

/// Box half-widths with Q(x) <= bound inside: |x_i| <= sqrt(bound * (M^-1)_ii),
/// where (M^-1)_ii = 2 adj(G)_ii / det(G).
inline std::array<Int, 3> box(const TernaryForm& f, Int bound)
{
    const Mat3 g = f.gram();
    const Mat3 adj = tsl::adjugate3(g);
    const double det = static_cast<double>(tsl::det3(g));
    std::array<Int, 3> r{};
    for (int i = 0; i < 3; ++i)
        r[i] = static_cast<Int>(std::ceil(std::sqrt(static_cast<double>(bound) * 2.0 * adj(i, i) / det)));
    return r;
}

/// counts[n] = #{x in box : Q(x) = n} for n <= bound.
inline std::vector<Int> naive_theta(const TernaryForm& f, Int bound)
{
    const auto r = box(f, bound);
    std::vector<Int> counts(static_cast<std::size_t>(bound) + 1, 0);
    for (Int x = -r[0]; x <= r[0]; ++x)
        for (Int y = -r[1]; y <= r[1]; ++y)
            for (Int z = -r[2]; z <= r[2]; ++z) {
                const Int v = q_value(f, x, y, z);
                if (v <= bound) ++counts[static_cast<std::size_t>(v)];
            }
    return counts;
}

inline Int naive_rep(const TernaryForm& f, Int n) { return naive_theta(f, n)[static_cast<std::size_t>(n)]; }

inline Int naive_binary(Int a, Int b, Int c, Int n)
{
    const Int r = static_cast<Int>(std::ceil(std::sqrt(4.0 * std::max(a, c) * n / static_cast<double>(4 * a * c - b * b)))) + 1;
    Int count = 0;
    for (Int x = -r; x <= r; ++x)
        for (Int y = -r; y <= r; ++y)
            if (a * x * x + b * x * y + c * y * y == n) ++count;
    return count;
}

/// Random primitive positive definite forms with 4 det(M_f) <= max_disc.
inline std::vector<TernaryForm> random_forms(std::size_t count, Int max_disc, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> diag(1, 14), cross(-14, 14);
    std::vector<TernaryForm> out;
    while (out.size() < count) {
        TernaryForm f{diag(rng), diag(rng), diag(rng), cross(rng), cross(rng), cross(rng)};
        const Mat3 g = f.gram();
        if (!tsl::is_positive_definite(g) || !f.is_primitive()) continue;
        if (tsl::discriminant4(g) > max_disc) continue;
        out.push_back(f);
    }
    return out;
}

/// Brute-force Euler criterion for the Legendre symbol.
inline int legendre(Int a, Int p)
{
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    for (Int x = 1; x < p; ++x)
        if (x * x % p == a) return 1;
    return -1;
}

/// Residues mod p of { x : Q(x+z) = Q(z) mod p for all z }, straight from the definition.
inline std::set<std::array<Int, 3>> lambda_residues(const TernaryForm& f, Int p)
{
    std::set<std::array<Int, 3>> out;
    for (Int x = 0; x < p; ++x)
        for (Int y = 0; y < p; ++y)
            for (Int z = 0; z < p; ++z) {
                bool ok = true;
                for (Int u = 0; u < p && ok; ++u)
                    for (Int v = 0; v < p && ok; ++v)
                        for (Int w = 0; w < p && ok; ++w) {
                            const Int lhs = q_value(f, x + u, y + v, z + w), rhs = q_value(f, u, v, w);
                            ok = ((lhs - rhs) % p) == 0;
                        }
                if (ok) out.insert({x, y, z});
            }
    return out;
}

/// Anisotropy of the unimodular Jordan component mod odd p: Q vanishes mod p
/// only on the radical of G mod p.
inline bool unimodular_anisotropic(const TernaryForm& f, Int p)
{
    const Mat3 g = f.gram();
    Int zeros = 0, radical = 0;
    for (Int x = 0; x < p; ++x)
        for (Int y = 0; y < p; ++y)
            for (Int z = 0; z < p; ++z) {
                if (q_value(f, x, y, z) % p == 0) ++zeros;
                const Vec3 v(x, y, z);
                const Vec3 gv = g * v;
                if (gv[0] % p == 0 && gv[1] % p == 0 && gv[2] % p == 0) ++radical;
            }
    return zeros == radical;
}

} // namespace oracle

#endif
