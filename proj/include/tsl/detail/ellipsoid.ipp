// Layered ellipsoid enumeration on a doubled Gram matrix.
//
// With g = G and A = g11 g22 - g12^2, B = g11 g23 - g12 g13, C = g11 g33 - g13^2,
// E = A C - B^2 = g11 det(G):
//   g11 * x^T G x = (g11 x1 + g12 x2 + g13 x3)^2 + R(x2,x3)
//   A * R         = (A x2 + B x3)^2 + E x3^2
// so every bound below is an integer square-root comparison.

#include "tsl/errors.hpp"

namespace tsl::detail {

struct Layers {
    Wide g11, g12, g13, A, B, C, E;

    explicit Layers(const Mat3& g)
        : g11(g(0, 0)), g12(g(0, 1)), g13(g(0, 2)),
          A(Wide(g(0, 0)) * g(1, 1) - Wide(g(0, 1)) * g(0, 1)),
          B(Wide(g(0, 0)) * g(1, 2) - Wide(g(0, 1)) * g(0, 2)),
          C(Wide(g(0, 0)) * g(2, 2) - Wide(g(0, 2)) * g(0, 2)),
          E(A * C - B * B)
    {
        if (g11 <= 0 || A <= 0 || E <= 0) throw NotPositiveDefinite("enumeration needs a positive definite Gram matrix");
    }
};

inline void charge(std::uint64_t& used, std::uint64_t amount, std::uint64_t budget)
{
    used += amount;
    if (used > budget) throw ResourceCapExceeded("enumeration exceeded the vector budget of " + std::to_string(budget));
}

template <typename Visitor>
void for_each_in_ellipsoid(const Mat3& g, Int bound, std::uint64_t budget, Visitor&& visit)
{
    if (bound < 0) return;
    const Layers L(g);
    const Wide T1 = L.g11 * 2 * Wide(bound);
    const Wide x3max = isqrt(L.A * T1 / L.E);
    std::uint64_t used = 0;
    Vec3 x;
    for (Wide x3 = -x3max; x3 <= x3max; ++x3) {
        const Wide s2 = L.A * T1 - L.E * x3 * x3;
        if (s2 < 0) continue;
        const Wide r2 = isqrt(s2);
        const Wide lo2 = ceil_div(-L.B * x3 - r2, L.A), hi2 = floor_div(-L.B * x3 + r2, L.A);
        for (Wide x2 = lo2; x2 <= hi2; ++x2) {
            // (g11 x1 + h)^2 <= g11 (2 bound - q23) + h^2
            const Wide h = L.g12 * x2 + L.g13 * x3;
            const Wide q23 = Wide(g(1, 1)) * x2 * x2 + 2 * Wide(g(1, 2)) * x2 * x3 + Wide(g(2, 2)) * x3 * x3;
            const Wide s = L.g11 * (2 * Wide(bound) - q23) + h * h;
            if (s < 0) continue;
            const Wide r1 = isqrt(s);
            const Wide lo1 = ceil_div(-h - r1, L.g11), hi1 = floor_div(-h + r1, L.g11);
            if (hi1 < lo1) continue;
            charge(used, static_cast<std::uint64_t>(hi1 - lo1 + 1), budget);
            x[1] = static_cast<Int>(x2);
            x[2] = static_cast<Int>(x3);
            for (Wide x1 = lo1; x1 <= hi1; ++x1) {
                x[0] = static_cast<Int>(x1);
                const Wide twice = L.g11 * x1 * x1 + 2 * h * x1 + q23;
                visit(x, static_cast<Int>(twice / 2));
            }
        }
    }
}

template <typename Visitor>
void for_each_on_level(const Mat3& g, Int n, std::uint64_t budget, Visitor&& visit)
{
    if (n < 0) return;
    const Layers L(g);
    const Wide T1 = L.g11 * 2 * Wide(n);
    const Wide x3max = isqrt(L.A * T1 / L.E);
    std::uint64_t used = 0;
    Vec3 x;
    for (Wide x3 = -x3max; x3 <= x3max; ++x3) {
        const Wide s2 = L.A * T1 - L.E * x3 * x3;
        if (s2 < 0) continue;
        const Wide r2 = isqrt(s2);
        const Wide lo2 = ceil_div(-L.B * x3 - r2, L.A), hi2 = floor_div(-L.B * x3 + r2, L.A);
        if (hi2 >= lo2) charge(used, static_cast<std::uint64_t>(hi2 - lo2 + 1), budget);
        for (Wide x2 = lo2; x2 <= hi2; ++x2) {
            const Wide h = L.g12 * x2 + L.g13 * x3;
            const Wide q23 = Wide(g(1, 1)) * x2 * x2 + 2 * Wide(g(1, 2)) * x2 * x3 + Wide(g(2, 2)) * x3 * x3;
            // (g11 x1 + h)^2 == g11 (2n - q23) + h^2
            const Wide s = L.g11 * (2 * Wide(n) - q23) + h * h;
            if (s < 0) continue;
            const Wide r = isqrt(s);
            if (r * r != s) continue;
            x[1] = static_cast<Int>(x2);
            x[2] = static_cast<Int>(x3);
            for (Wide root : {-r, r}) {
                if ((root - h) % L.g11 != 0) continue;
                x[0] = static_cast<Int>((root - h) / L.g11);
                visit(x);
                if (r == 0) break;
            }
        }
    }
}

} // namespace tsl::detail
