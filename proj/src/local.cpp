#include "tsl/local.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace tsl {

int jacobi(Int a, Int m)
{
    if (m <= 0 || m % 2 == 0) throw Error("jacobi: modulus must be odd and positive");
    a = mod(a, m);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const Int r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

Int hecke_weight(Discriminant4 d, Int p, int lambda)
{
    if (p == 2 || !is_prime(p) || d.value % p == 0)
        throw InvalidPrime("hecke_weight needs an odd prime not dividing 2D; got p=" + std::to_string(p));
    if (lambda < 0) throw Error("hecke_weight: negative exponent");
    const Int chi = jacobi(-d.value, p);
    const Int up = (ipow(p, lambda + 1) - 1) / (p - 1);
    const Int down = (ipow(p, lambda) - 1) / (p - 1);
    return up - chi * down;
}

SquareFactorization split_by_conductor(Int n, Discriminant4 d)
{
    if (n < 1) throw Error("split_by_conductor: n must be positive");
    SquareFactorization out;
    out.n = n;
    for (auto [p, e] : factorize(n)) {
        const Int pe = ipow(p, static_cast<unsigned>(e));
        if (d.conductor_prime(p)) {
            out.n1 *= pe;
        }
        else {
            out.n2 *= pe;
            out.exponents.emplace_back(p, e);
        }
    }
    return out;
}

std::vector<JordanComponent> JordanOdd::block(int valuation) const
{
    std::vector<JordanComponent> out;
    for (const auto& c : components)
        if (c.valuation == valuation) out.push_back(c);
    return out;
}

namespace {

// e_target <- e_target - c * e_source, applied as a congruence on A modulo m.
void subtract_multiple(Mat3& A, int target, int source, Int c, Int m)
{
    for (int l = 0; l < 3; ++l) A(l, target) = mod(A(l, target) - mulmod(c, A(l, source), m), m);
    for (int l = 0; l < 3; ++l) A(target, l) = mod(A(target, l) - mulmod(c, A(source, l), m), m);
}

int valuation_mod(Int x, Int p, int k)
{
    if (x == 0) return k;
    return std::min(valuation(x, p), k);
}

} // namespace

JordanOdd jordan_odd(const TernaryForm& f, Int p, int extra_precision)
{
    if (p == 2 || !is_prime(p)) throw InvalidPrime("jordan_odd needs an odd prime; got p=" + std::to_string(p));
    const Int D = discriminant4(f).value;
    const int k = valuation(D, p) + 3 + extra_precision;
    Int modulus = 1;
    for (int i = 0; i < k; ++i) {
        if (modulus > std::numeric_limits<Int>::max() / p) throw Error("jordan_odd: p-adic precision overflows 64 bits");
        modulus *= p;
    }

    Mat3 A = f.gram();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = mod(A(i, j), modulus);

    std::vector<std::pair<int, Int>> pieces; // (valuation, unit of M = G/2 mod p)
    std::array<bool, 3> active{true, true, true};
    const Int half = invmod(2, p);
    for (int step = 0; step < 3; ++step) {
        int best_v = k + 1, bi = -1, bj = -1;
        for (int i = 0; i < 3; ++i) {
            if (!active[i]) continue;
            for (int j = i; j < 3; ++j) {
                if (!active[j]) continue;
                const int v = valuation_mod(A(i, j), p, k);
                // prefer diagonal pivots on ties
                if (v < best_v || (v == best_v && i == j && bi != bj)) {
                    best_v = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best_v >= k) throw Error("jordan_odd: precision exhausted; form is degenerate modulo p^k");
        if (bi != bj) subtract_multiple(A, bi, bj, -1, modulus); // e_i <- e_i + e_j
        const int i = bi;
        const int v = valuation_mod(A(i, i), p, k);
        if (v != best_v) throw Error("jordan_odd: pivot valuation mismatch");
        const Int pv = ipow(p, static_cast<unsigned>(v));
        const Int rel = modulus / pv;
        const Int unit = (A(i, i) / pv) % rel;
        const Int unit_inv = invmod(unit, rel);
        for (int j = 0; j < 3; ++j) {
            if (j == i || !active[j]) continue;
            const Int w = (A(i, j) / pv) % rel;
            const Int c = mulmod(w, unit_inv, rel);
            subtract_multiple(A, j, i, c, modulus);
        }
        pieces.emplace_back(v, mulmod(unit % p, half, p));
        active[i] = false;
    }

    std::sort(pieces.begin(), pieces.end());
    JordanOdd out;
    out.p = p;
    for (std::size_t s = 0; s < pieces.size();) {
        std::size_t e = s;
        int cls = 1;
        while (e < pieces.size() && pieces[e].first == pieces[s].first) cls *= jacobi(pieces[e++].second, p);
        for (std::size_t t = s; t < e; ++t)
            out.components.push_back({pieces[s].first, t + 1 == e ? cls : 1, 1});
        s = e;
    }
    return out;
}

bool unimodular_part_anisotropic(const TernaryForm& f, Int p)
{
    const auto unit = jordan_odd(f, p).block(0);
    if (unit.size() == 1) return true;
    if (unit.size() == 2) return jacobi(-1, p) * unit[0].unit_class * unit[1].unit_class == -1;
    return false;
}

bool terminal_condition_at(const TernaryForm& f, Int p)
{
    const auto j = jordan_odd(f, p);
    if (j.components.size() != 3) return false;
    if (j.components[0].valuation != 0 || j.components[1].valuation != 1 || j.components[2].valuation != 1) return false;
    if (j.components[0].unit_class != -1) return false;
    return jacobi(-1, p) * j.components[1].unit_class * j.components[2].unit_class == 1;
}

} // namespace tsl
