#include "tsl/catalog.hpp"

#include <array>

namespace tsl::catalog {

namespace {

using Coeffs = std::array<Int, 6>;

constexpr std::array<Coeffs, 15> s_forms{{
    {1, 2, 4, 2, 1, 0},   {1, 2, 23, 0, 1, 0}, {1, 3, 9, 2, 1, 1},  {1, 3, 10, 0, 0, 1}, {1, 5, 19, 5, 1, 0},
    {1, 5, 49, 5, 1, 0},  {1, 2, 7, 0, 1, 0},  {1, 2, 9, 2, 1, 0},  {1, 2, 10, 1, 0, 1}, {1, 5, 13, 5, 1, 1},
    {1, 5, 15, 3, 0, 1},  {1, 6, 25, 0, 1, 0}, {1, 7, 10, 0, 0, 1}, {1, 2, 15, 0, 0, 1}, {1, 7, 17, 7, 1, 0},
}};

constexpr std::array<Coeffs, 15> t_forms{{
    {1, 2, 4, 1, 1, 1},   {1, 3, 17, 2, 1, 1},  {1, 5, 5, 1, 1, 0},   {1, 5, 6, 2, 0, 1},  {1, 9, 10, 0, 0, 1},
    {1, 9, 29, 8, 1, 1},  {1, 3, 5, 1, 0, 1},   {1, 3, 6, 0, 0, 1},   {1, 4, 5, 2, 1, 1},  {1, 6, 11, 6, 1, 0},
    {1, 7, 11, 5, 1, 0},  {1, 13, 13, 8, 1, 1}, {1, 7, 11, 5, 1, 1},  {1, 4, 7, 0, 0, 1},  {1, 11, 11, 7, 1, 1},
}};

constexpr std::array<Coeffs, 3> s14_forms{{{1, 2, 60, 0, 0, 1}, {2, 4, 60, 0, 0, 2}, {2, 4, 15, 0, 0, 2}}};
constexpr std::array<Coeffs, 3> t14_forms{{{1, 4, 28, 0, 0, 1}, {4, 4, 28, 0, 0, 2}, {4, 4, 7, 0, 0, 2}}};

TernaryForm lattice(const Coeffs& c) { return make_lattice(c[0], c[1], c[2], c[3], c[4], c[5]); }

template <std::size_t Size>
const Coeffs& pick(const std::array<Coeffs, Size>& table, int i, const char* what)
{
    if (i < 1 || i > static_cast<int>(Size)) throw Error(std::string(what) + ": index out of range");
    return table[static_cast<std::size_t>(i - 1)];
}

} // namespace

TernaryForm P1() { return make_lattice(2, 4, 4, 2, 2, 0); }
TernaryForm P2() { return make_lattice(47, 47, 47, 0, 47, 47); }
TernaryForm P3() { return make_lattice(1, 1, 10, 0, 0, 1); }
TernaryForm Q() { return make_lattice(4, 8, 16, 2, 4, 4); }

TernaryForm S(int i) { return lattice(pick(s_forms, i, "S")); }
TernaryForm T(int i) { return lattice(pick(t_forms, i, "T")); }
TernaryForm S14(int j) { return lattice(pick(s14_forms, j, "S14")); }
TernaryForm T14(int j) { return lattice(pick(t14_forms, j, "T14")); }

TernaryForm K(int i, int t)
{
    if (t < 0) throw Error("K: t must be nonnegative");
    const Int m = ipow(3, static_cast<unsigned>(t));
    switch (i) {
    case 1: return make_form(1, 4, 8 * m + 1, 4, 0, 0);
    case 2: return make_form(1, 1, 32 * m, 0, 0, 0);
    case 3: return make_form(2, 2, 8 * m + 1, 2, 2, 0);
    default: throw Error("K: i must be 1, 2 or 3");
    }
}

TernaryForm ell(Int t) { return make_form(1, 1, 3 * t, 0, 0, 1); }
TernaryForm L(Int t) { return make_form(1, 7, 3 * t, 0, 0, 1); }
TernaryForm M(Int t) { return make_form(1, 7, 3 * t + 1, 5, 1, 1); }
TernaryForm N(Int t) { return make_form(3, 3, 3 * t + 1, 3, 0, 3); }
TernaryForm Kfam(Int t) { return make_form(1, 1, 27 * t, 0, 0, 1); }

TernaryForm Lq(Int q) { return make_form(2, q, q, 0, 0, 0); }

std::vector<Named> all()
{
    std::vector<Named> out{{"P1", P1()}, {"P2", P2()}, {"P3", P3()}, {"Q", Q()}};
    for (int i = 1; i <= 15; ++i) {
        out.push_back({"S" + std::to_string(i), S(i)});
        out.push_back({"T" + std::to_string(i), T(i)});
    }
    for (int j = 1; j <= 3; ++j) {
        out.push_back({"S14," + std::to_string(j), S14(j)});
        out.push_back({"T14," + std::to_string(j), T14(j)});
    }
    for (int t = 0; t <= 3; ++t)
        for (int i = 1; i <= 3; ++i) out.push_back({"K" + std::to_string(i) + "," + std::to_string(t), K(i, t)});
    for (Int t = 1; t <= 6; ++t) {
        const std::string s = std::to_string(t);
        out.push_back({"ell" + s, ell(t)});
        out.push_back({"L" + s, L(t)});
        out.push_back({"M" + s, M(t)});
        out.push_back({"N" + s, N(t)});
        out.push_back({"K" + s, Kfam(t)});
    }
    out.push_back({"L10", L(10)});
    out.push_back({"N10", N(10)});
    out.push_back({"K10", Kfam(10)});
    for (Int q : {5, 13, 29}) out.push_back({"L(" + std::to_string(q) + ")", Lq(q)});
    return out;
}

} // namespace tsl::catalog
