#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tsl/catalog.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/reduce.hpp"

using namespace tsl;

namespace {

Mat3 random_unimodular(std::mt19937_64& rng)
{
    std::uniform_int_distribution<Int> small(-3, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    Mat3 u = Mat3::Identity();
    for (int step = 0; step < 6; ++step) {
        const int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Mat3 e = Mat3::Identity();
        e(i, j) = small(rng);
        u = u * e;
    }
    if (pick(rng) == 0) u.col(0) = -u.col(0);
    return u;
}

bool maps(const TernaryForm& f, const TernaryForm& g, const Mat3& u)
{
    return std::abs(det3(u)) == 1 && Mat3(u.transpose() * f.gram() * u) == g.gram();
}

} // namespace

TEST_CASE("greedy reduction keeps the class")
{
    std::mt19937_64 rng(3);
    for (const auto& f : oracle::random_forms(30, 500, 5)) {
        const TernaryForm g = transform(f, random_unimodular(rng));
        const Reduction r = greedy_reduce(g);
        CHECK(maps(g, r.form, r.map));
        CHECK(r.form.a <= r.form.b);
        CHECK(r.form.b <= r.form.c);
    }
}

TEST_CASE("Minkowski reduction is a class invariant")
{
    std::mt19937_64 rng(4);
    for (const auto& f : oracle::random_forms(40, 500, 6)) {
        const Reduction r = minkowski_reduce(f);
        CHECK(maps(f, r.form, r.map));
        const TernaryForm m = r.form;
        CHECK(m.a <= m.b);
        CHECK(m.b <= m.c);
        CHECK(std::abs(m.f) <= m.a);
        CHECK(std::abs(m.e) <= m.a);
        CHECK(std::abs(m.d) <= m.b);
        CHECK(minkowski_reduce(m).form == m);
        for (int k = 0; k < 3; ++k) CHECK(minkowski_reduce(transform(f, random_unimodular(rng))).form == m);
    }
}

TEST_CASE("the diagonal of the reduced form is the successive minima")
{
    const TernaryForm m = minkowski_reduce(make_form(3, 5, 11, 4, 2, 1)).form;
    const auto counts = oracle::naive_theta(m, m.c);
    Int first = 1;
    while (counts[static_cast<std::size_t>(first)] == 0) ++first;
    CHECK(first == m.a);
}

TEST_CASE("isometry test returns a witness")
{
    std::mt19937_64 rng(9);
    for (const auto& f : oracle::random_forms(25, 400, 8)) {
        const TernaryForm g = transform(f, random_unimodular(rng));
        const auto u = is_isometric(f, g);
        REQUIRE(u);
        CHECK(maps(f, g, *u));
    }
}

TEST_CASE("genus mates are not isometric")
{
    CHECK_FALSE(is_isometric(catalog::S(1), catalog::T(1)));
    CHECK_FALSE(is_isometric(catalog::K(1, 0), catalog::K(2, 0)));
    CHECK_FALSE(is_isometric(catalog::K(2, 0), catalog::K(3, 0)));
    CHECK_FALSE(is_isometric(diagonal(1, 1, 2), diagonal(1, 1, 3)));
    CHECK(is_isometric(diagonal(1, 2, 1), diagonal(2, 1, 1)));
}

TEST_CASE("automorphism group orders")
{
    CHECK(automorphism_order(diagonal(1, 1, 1)) == 48);
    CHECK(automorphism_order(catalog::K(1, 0)) == 8);
    CHECK(automorphism_order(catalog::K(2, 0)) == 16);
    CHECK(automorphism_order(catalog::K(3, 0)) == 16);
    CHECK(automorphism_order(catalog::L(1)) == 8);
    CHECK(automorphism_order(catalog::N(1)) == 12);
    CHECK(automorphism_order(catalog::Kfam(1)) == 24);
    CHECK(automorphism_order(catalog::M(6)) == 4);
    CHECK(automorphism_order(make_form(1, 1, 1, 1, 1, 1)) == 48); // the A3 root lattice, halved
}

TEST_CASE("automorphisms preserve the form and are closed under composition")
{
    const TernaryForm f = make_form(1, 1, 3, 0, 0, 1);
    const auto group = automorphisms(f);
    CHECK(group.size() == 24);
    for (const auto& u : group) CHECK(maps(f, f, u));
    for (const auto& u : group)
        for (const auto& v : group) {
            const Mat3 w = u * v;
            CHECK(std::find(group.begin(), group.end(), w) != group.end());
        }
}

TEST_CASE("automorphism orders of random forms agree with a brute-force count")
{
    // The short vectors of norm a, b, c contain every image of the reduced basis.
    for (const auto& f : oracle::random_forms(8, 200, 12)) {
        const TernaryForm m = minkowski_reduce(f).form;
        Int count = 0;
        const auto r = oracle::box(m, m.c);
        std::vector<Vec3> pool;
        for (Int x = -r[0]; x <= r[0]; ++x)
            for (Int y = -r[1]; y <= r[1]; ++y)
                for (Int z = -r[2]; z <= r[2]; ++z) {
                    const Int v = oracle::q_value(m, x, y, z);
                    if (v == m.a || v == m.b || v == m.c) pool.emplace_back(x, y, z);
                }
        for (const auto& u : pool)
            for (const auto& v : pool)
                for (const auto& w : pool) {
                    Mat3 t;
                    t.col(0) = u;
                    t.col(1) = v;
                    t.col(2) = w;
                    if (maps(m, m, t)) ++count;
                }
        CHECK(automorphism_order(f) == count);
    }
}
