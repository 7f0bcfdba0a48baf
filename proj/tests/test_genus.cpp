#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tsl/catalog.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/genus.hpp"
#include "tsl/local.hpp"
#include "tsl/reduce.hpp"
#include "tsl/search.hpp"

using namespace tsl;

TEST_CASE("one neighbour per isotropic line")
{
    for (const auto& f : oracle::random_forms(10, 300, 51))
        for (Int p : neighbor_primes(f, 2)) {
            const auto nb = p_neighbors(f, p);
            CHECK(static_cast<Int>(nb.size()) == p + 1);
            for (const auto& g : nb) {
                CHECK(discriminant4(g) == discriminant4(f));
                CHECK(g.is_primitive());
                CHECK(g.integral_scale() == f.integral_scale());
            }
        }
}

TEST_CASE("neighbours of sums of three squares")
{
    for (const auto& g : p_neighbors(diagonal(1, 1, 1), 3)) CHECK(is_isometric(g, diagonal(1, 1, 1)));
    CHECK_THROWS_AS(p_neighbors(diagonal(2, 5, 5), 5), InvalidPrime);
    CHECK_THROWS_AS(p_neighbors(diagonal(1, 1, 1), 2), InvalidPrime);
}

TEST_CASE("K_{2,0} and K_{3,0} are 3-neighbours of K_{1,0}")
{
    bool k2 = false, k3 = false;
    for (const auto& g : p_neighbors(catalog::K(1, 0), 3)) {
        k2 = k2 || is_isometric(g, catalog::K(2, 0));
        k3 = k3 || is_isometric(g, catalog::K(3, 0));
    }
    CHECK(k2);
    CHECK(k3);
    // K_{1,0} is alone in its spinor genus; 5-neighbours never leave it.
    for (const auto& g : p_neighbors(catalog::K(1, 0), 5)) CHECK(is_isometric(g, catalog::K(1, 0)));
}

TEST_CASE("neighbour symmetry")
{
    const auto named = catalog::all();
    int pairs = 0;
    for (std::size_t i = 0; i < named.size() && pairs < 20; i += 3) {
        const TernaryForm& f = named[i].form;
        if (!f.is_primitive()) continue;
        const Int p = neighbor_primes(f, 1).front();
        const TernaryForm g = p_neighbors(f, p).back();
        bool back = false;
        for (const auto& h : p_neighbors(g, p)) back = back || is_isometric(h, f);
        CHECK_MESSAGE(back, named[i].name);
        ++pairs;
    }
    CHECK(pairs == 20);
}

TEST_CASE("genus enumeration examples")
{
    const GenusData one = enumerate_genus(diagonal(1, 1, 1));
    CHECK(one.class_number() == 1);
    CHECK(one.mass == Rational(1, 48));
    CHECK(one.neighbor_primes == std::vector<Int>{3, 5});

    const GenusData s1 = enumerate_genus(catalog::S(1));
    REQUIRE(s1.class_number() == 2);
    bool has_t1 = false;
    for (const auto& c : s1.classes) has_t1 = has_t1 || is_isometric(c.form, catalog::T(1));
    CHECK(has_t1);
    CHECK(is_isometric(s1.classes[s1.base_index].form, catalog::S(1)));

    const GenusData k = enumerate_genus(catalog::K(1, 0));
    REQUIRE(k.class_number() == 3);
    CHECK(k.mass == Rational(1, 4));
    std::vector<Int> orders;
    for (const auto& c : k.classes) orders.push_back(c.automorphism_order);
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<Int>{8, 16, 16});
}

TEST_CASE("class cap")
{
    GenusOptions opt;
    opt.max_classes = 1;
    CHECK_THROWS_AS(enumerate_genus(catalog::K(1, 0), opt), ResourceCapExceeded);
}

TEST_CASE("mass does not change with a third neighbour prime")
{
    GenusOptions three;
    three.prime_count = 3;
    for (int i = 1; i <= 15; ++i) {
        const GenusData a = enumerate_genus(catalog::S(i)), b = enumerate_genus(catalog::S(i), three);
        CHECK(a.mass == b.mass);
        CHECK(a.class_number() == 2);
        CHECK(b.class_number() == 2);
    }
}

TEST_CASE("table class numbers do not change with a third neighbour prime")
{
    GenusOptions three;
    three.prime_count = 3;
    for (const auto& e : load_tables()) {
        const GenusData g = enumerate_genus(e.form, three);
        CHECK_MESSAGE(static_cast<int>(g.class_number()) == e.class_number, to_string(e.form));
        CHECK(g.neighbor_primes.size() == 3);
    }
}

TEST_CASE("genus averages")
{
    const GenusData one = enumerate_genus(diagonal(1, 1, 1));
    for (Int n = 0; n <= 30; ++n) CHECK(genus_average_rep(one, n) == Rational(rep_count(diagonal(1, 1, 1), n).count));

    const GenusData k = enumerate_genus(catalog::K(1, 0));
    for (Int n = 1; n <= 20; ++n) CHECK(genus_average_rep(k, n * n) == Rational(rep_count(catalog::K(1, 0), n * n).count));

    const GenusData l1 = enumerate_genus(catalog::L(1));
    CHECK(l1.class_number() == 3);
    for (Int n = 1; n <= 20; ++n) CHECK(genus_average_rep(l1, n * n) == Rational(rep_count(catalog::L(1), n * n).count));
}

TEST_CASE("indistinguishable by squares")
{
    const GenusData s1 = enumerate_genus(catalog::S(1));
    CHECK(indistinguishable_by_squares(s1, 30).indistinguishable);
    CHECK(indistinguishable_by_squares(s1, 30, true).indistinguishable);

    const GenusData k = enumerate_genus(catalog::K(1, 0));
    const SquareDistinction d = indistinguishable_by_squares(k, 30);
    CHECK_FALSE(d.indistinguishable);
    REQUIRE(d.witness);
    CHECK(rep_count(k.classes[d.witness->first].form, d.witness->n * d.witness->n).count
          != rep_count(k.classes[d.witness->second].form, d.witness->n * d.witness->n).count);

    CHECK(indistinguishable_by_squares(enumerate_genus(diagonal(1, 1, 1)), 30).indistinguishable);
}

TEST_CASE("genus averages are multiplicative on squares for gen(S1)")
{
    const GenusData g = enumerate_genus(catalog::S(1));
    const Discriminant4 d = discriminant4(catalog::S(1));
    for (Int n = 1; n <= 40; ++n) {
        const SquareFactorization s = split_by_conductor(n, d);
        Rational rhs = genus_average_rep(g, s.n1 * s.n1);
        for (auto [p, e] : s.exponents) rhs = rhs * Rational(hecke_weight(d, p, e));
        CHECK(genus_average_rep(g, n * n) == rhs);
    }
}
