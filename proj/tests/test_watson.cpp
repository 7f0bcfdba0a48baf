#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tsl/catalog.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/reduce.hpp"
#include "tsl/watson.hpp"

using namespace tsl;

namespace {

std::set<std::array<Int, 3>> residues_of(const Mat3& basis, Int p)
{
    std::set<std::array<Int, 3>> out;
    for (Int i = 0; i < p; ++i)
        for (Int j = 0; j < p; ++j)
            for (Int k = 0; k < p; ++k) {
                const Vec3 x = basis * Vec3(i, j, k);
                out.insert({mod(x[0], p), mod(x[1], p), mod(x[2], p)});
            }
    return out;
}

} // namespace

TEST_CASE("Lambda_p agrees with its definition")
{
    for (const auto& f : oracle::random_forms(20, 300, 31))
        for (Int p : {2, 3, 5}) {
            const Sublattice s = big_lambda(f, p);
            CHECK_MESSAGE(residues_of(s.basis, p) == oracle::lambda_residues(f, p), to_string(f) << " p=" << p);
            CHECK(s.index == std::abs(det3(s.basis)));
            CHECK((s.index == p || s.index == p * p || s.index == p * p * p));
        }
}

TEST_CASE("watson_lambda examples")
{
    const WatsonStep s = watson_lambda(diagonal(1, 1, 1), 3);
    CHECK(s.sublattice.index == 27);
    CHECK(s.scale_divisor == 9);
    CHECK(s.output == diagonal(1, 1, 1));

    const WatsonStep t = watson_lambda(diagonal(2, 125, 125), 5);
    CHECK(t.sublattice.index == 5);
    CHECK(t.output == diagonal(2, 5, 5));

    const WatsonStep u = watson_lambda(diagonal(2, 5, 5), 5);
    CHECK(u.output.is_primitive());
    CHECK_THROWS_AS(watson_lambda(diagonal(1, 1, 1), 4), InvalidPrime);
}

TEST_CASE("norm generator is the content")
{
    CHECK(norm_generator(catalog::P2()) == 47);
    CHECK(norm_generator(catalog::Q()) == 2);
    CHECK(norm_generator(diagonal(1, 1, 1)) == 1);
}

TEST_CASE("watson chains compose prime steps")
{
    const WatsonChain c = watson_chain(diagonal(2, 125, 125), 25);
    CHECK(c.steps.size() == 2);
    CHECK(c.N == 25);
    CHECK(c.output() == watson_lambda(watson_lambda(diagonal(2, 125, 125), 5).output, 5).output);
    CHECK(watson_chain(diagonal(1, 1, 1), 1).output() == diagonal(1, 1, 1));
    CHECK_THROWS_AS(watson_chain(diagonal(1, 1, 1), 0), Error);
}

TEST_CASE("index-p sublattices")
{
    for (Int p : {2, 3, 5}) {
        const auto subs = index_p_sublattices(catalog::S(1), p);
        CHECK(static_cast<Int>(subs.size()) == p * p + p + 1);
        std::set<std::set<std::array<Int, 3>>> distinct;
        for (const auto& s : subs) {
            CHECK(s.index == p);
            distinct.insert(residues_of(s.basis, p));
        }
        CHECK(distinct.size() == subs.size());
    }
}

TEST_CASE("Gamma pair of S1 at 2 is two copies of P1")
{
    const GammaPair g = gamma_pair(catalog::S(1), 2);
    CHECK(g.gamma1.index == 2);
    CHECK(g.gamma2.index == 2);
    CHECK(is_isometric(g.gamma1.form, catalog::P1()));
    CHECK(is_isometric(g.gamma2.form, catalog::P1()));
    CHECK(norm_generator(g.gamma1.form) % 2 == 0);
}

TEST_CASE("Gamma pair needs a hyperbolic plane")
{
    CHECK_THROWS_AS(gamma_pair(diagonal(1, 1, 1), 3), HypothesisFailed);
    CHECK_THROWS_AS(gamma_pair(diagonal(2, 5, 5), 7), HypothesisFailed);
}

TEST_CASE("Gamma pairs for odd p exist exactly for an isotropic unimodular plane")
{
    // Exactly two index-p sublattices have norm in pZ iff the p-modular part
    // has valuation pattern (0,0,k>=1) with the unimodular plane hyperbolic.
    for (const auto& f : oracle::random_forms(40, 400, 41))
        for (Int p : prime_divisors(discriminant4(f).value)) {
            if (p == 2 || p > 11) continue;
            Int count = 0;
            for (const auto& s : index_p_sublattices(f, p)) count += norm_generator(s.form) % p == 0;
            CHECK((count == 0 || count == 1 || count == 2 || count == p + 1));
            bool thrown = false;
            try {
                (void)gamma_pair(f, p);
            }
            catch (const HypothesisFailed&) {
                thrown = true;
            }
            CHECK(thrown == (count != 2));
        }
}
