// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tsl/catalog.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/genus.hpp"
#include "tsl/identities.hpp"
#include "tsl/local.hpp"
#include "tsl/search.hpp"
#include "tsl/ssr.hpp"

using namespace tsl;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    }
    catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.passed) ++failures;
    std::printf("%s  %d  %s: %s (%.1fs)\n", out.passed ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome table_reproduction()
{
    const TablesReport r = verify_tables(40, default_tables_path(), false);
    std::ostringstream d;
    d << r.entries.size() - r.failed_entries() << "/" << r.entries.size() << " entries pass at N=40; blocks";
    for (const auto& [key, count] : r.block_counts) d << " T" << key.first << "[" << key.second << "]=" << count;
    for (const auto& f : r.failures) d << "; " << f;
    for (const auto& e : r.entries)
        if (!e.passed) d << "; " << to_string(e.entry.form) << ": " << e.failures.front();
    return {r.entries.size() == 207 && r.passed(), d.str()};
}

Outcome search_reproduction()
{
    const SearchReport r = search_representing_one();
    std::ostringstream d;
    d << r.passers.size() << " classes from " << r.candidates_examined << " candidates, " << r.discrepancies.size()
      << " false positives, " << r.missing.size() << " missing";
    for (const auto& f : r.discrepancies) d << " +" << to_string(f);
    for (const auto& f : r.missing) d << " -" << to_string(f);
    return {r.passers.size() == 207 && r.matched_against_dataset, d.str()};
}

Outcome class_numbers()
{
    const TablesReport r = verify_tables(40, default_tables_path(), false);
    int mismatched = 0;
    for (const auto& e : r.entries)
        if (static_cast<int>(e.class_number) != e.entry.class_number) ++mismatched;
    bool ok = mismatched == 0 && r.failed_entries() == 0;
    std::ostringstream d;
    d << mismatched << " annotation mismatches over 207 genera";
    for (int t : {0, 1}) {
        const GenusData g = enumerate_genus(catalog::K(1, t));
        std::vector<Int> orders;
        for (const auto& c : g.classes) orders.push_back(c.automorphism_order);
        std::sort(orders.begin(), orders.end());
        const bool good = g.class_number() == 3 && orders == std::vector<Int>{8, 16, 16};
        ok = ok && good;
        d << "; gen(K1," << t << ") orders";
        for (Int o : orders) d << ' ' << o;
        d << " mass " << g.mass;
    }
    return {ok, d.str()};
}

Outcome identity_suites()
{
    const auto checks = identities::all();
    Int cases = 0;
    std::size_t failed = 0;
    std::string first;
    for (const auto& c : checks) {
        cases += c.cases;
        if (!c.passed) {
            if (failed++ == 0) first = c.name + " " + c.failure.value_or("");
        }
    }
    std::ostringstream d;
    d << checks.size() - failed << "/" << checks.size() << " identities, " << cases << " exact cases";
    if (failed) d << "; first failure " << first;
    return {failed == 0, d.str()};
}

Outcome multiplicativity()
{
    bool ok = check_ssr(diagonal(1, 1, 1), 60).passed;
    const GenusData g = enumerate_genus(catalog::S(1));
    for (const auto& c : g.classes) ok = ok && check_ssr(c.form, 60).passed;
    const Discriminant4 d = discriminant4(catalog::S(1));
    Int checked = 0;
    for (Int n = 1; n <= 60; ++n) {
        const SquareFactorization s = split_by_conductor(n, d);
        Rational rhs = genus_average_rep(g, s.n1 * s.n1);
        for (auto [p, e] : s.exponents) rhs = rhs * Rational(hecke_weight(d, p, e));
        ok = ok && genus_average_rep(g, n * n) == rhs;
        ++checked;
    }
    return {ok, "<1,1,1> and both classes of gen(S1) pass n <= 60; genus-average product identity on " +
                    std::to_string(checked) + " n"};
}

Outcome negative_control()
{
    const SsrReport k1 = check_ssr(catalog::K(1, 0), 60), k2 = check_ssr(catalog::K(2, 0), 60),
                    k3 = check_ssr(catalog::K(3, 0), 60);
    std::ostringstream d;
    d << "K1,0 " << (k1.passed ? "passes" : "fails");
    for (const auto* r : {&k2, &k3}) {
        d << "; " << to_string(r->form);
        if (r->counterexample)
            d << " fails at n=" << r->counterexample->n << " (" << r->counterexample->lhs << " vs "
              << r->counterexample->rhs << ")";
        else
            d << " passes";
    }
    return {k1.passed && !k2.passed && !k3.passed && k2.counterexample && k3.counterexample, d.str()};
}

Outcome oracle_equivalence()
{
    const auto forms = oracle::random_forms(60, 500, 20240601);
    std::size_t agree = 0;
    for (const auto& f : forms) {
        const auto naive = oracle::naive_theta(f, 50);
        bool same = theta_prefix(f, 50).counts == naive;
        for (Int n = 0; n <= 50 && same; ++n) same = rep_count(f, n).count == naive[static_cast<std::size_t>(n)];
        agree += same;
    }
    return {agree == forms.size(), std::to_string(agree) + "/" + std::to_string(forms.size()) +
                                       " random forms (D <= 500) agree with box enumeration for all n <= 50"};
}

} // namespace

int main()
{
    criterion(1, "Table reproduction", table_reproduction);
    criterion(2, "Search reproduction", search_reproduction);
    criterion(3, "Class-number annotations", class_numbers);
    criterion(4, "Identity suites", identity_suites);
    criterion(5, "Multiplicativity", multiplicativity);
    criterion(6, "Negative control", negative_control);
    criterion(7, "Oracle equivalence", oracle_equivalence);
    std::printf("Scope: certified up to the stated finite bounds; statements for all n rest on the published proofs.\n");
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
