#include "tsl/ssr.hpp"

#include "tsl/enumerate.hpp"
#include "tsl/local.hpp"

namespace tsl {

std::optional<Int> min_square(const TernaryForm& f, Int cap)
{
    SquareCounts r(f);
    for (Int n = 1; n <= cap; ++n)
        if (r(n) > 0) return n;
    return std::nullopt;
}

SsrReport check_ssr(const TernaryForm& f, Int bound, Int ms_cap)
{
    if (bound < 1) throw Error("check_ssr: bound must be positive");
    SsrReport out;
    out.form = f;
    out.bound = bound;
    const Discriminant4 d = discriminant4(f);
    SquareCounts r(f);
    for (Int n = 1; n <= bound; ++n) {
        const SquareFactorization s = split_by_conductor(n, d);
        Int rhs = r(s.n1);
        for (auto [p, e] : s.exponents) rhs *= hecke_weight(d, p, e);
        const Int lhs = r(n);
        if (lhs != rhs) {
            out.passed = false;
            out.counterexample = SsrCounterexample{n, lhs, rhs};
            break;
        }
    }
    for (Int n = 1; n <= ms_cap; ++n)
        if (r(n) > 0) {
            out.m_s = n;
            break;
        }
    return out;
}

SquareGenusCheck verify_square_genus(const TernaryForm& f, const GenusData& g, Int bound)
{
    SquareGenusCheck out;
    SquareCounts own(f);
    std::vector<SquareCounts> others;
    for (const auto& c : g.classes) others.emplace_back(c.form);
    for (Int n = 1; n <= bound; ++n) {
        if (own(n) > 0) continue;
        for (auto& r : others)
            if (r(n) > 0) {
                out.passed = false;
                out.witness = n;
                return out;
            }
    }
    return out;
}

namespace {

Int require_ms(const TernaryForm& f, Int cap)
{
    const auto ms = min_square(f, cap);
    if (!ms) throw MsNotFound("no square n^2 with n <= " + std::to_string(cap) + " is represented by " + to_string(f));
    return *ms;
}

// The prime at which f is not yet terminal, or 0.
Int obstruction(const TernaryForm& f, Int ms)
{
    if (ms % 2 == 0) return 2;
    for (auto [p, e] : factorize(ms))
        if (e > 1) return p;
    for (Int p : prime_divisors(ms))
        if (!terminal_condition_at(f, p)) return p;
    return 0;
}

} // namespace

bool is_terminal(const TernaryForm& f, Int cap) { return obstruction(f, require_ms(f, cap)) == 0; }

TerminalReduction reduce_to_terminal(const TernaryForm& f, Int cap)
{
    TerminalReduction out;
    out.chain.input = f;
    TernaryForm current = f;
    Int ms = require_ms(current, cap);
    for (Int p = obstruction(current, ms); p != 0; p = obstruction(current, ms)) {
        bool progressed = false;
        std::vector<WatsonStep> pending;
        TernaryForm g = current;
        for (int attempt = 0; attempt < 2 && !progressed; ++attempt) {
            pending.push_back(watson_lambda(g, p));
            g = pending.back().output;
            // after one step the image may represent no squares at all
            const auto next_ms = attempt == 0 ? min_square(g, cap) : std::optional<Int>(require_ms(g, cap));
            if (next_ms && *next_ms * p == ms) {
                progressed = true;
                ms = *next_ms;
            }
        }
        if (!progressed)
            throw NoProgress("lambda_" + std::to_string(p) + " does not divide m_s by " + std::to_string(p) + " for " + to_string(current));
        out.descents.push_back(p);
        for (auto& s : pending) {
            out.N *= p;
            out.chain.steps.push_back(std::move(s));
        }
        current = g;
    }
    out.chain.N = out.N;
    out.terminal_form = current;
    return out;
}

} // namespace tsl
