#ifndef TSL_SSR_HPP
#define TSL_SSR_HPP

#include <optional>
#include <vector>

#include "tsl/form.hpp"
#include "tsl/genus.hpp"
#include "tsl/watson.hpp"

namespace tsl {

inline constexpr Int default_ms_cap = 200;

struct SsrCounterexample {
    Int n = 0;
    Int lhs = 0; // r(n^2, f)
    Int rhs = 0; // r(n1^2, f) * prod h_p
};

struct SsrReport {
    TernaryForm form;
    Int bound = 0;
    std::optional<Int> m_s;
    bool passed = true;
    std::optional<SsrCounterexample> counterexample;
};

struct TerminalReduction {
    WatsonChain chain;
    TernaryForm terminal_form;
    Int N = 1;
    // One prime per descent; a descent is one or two lambda_p steps and divides m_s by p.
    std::vector<Int> descents;
};

/// m_s(f): the least n <= cap with r(n^2, f) > 0.
std::optional<Int> min_square(const TernaryForm& f, Int cap = default_ms_cap);

/// Checks r(n^2,f) = r(n1^2,f) prod_{p | n2} h_p(D, ord_p n) for every n <= bound.
SsrReport check_ssr(const TernaryForm& f, Int bound, Int ms_cap = default_ms_cap);

struct SquareGenusCheck {
    bool passed = true;
    std::optional<Int> witness; // n with n^2 represented by the genus but not by f
};

/// Every n <= bound whose square some class represents is represented by f.
SquareGenusCheck verify_square_genus(const TernaryForm& f, const GenusData& g, Int bound);

/// m_s(f) odd and squarefree, with the terminal local shape at each of its primes.
bool is_terminal(const TernaryForm& f, Int cap = default_ms_cap);

/// Applies lambda_p until the form is terminal. Throws NoProgress when neither
/// one nor two applications divides m_s by exactly p.
TerminalReduction reduce_to_terminal(const TernaryForm& f, Int cap = default_ms_cap);

} // namespace tsl

#endif
