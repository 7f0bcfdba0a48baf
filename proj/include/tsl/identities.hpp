#ifndef TSL_IDENTITIES_HPP
#define TSL_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsl/form.hpp"

// Exact representation-number identities for the named lattices.
namespace tsl::identities {

struct Check {
    std::string name;
    bool passed = true;
    Int cases = 0;
    std::optional<std::string> failure; // first mismatch, human readable
};

/// r(q^2n^2, <2,q,q>) = 2r(n^2, <1,1,2>) - r(n^2, <2,q,q>).
std::vector<Check> lq_squares(const std::vector<Int>& qs, Int n_max);

/// r(pn, f) = r(pn, Lambda_p f) for catalog pairs with p odd, p | D and an
/// anisotropic unimodular component.
std::vector<Check> anisotropic_descent(Int n_max);

/// r(pn, L) = r(pn, Gamma_1) + r(pn, Gamma_2) - r(pn, Lambda_p) for catalog
/// pairs where exactly two index-p sublattices have norm in pZ.
std::vector<Check> gamma_identity(Int n_max);

/// The square identities behind the S_i / T_i genera, i in {1,3,13,14,15}.
std::vector<Check> st_pairs(Int n_max);

/// 2r(n^2,K_{1,t}) = r(n^2,K_{2,t}) + r(n^2,K_{3,t}) and r(4n^2,K_{i,t}) = r(n^2,<1,1,8*3^t>).
std::vector<Check> k_family(int t_max, Int n_max);

/// r(3n+1, ell_t) = 3r(.,L_t) = 3r(.,M_t) = 2r(.,N_t) + r(.,K_t) for 3n+1 <= value_max.
std::vector<Check> ell_family(Int t_max, Int value_max);

/// r(9n, L_t) = r(9n, N_t) = r(9n, K_t) = r(n, ell_t) for t in {1,4,10}, and the M_6 analogue.
std::vector<Check> nine_n_family(Int n_max);

/// Every suite at its default bounds.
std::vector<Check> all();

} // namespace tsl::identities

#endif
