#ifndef TSL_WATSON_HPP
#define TSL_WATSON_HPP

#include <vector>

#include "tsl/form.hpp"

namespace tsl {

/// A full-rank sublattice of L given by basis columns in L's coordinates.
struct Sublattice {
    Mat3 basis;
    TernaryForm form; // restriction of Q, unscaled
    Int index = 1;
};

/// Lambda_p(L) and its rescaling lambda_p(L).
struct WatsonStep {
    Int p = 0;
    TernaryForm input;
    Sublattice sublattice;
    /// The sublattice form is divided by this generator of its norm ideal.
    Int scale_divisor = 1;
    /// Minkowski-reduced lambda_p(L).
    TernaryForm output;
};

struct WatsonChain {
    TernaryForm input;
    std::vector<WatsonStep> steps;
    Int N = 1;

    const TernaryForm& output() const { return steps.empty() ? input : steps.back().output; }
};

/// The two index-p sublattices whose norm lies in pZ, in reduced-form order.
struct GammaPair {
    Int p = 0;
    Sublattice gamma1;
    Sublattice gamma2;
};

/// Generator of the norm ideal: gcd of Q(x_i) and 2B(x_i, x_j).
Int norm_generator(const TernaryForm& f);

/// Lambda_p(L) = { x : Q(x+z) = Q(z) mod p for all z }.
Sublattice big_lambda(const TernaryForm& f, Int p);
WatsonStep watson_lambda(const TernaryForm& f, Int p);
/// lambda_N as a product of lambda_p over the prime factors of N, with multiplicity.
WatsonChain watson_chain(const TernaryForm& f, Int N);

/// Every index-p sublattice (one per point of the dual projective plane mod p).
std::vector<Sublattice> index_p_sublattices(const TernaryForm& f, Int p);
/// Throws HypothesisFailed unless exactly two index-p sublattices have norm in pZ.
GammaPair gamma_pair(const TernaryForm& f, Int p);

} // namespace tsl

#endif
