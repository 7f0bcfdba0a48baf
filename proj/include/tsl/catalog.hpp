#ifndef TSL_CATALOG_HPP
#define TSL_CATALOG_HPP

#include <string>
#include <vector>

#include "tsl/form.hpp"

// Named lattices that the identity suites are stated for.
namespace tsl::catalog {

TernaryForm P1();
TernaryForm P2();
TernaryForm P3();
TernaryForm Q();

/// S_i and T_i from the second table, i = 1..15.
TernaryForm S(int i);
TernaryForm T(int i);
/// S_{14,j}, T_{14,j}, j = 1..3.
TernaryForm S14(int j);
TernaryForm T14(int j);

/// K_{i,t}, i = 1..3, t >= 0.
TernaryForm K(int i, int t);

TernaryForm ell(Int t);   // [1,1,3t,0,0,1]
TernaryForm L(Int t);     // [1,7,3t,0,0,1]
TernaryForm M(Int t);     // [1,7,3t+1,5,1,1]
TernaryForm N(Int t);     // [3,3,3t+1,3,0,3]
TernaryForm Kfam(Int t);  // [1,1,27t,0,0,1]

/// L(q) = <2,q,q>.
TernaryForm Lq(Int q);

struct Named {
    std::string name;
    TernaryForm form;
};

/// Every fixed named form (families at the parameters used by the suites).
std::vector<Named> all();

} // namespace tsl::catalog

#endif
