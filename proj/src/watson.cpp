#include "tsl/watson.hpp"

#include <algorithm>

#include "tsl/reduce.hpp"

namespace tsl {

namespace {

/// Basis of { x in F_p^3 : A x = 0 } by row reduction.
std::vector<Vec3> nullspace_mod(Mat3 A, Int p)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = mod(A(i, j), p);
    std::array<int, 3> pivot_col{-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int sel = -1;
        for (int r = row; r < 3; ++r)
            if (A(r, col) != 0) sel = r;
        if (sel < 0) continue;
        A.row(row).swap(A.row(sel));
        const Int inv = invmod(A(row, col), p);
        for (int j = 0; j < 3; ++j) A(row, j) = mulmod(A(row, j), inv, p);
        for (int r = 0; r < 3; ++r) {
            if (r == row || A(r, col) == 0) continue;
            const Int c = A(r, col);
            for (int j = 0; j < 3; ++j) A(r, j) = mod(A(r, j) - mulmod(c, A(row, j), p), p);
        }
        pivot_col[row++] = col;
    }
    std::vector<Vec3> out;
    for (int free = 0; free < 3; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        Vec3 v = Vec3::Zero();
        v[free] = 1;
        for (int r = 0; r < row; ++r) v[pivot_col[r]] = mod(-A(r, free), p);
        out.push_back(v);
    }
    return out;
}

Sublattice sublattice_from(const TernaryForm& f, Int p, const std::vector<Vec3>& residues)
{
    Generators<Int> gens(3, 3 + static_cast<Eigen::Index>(residues.size()));
    gens.leftCols(3) = p * Mat3::Identity();
    for (std::size_t i = 0; i < residues.size(); ++i) gens.col(3 + static_cast<Eigen::Index>(i)) = residues[i];
    Sublattice s;
    s.basis = hermite_basis(gens);
    s.index = std::abs(det3(s.basis));
    s.form = transform(f, s.basis);
    return s;
}

void require_prime(Int p)
{
    if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
}

} // namespace

Int norm_generator(const TernaryForm& f) { return f.content(); }

Sublattice big_lambda(const TernaryForm& f, Int p)
{
    require_prime(p);
    const Mat3 g = f.gram();
    if (p != 2) return sublattice_from(f, p, nullspace_mod(g, p));
    // Q is not linear mod 2; filter the eight residues of L/2L directly.
    std::vector<Vec3> residues;
    for (int bits = 1; bits < 8; ++bits) {
        const Vec3 x(bits & 1, (bits >> 1) & 1, (bits >> 2) & 1);
        const Vec3 gx = g * x;
        if (gx[0] % 2 == 0 && gx[1] % 2 == 0 && gx[2] % 2 == 0 && f.value(x) % 2 == 0) residues.push_back(x);
    }
    return sublattice_from(f, p, residues);
}

WatsonStep watson_lambda(const TernaryForm& f, Int p)
{
    WatsonStep step;
    step.p = p;
    step.input = f;
    step.sublattice = big_lambda(f, p);
    step.scale_divisor = norm_generator(step.sublattice.form);
    step.output = minkowski_reduce(primitive_part(step.sublattice.form)).form;
    return step;
}

WatsonChain watson_chain(const TernaryForm& f, Int N)
{
    if (N < 1) throw Error("watson_chain: N must be positive");
    WatsonChain chain;
    chain.input = f;
    chain.N = N;
    TernaryForm current = f;
    for (auto [p, e] : factorize(N)) {
        for (int i = 0; i < e; ++i) {
            chain.steps.push_back(watson_lambda(current, p));
            current = chain.steps.back().output;
        }
    }
    return chain;
}

std::vector<Sublattice> index_p_sublattices(const TernaryForm& f, Int p)
{
    require_prime(p);
    std::vector<Sublattice> out;
    // Normalised functionals (1,a,b), (0,1,b), (0,0,1); kernels span the sublattice mod p.
    auto add = [&](int lead, Int u, Int v) {
        const int j1 = (lead + 1) % 3, j2 = (lead + 2) % 3;
        Vec3 phi = Vec3::Zero();
        phi[lead] = 1;
        if (lead == 0) {
            phi[1] = u;
            phi[2] = v;
        }
        else if (lead == 1) {
            phi[2] = v;
        }
        std::vector<Vec3> kernel;
        for (int j : {j1, j2}) {
            Vec3 k = Vec3::Zero();
            k[j] = 1;
            k[lead] = mod(-phi[j], p);
            kernel.push_back(k);
        }
        out.push_back(sublattice_from(f, p, kernel));
    };
    for (Int u = 0; u < p; ++u)
        for (Int v = 0; v < p; ++v) add(0, u, v);
    for (Int v = 0; v < p; ++v) add(1, 0, v);
    add(2, 0, 0);
    return out;
}

GammaPair gamma_pair(const TernaryForm& f, Int p)
{
    std::vector<Sublattice> hits;
    for (auto& s : index_p_sublattices(f, p))
        if (norm_generator(s.form) % p == 0) hits.push_back(std::move(s));
    if (hits.size() != 2)
        throw HypothesisFailed(to_string(f) + " has " + std::to_string(hits.size())
                               + " index-" + std::to_string(p) + " sublattices with norm in pZ (need exactly 2)");
    const TernaryForm r0 = minkowski_reduce(hits[0].form).form, r1 = minkowski_reduce(hits[1].form).form;
    if (r1 < r0) std::swap(hits[0], hits[1]);
    return GammaPair{p, hits[0], hits[1]};
}

} // namespace tsl
