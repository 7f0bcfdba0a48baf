#include "tsl/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include <Eigen/Geometry>

#include "tsl/enumerate.hpp"

namespace tsl {

namespace {

struct Basis {
    Mat3 gram;
    Mat3 map = Mat3::Identity();

    void apply(const Mat3& t)
    {
        map = map * t;
        gram = t.transpose() * gram * t;
    }
};

Int pairing(const Mat3& g, const Vec3& x, const Vec3& y) { return (x.transpose() * g * y)(0, 0); }

bool sort_by_norm(Basis& b)
{
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return b.gram(i, i) < b.gram(j, j); });
    if (order == std::array<int, 3>{0, 1, 2}) return false;
    Mat3 perm = Mat3::Zero();
    for (int k = 0; k < 3; ++k) perm(order[k], k) = 1;
    b.apply(perm);
    return true;
}

/// Collects every basis (v1,v2,v3) of Z^3 whose doubled Gram under `g` equals `target`.
/// `stop` returning true ends the search early.
template <typename OnMatch>
void match_bases(const TernaryForm& src, const Mat3& target, std::uint64_t budget, OnMatch&& stop)
{
    const Mat3 g = src.gram();
    const Int top = std::max({target(0, 0), target(1, 1), target(2, 2)}) / 2;
    const auto vecs = short_vectors(src, top);
    std::array<std::vector<Vec3>, 3> cands;
    for (const auto& v : vecs)
        for (int i = 0; i < 3; ++i)
            if (2 * v.value == target(i, i)) cands[i].push_back(v.x);

    std::uint64_t nodes = 0;
    Mat3 w;
    for (const auto& v1 : cands[0]) {
        for (const auto& v2 : cands[1]) {
            if (++nodes > budget) throw ResourceCapExceeded("isometry search exceeded its node budget");
            if (pairing(g, v1, v2) != target(0, 1)) continue;
            for (const auto& v3 : cands[2]) {
                ++nodes;
                if (pairing(g, v1, v3) != target(0, 2) || pairing(g, v2, v3) != target(1, 2)) continue;
                w.col(0) = v1;
                w.col(1) = v2;
                w.col(2) = v3;
                const Int det = det3(w);
                if (det != 1 && det != -1) continue;
                if (stop(w)) return;
            }
        }
    }
}

} // namespace

Reduction greedy_reduce(const TernaryForm& f)
{
    Basis b{f.gram()};
    for (;;) {
        sort_by_norm(b);
        const Mat3& g = b.gram;

        const Int q = static_cast<Int>(round_div(g(0, 1), g(0, 0)));
        if (q != 0 && g(1, 1) - 2 * q * g(0, 1) + q * q * g(0, 0) < g(1, 1)) {
            Mat3 t = Mat3::Identity();
            t(0, 1) = -q;
            b.apply(t);
            continue;
        }

        // Closest vector to b3 in span(b1, b2), searched around the real solution.
        const long double det = static_cast<long double>(g(0, 0)) * g(1, 1) - static_cast<long double>(g(0, 1)) * g(0, 1);
        const long double s = (static_cast<long double>(g(0, 2)) * g(1, 1) - static_cast<long double>(g(0, 1)) * g(1, 2)) / det;
        const long double t = (static_cast<long double>(g(0, 0)) * g(1, 2) - static_cast<long double>(g(0, 1)) * g(0, 2)) / det;
        const Int s0 = static_cast<Int>(std::floor(s)), t0 = static_cast<Int>(std::floor(t));
        Int best = g(2, 2), bs = 0, bt = 0;
        for (Int si = s0 - 1; si <= s0 + 2; ++si) {
            for (Int ti = t0 - 1; ti <= t0 + 2; ++ti) {
                const Int n = g(2, 2) - 2 * si * g(0, 2) - 2 * ti * g(1, 2) + si * si * g(0, 0) + 2 * si * ti * g(0, 1)
                            + ti * ti * g(1, 1);
                if (n < best) std::tie(best, bs, bt) = std::make_tuple(n, si, ti);
            }
        }
        if (best < g(2, 2)) {
            Mat3 t3 = Mat3::Identity();
            t3(0, 2) = -bs;
            t3(1, 2) = -bt;
            b.apply(t3);
            continue;
        }
        break;
    }
    return {form_from_gram(b.gram), b.map};
}

Reduction minkowski_reduce(const TernaryForm& f)
{
    const Reduction start = greedy_reduce(f);
    const Mat3 g = start.form.gram();
    const Int top = std::max({g(0, 0), g(1, 1), g(2, 2)}) / 2;
    const auto vecs = short_vectors(start.form, top);

    // Successive minima from the sorted short-vector list.
    std::array<Int, 3> minima{};
    Vec3 first = vecs.front().x, second = Vec3::Zero();
    minima[0] = vecs.front().value;
    int rank = 1;
    for (const auto& v : vecs) {
        if (rank == 1 && first.cross(v.x) != Vec3::Zero()) {
            second = v.x;
            minima[1] = v.value;
            rank = 2;
        }
        else if (rank == 2) {
            Mat3 m;
            m << first, second, v.x;
            if (det3(m) != 0) {
                minima[2] = v.value;
                rank = 3;
                break;
            }
        }
    }

    std::array<std::vector<Vec3>, 3> layers;
    for (const auto& v : vecs)
        for (int i = 0; i < 3; ++i)
            if (v.value == minima[i]) layers[i].push_back(v.x);

    Mat3 best_w = Mat3::Identity();
    std::array<Int, 3> best_key{};
    bool found = false;
    Mat3 w;
    for (const auto& v1 : layers[0]) {
        for (const auto& v2 : layers[1]) {
            const Int f12 = pairing(g, v1, v2);
            for (const auto& v3 : layers[2]) {
                w << v1, v2, v3;
                const Int det = det3(w);
                if (det != 1 && det != -1) continue;
                const std::array<Int, 3> key{pairing(g, v2, v3), pairing(g, v1, v3), f12};
                if (!found || key > best_key) {
                    best_key = key;
                    best_w = w;
                    found = true;
                }
            }
        }
    }
    if (!found) throw Error("minkowski_reduce: no basis realises the successive minima of " + to_string(f));
    const Mat3 gram = best_w.transpose() * g * best_w;
    return {form_from_gram(gram), start.map * best_w};
}

std::optional<UnimodularMap> is_isometric(const TernaryForm& f, const TernaryForm& g, std::uint64_t budget)
{
    if (discriminant4(f) != discriminant4(g)) return std::nullopt;
    const Reduction rf = minkowski_reduce(f), rg = minkowski_reduce(g);
    if (rf.form.a != rg.form.a || rf.form.b != rg.form.b || rf.form.c != rg.form.c) return std::nullopt;
    std::optional<UnimodularMap> found;
    match_bases(rf.form, rg.form.gram(), budget, [&](const Mat3& w) {
        found = rf.map * w * unimodular_inverse(rg.map);
        return true;
    });
    return found;
}

std::vector<UnimodularMap> automorphisms(const TernaryForm& f, std::uint64_t budget)
{
    const Reduction r = minkowski_reduce(f);
    const Mat3 inv = unimodular_inverse(r.map);
    std::vector<UnimodularMap> out;
    match_bases(r.form, r.form.gram(), budget, [&](const Mat3& w) {
        out.push_back(r.map * w * inv);
        return false;
    });
    return out;
}

Int automorphism_order(const TernaryForm& f, std::uint64_t budget)
{
    return static_cast<Int>(automorphisms(f, budget).size());
}

} // namespace tsl
