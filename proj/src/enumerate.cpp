#include "tsl/enumerate.hpp"

#include <algorithm>

#include "tsl/reduce.hpp"

namespace tsl {

namespace {

bool lex_less(const Vec3& x, const Vec3& y)
{
    return std::lexicographical_compare(x.data(), x.data() + 3, y.data(), y.data() + 3);
}

} // namespace

RepResult rep_count(const TernaryForm& f, Int n, bool keep_solutions, std::uint64_t budget)
{
    RepResult out;
    out.n = n;
    if (n < 0) return out;
    const Reduction r = greedy_reduce(f);
    std::vector<Vec3> sols;
    detail::for_each_on_level(r.form.gram(), n, budget, [&](const Vec3& x) {
        ++out.count;
        if (keep_solutions) sols.push_back(r.map * x);
    });
    if (keep_solutions) {
        std::sort(sols.begin(), sols.end(), lex_less);
        out.solutions = std::move(sols);
    }
    return out;
}

Int rep_count_binary(const BinaryForm& ell, Int n)
{
    if (n < 0) return 0;
    if (n == 0) return 1;
    // 4a n = (2a x + b y)^2 + (4ac - b^2) y^2
    const Wide a = ell.a, b = ell.b, c = ell.c;
    const Wide disc = 4 * a * c - b * b;
    const Wide target = 4 * a * n;
    const Wide ymax = isqrt(target / disc);
    Int count = 0;
    for (Wide y = -ymax; y <= ymax; ++y) {
        const Wide s = target - disc * y * y;
        if (s < 0) continue;
        const Wide r = isqrt(s);
        if (r * r != s) continue;
        for (Wide root : {-r, r}) {
            if ((root - b * y) % (2 * a) == 0) ++count;
            if (r == 0) break;
        }
    }
    return count;
}

ThetaPrefix theta_prefix(const TernaryForm& f, Int bound, std::uint64_t budget)
{
    ThetaPrefix out;
    out.bound = bound;
    if (bound < 0) return out;
    out.counts.assign(static_cast<std::size_t>(bound) + 1, 0);
    const Reduction r = greedy_reduce(f);
    detail::for_each_in_ellipsoid(r.form.gram(), bound, budget,
                                  [&](const Vec3&, Int value) { ++out.counts[static_cast<std::size_t>(value)]; });
    return out;
}

std::vector<ShortVector> short_vectors(const TernaryForm& f, Int bound, std::uint64_t budget)
{
    std::vector<ShortVector> out;
    const Reduction r = greedy_reduce(f);
    detail::for_each_in_ellipsoid(r.form.gram(), bound, budget, [&](const Vec3& x, Int value) {
        if (value > 0) out.push_back({r.map * x, value});
    });
    std::sort(out.begin(), out.end(), [](const ShortVector& u, const ShortVector& v) {
        return u.value != v.value ? u.value < v.value : lex_less(u.x, v.x);
    });
    return out;
}

SquareCounts::SquareCounts(const TernaryForm& f) : form_(f), reduced_(greedy_reduce(f).form) {}

Int SquareCounts::operator()(Int k)
{
    if (k < 0) k = -k;
    const auto idx = static_cast<std::size_t>(k);
    if (idx >= cache_.size()) cache_.resize(idx + 1, -1);
    if (cache_[idx] < 0) {
        Int count = 0;
        detail::for_each_on_level(reduced_.gram(), k * k, default_vector_budget, [&](const Vec3&) { ++count; });
        cache_[idx] = count;
    }
    return cache_[idx];
}

} // namespace tsl
