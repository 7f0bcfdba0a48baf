#include "tsl/genus.hpp"

#include <deque>
#include <map>

#include "tsl/enumerate.hpp"
#include "tsl/reduce.hpp"

namespace tsl {

namespace {

Int pairing(const Mat3& g, const Vec3& x, const Vec3& y) { return (x.transpose() * g * y)(0, 0); }

// Projective points of P^2(F_p), normalised with the first nonzero coordinate 1.
std::vector<Vec3> projective_points(Int p)
{
    std::vector<Vec3> out;
    for (Int u = 0; u < p; ++u)
        for (Int v = 0; v < p; ++v) out.emplace_back(1, u, v);
    for (Int v = 0; v < p; ++v) out.emplace_back(0, 1, v);
    out.emplace_back(0, 0, 1);
    return out;
}

TernaryForm neighbor_at(const TernaryForm& f, const Mat3& g, Int p, Vec3 v)
{
    // Lift v so that Q(v) = 0 mod p^2.
    Vec3 gv = g * v;
    int i = 0;
    while (mod(gv[i], p) == 0) ++i;
    const Int t = mulmod(mod(-(f.value(v) / p), p), invmod(mod(gv[i], p), p), p);
    v[i] += p * t;
    gv = g * v;

    // p L' = p L_v + Z v, where L_v = { x : B(x,v) = 0 mod p }.
    int k = 0;
    while (mod(gv[k], p) == 0) ++k;
    const Int inv = invmod(mod(gv[k], p), p);
    Generators<Int> gens(3, 6);
    gens.leftCols(3) = p * p * Mat3::Identity();
    int col = 3;
    for (int j = 0; j < 3; ++j) {
        if (j == k) continue;
        Vec3 w = Vec3::Zero();
        w[j] = 1;
        w[k] = mod(-mulmod(mod(gv[j], p), inv, p), p);
        gens.col(col++) = p * w;
    }
    gens.col(col) = v;
    const Mat3 basis = hermite_basis(gens);
    const Mat3 scaled_gram = basis.transpose() * g * basis;
    Mat3 gram;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (scaled_gram(r, c) % (p * p) != 0) throw Error("p_neighbors: neighbour Gram matrix is not integral");
            gram(r, c) = scaled_gram(r, c) / (p * p);
        }
    return minkowski_reduce(form_from_gram(gram)).form;
}

} // namespace

std::vector<TernaryForm> p_neighbors(const TernaryForm& f, Int p)
{
    const Discriminant4 d = discriminant4(f);
    if (!is_prime(p) || d.conductor_prime(p))
        throw InvalidPrime("p_neighbors needs a prime not dividing 2D; got p=" + std::to_string(p));
    const Mat3 g = f.gram();
    std::vector<TernaryForm> out;
    for (const Vec3& v : projective_points(p))
        if (f.value(v) % p == 0) out.push_back(neighbor_at(f, g, p, v));
    return out;
}

std::vector<Int> neighbor_primes(const TernaryForm& f, int count)
{
    const Discriminant4 d = discriminant4(f);
    std::vector<Int> out;
    for (Int p = 3; static_cast<int>(out.size()) < count; p += 2)
        if (is_prime(p) && !d.conductor_prime(p)) out.push_back(p);
    return out;
}

GenusData enumerate_genus(const TernaryForm& f, const GenusOptions& options)
{
    GenusData out;
    out.base = f;
    out.neighbor_primes = neighbor_primes(f, options.prime_count);

    // Reduced forms are canonical, so map lookup finds repeats; the isometry
    // check guards the rare case of a distinct key in a known class.
    std::map<TernaryForm, std::size_t> seen;
    std::deque<std::size_t> frontier;
    auto admit = [&](const TernaryForm& h) -> std::size_t {
        if (auto it = seen.find(h); it != seen.end()) return it->second;
        for (std::size_t i = 0; i < out.classes.size(); ++i)
            if (is_isometric(out.classes[i].form, h)) {
                seen.emplace(h, i);
                return i;
            }
        if (out.classes.size() >= options.max_classes)
            throw ResourceCapExceeded("enumerate_genus: more than " + std::to_string(options.max_classes)
                                      + " classes in the genus of " + to_string(f));
        out.classes.push_back({h, 0});
        seen.emplace(h, out.classes.size() - 1);
        frontier.push_back(out.classes.size() - 1);
        return out.classes.size() - 1;
    };

    out.base_index = admit(minkowski_reduce(f).form);
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop_front();
        const TernaryForm current = out.classes[i].form;
        for (Int p : out.neighbor_primes)
            for (const auto& h : p_neighbors(current, p)) admit(h);
    }
    for (auto& c : out.classes) {
        c.automorphism_order = automorphism_order(c.form);
        out.mass += Rational(1, c.automorphism_order);
    }
    return out;
}

Rational genus_average_rep(const GenusData& g, Int n)
{
    Rational sum;
    for (const auto& c : g.classes) sum += Rational(rep_count(c.form, n).count, c.automorphism_order);
    return sum / g.mass;
}

SquareDistinction indistinguishable_by_squares(const GenusData& g, Int bound, bool conductor_only)
{
    SquareDistinction out;
    if (g.classes.size() < 2) return out;
    const Discriminant4 d = discriminant4(g.base);
    std::vector<SquareCounts> counts;
    for (const auto& c : g.classes) counts.emplace_back(c.form);
    for (Int n = 1; n <= bound; ++n) {
        if (conductor_only) {
            bool supported = true;
            for (Int p : prime_divisors(n)) supported = supported && d.conductor_prime(p);
            if (!supported) continue;
        }
        const Int r0 = counts[0](n);
        for (std::size_t i = 1; i < counts.size(); ++i) {
            if (counts[i](n) != r0) {
                out.indistinguishable = false;
                out.witness = SquareWitness{n, 0, i};
                return out;
            }
        }
    }
    return out;
}

} // namespace tsl
