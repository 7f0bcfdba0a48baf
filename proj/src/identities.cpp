#include "tsl/identities.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "tsl/catalog.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/local.hpp"
#include "tsl/watson.hpp"

namespace tsl::identities {

namespace {

class Reps {
public:
    Int operator()(const TernaryForm& f, Int n)
    {
        auto [it, fresh] = cache_.try_emplace({f, n}, 0);
        if (fresh) it->second = rep_count(f, n).count;
        return it->second;
    }

private:
    std::map<std::pair<TernaryForm, Int>, Int> cache_;
};

// Runs `values(n)` for n in [first, last]; every returned value must agree.
Check run(std::string name, Int first, Int last, const std::function<std::vector<Int>(Int)>& values)
{
    Check out;
    out.name = std::move(name);
    for (Int n = first; n <= last; ++n) {
        const auto v = values(n);
        ++out.cases;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] == v[0]) continue;
            std::ostringstream msg;
            msg << "n=" << n << ":";
            for (Int x : v) msg << ' ' << x;
            out.passed = false;
            out.failure = msg.str();
            return out;
        }
    }
    return out;
}

Reps& shared_reps()
{
    thread_local Reps reps;
    return reps;
}

} // namespace

std::vector<Check> lq_squares(const std::vector<Int>& qs, Int n_max)
{
    auto& r = shared_reps();
    const TernaryForm base = diagonal(1, 1, 2);
    std::vector<Check> out;
    for (Int q : qs) {
        const TernaryForm f = catalog::Lq(q);
        out.push_back(run("L(" + std::to_string(q) + ") squares", 1, n_max, [&](Int n) {
            return std::vector<Int>{r(f, q * q * n * n), 2 * r(base, n * n) - r(f, n * n)};
        }));
    }
    return out;
}

std::vector<Check> anisotropic_descent(Int n_max)
{
    auto& r = shared_reps();
    std::vector<Check> out;
    for (const auto& [name, f] : catalog::all()) {
        for (Int p : prime_divisors(discriminant4(f).value)) {
            if (p == 2 || !unimodular_part_anisotropic(f, p)) continue;
            const TernaryForm sub = big_lambda(f, p).form;
            out.push_back(run(name + " Lambda_" + std::to_string(p) + " descent", 1, n_max, [&](Int n) {
                return std::vector<Int>{r(f, p * n), r(sub, p * n)};
            }));
        }
    }
    return out;
}

std::vector<Check> gamma_identity(Int n_max)
{
    auto& r = shared_reps();
    std::vector<Check> out;
    for (const auto& [name, f] : catalog::all()) {
        std::vector<Int> primes = prime_divisors(discriminant4(f).value);
        if (primes.empty() || primes.front() != 2) primes.insert(primes.begin(), 2);
        for (Int p : primes) {
            GammaPair pair;
            try {
                pair = gamma_pair(f, p);
            }
            catch (const HypothesisFailed&) {
                continue;
            }
            const TernaryForm lam = big_lambda(f, p).form;
            out.push_back(run(name + " Gamma_" + std::to_string(p), 1, n_max, [&](Int n) {
                const Int m = p * n;
                return std::vector<Int>{r(f, m), r(pair.gamma1.form, m) + r(pair.gamma2.form, m) - r(lam, m)};
            }));
        }
    }
    return out;
}

std::vector<Check> st_pairs(Int n_max)
{
    using namespace catalog;
    auto& r = shared_reps();
    std::vector<Check> out;
    auto add = [&](std::string name, std::function<std::vector<Int>(Int)> values) {
        out.push_back(run(std::move(name), 1, n_max, values));
    };
    auto sq = [](Int m, Int n) { return m * m * n * n; };

    for (auto [tag, f] : {std::pair{"S", S(1)}, std::pair{"T", T(1)}}) {
        const std::string s = std::string(tag) + "1";
        add(s + ": r(169n^2) = r(n^2)", [&, f](Int n) { return std::vector<Int>{r(f, sq(13, n)), r(f, n * n)}; });
        add(s + ": r(4n^2) = 2r(4n^2,P1) - r(n^2)",
            [&, f](Int n) { return std::vector<Int>{r(f, sq(2, n)), 2 * r(P1(), sq(2, n)) - r(f, n * n)}; });
    }
    for (auto [tag, f] : {std::pair{"S", S(3)}, std::pair{"T", T(3)}}) {
        const std::string s = std::string(tag) + "3";
        add(s + ": r(47^2n^2) = 2r(47^2n^2,P2) - r(n^2)",
            [&, f](Int n) { return std::vector<Int>{r(f, sq(47, n)), 2 * r(P2(), sq(47, n)) - r(f, n * n)}; });
        add(s + ": r(4n^2) = r(n^2)", [&, f](Int n) { return std::vector<Int>{r(f, sq(2, n)), r(f, n * n)}; });
    }
    for (auto [tag, f] : {std::pair{"S", S(13)}, std::pair{"T", T(13)}}) {
        const std::string s = std::string(tag) + "13";
        add(s + ": r(9n^2) = r(n^2,P3)", [&, f](Int n) { return std::vector<Int>{r(f, sq(3, n)), r(P3(), n * n)}; });
        add(s + ": r(25n^2) = r(n^2)", [&, f](Int n) { return std::vector<Int>{r(f, sq(5, n)), r(f, n * n)}; });
        add(s + ": r(4n^2) = r(n^2)", [&, f](Int n) { return std::vector<Int>{r(f, sq(2, n)), r(f, n * n)}; });
    }

    struct Fourteen {
        std::string tag;
        TernaryForm f, f1, f2, f3;
    };
    for (const Fourteen& x : {Fourteen{"S14", S(14), S14(1), S14(2), S14(3)},
                              Fourteen{"T14", T(14), T14(1), T14(2), T14(3)}}) {
        const std::string& s = x.tag;
        for (Int p : {3, 5, 7})
            add(s + ": r(" + std::to_string(p * p) + "n^2) = r(n^2)",
                [&, x, p](Int n) { return std::vector<Int>{r(x.f, sq(p, n)), r(x.f, n * n)}; });
        add(s + ": r(4n^2) = r(4n^2,Q) + r(4n^2," + s + ",1) - r(n^2)", [&, x](Int n) {
            return std::vector<Int>{r(x.f, sq(2, n)), r(Q(), sq(2, n)) + r(x.f1, sq(2, n)) - r(x.f, n * n)};
        });
        add(s + ": r(4n^2," + s + ",1) = 2r(4n^2," + s + ",2) - r(n^2)", [&, x](Int n) {
            return std::vector<Int>{r(x.f1, sq(2, n)), 2 * r(x.f2, sq(2, n)) - r(x.f, n * n)};
        });
        add(s + ": r(4n^2," + s + ",3) = r(4n^2," + s + ",2) = 2r(n^2) - r(n^2," + s + ",3)", [&, x](Int n) {
            return std::vector<Int>{r(x.f3, sq(2, n)), r(x.f2, sq(2, n)), 2 * r(x.f, n * n) - r(x.f3, n * n)};
        });
        add(s + ": r(4n^2) = r(4n^2,Q) + 2r(n^2) - 2r(n^2," + s + ",3)", [&, x](Int n) {
            return std::vector<Int>{r(x.f, sq(2, n)), r(Q(), sq(2, n)) + 2 * r(x.f, n * n) - 2 * r(x.f3, n * n)};
        });
        out.push_back(run(s + ": r(1) = 2, r(1," + s + ",3) = 0", 1, 1, [&, x](Int) {
            return std::vector<Int>{0, r(x.f, 1) - 2, r(x.f3, 1)};
        }));
    }

    for (auto [tag, f, partner] : {std::tuple{"S", S(15), S(14)}, std::tuple{"T", T(15), T(14)}}) {
        const std::string s = std::string(tag) + "15";
        for (Int p : {3, 5, 7})
            add(s + ": r(" + std::to_string(p * p) + "n^2) = r(n^2)",
                [&, f, p](Int n) { return std::vector<Int>{r(f, sq(p, n)), r(f, n * n)}; });
        add(s + ": r(4n^2) = r(n^2," + std::string(tag) + "14)",
            [&, f, partner](Int n) { return std::vector<Int>{r(f, sq(2, n)), r(partner, n * n)}; });
    }
    return out;
}

std::vector<Check> k_family(int t_max, Int n_max)
{
    auto& r = shared_reps();
    std::vector<Check> out;
    for (int t = 0; t <= t_max; ++t) {
        const TernaryForm k1 = catalog::K(1, t), k2 = catalog::K(2, t), k3 = catalog::K(3, t);
        const TernaryForm base = diagonal(1, 1, 8 * ipow(3, static_cast<unsigned>(t)));
        const std::string s = std::to_string(t);
        out.push_back(run("K_t=" + s + ": 2r(n^2,K1) = r(n^2,K2) + r(n^2,K3)", 1, n_max, [&](Int n) {
            return std::vector<Int>{2 * r(k1, n * n), r(k2, n * n) + r(k3, n * n)};
        }));
        out.push_back(run("K_t=" + s + ": r(4n^2,Ki) = r(n^2,<1,1,8*3^t>)", 1, n_max, [&](Int n) {
            return std::vector<Int>{r(base, n * n), r(k1, 4 * n * n), r(k2, 4 * n * n), r(k3, 4 * n * n)};
        }));
    }
    return out;
}

std::vector<Check> ell_family(Int t_max, Int value_max)
{
    auto& r = shared_reps();
    std::vector<Check> out;
    for (Int t = 1; t <= t_max; ++t) {
        const TernaryForm l = catalog::ell(t), L = catalog::L(t), M = catalog::M(t), N = catalog::N(t),
                          K = catalog::Kfam(t);
        out.push_back(run("ell_t=" + std::to_string(t), 0, (value_max - 1) / 3, [&](Int n) {
            const Int m = 3 * n + 1;
            return std::vector<Int>{r(l, m), 3 * r(L, m), 3 * r(M, m), 2 * r(N, m) + r(K, m)};
        }));
    }
    return out;
}

std::vector<Check> nine_n_family(Int n_max)
{
    auto& r = shared_reps();
    std::vector<Check> out;
    auto add = [&](const std::string& name, const TernaryForm& first, Int t) {
        const TernaryForm N = catalog::N(t), K = catalog::Kfam(t), l = catalog::ell(t);
        out.push_back(run(name, 1, n_max, [&, first, N, K, l](Int n) {
            return std::vector<Int>{r(first, 9 * n), r(N, 9 * n), r(K, 9 * n), r(l, n)};
        }));
    };
    for (Int t : {1, 4, 10}) add("L" + std::to_string(t) + ": r(9n) = r(n,ell_t)", catalog::L(t), t);
    add("M6: r(9n) = r(n,ell_6)", catalog::M(6), 6);
    return out;
}

std::vector<Check> all()
{
    std::vector<Check> out;
    auto append = [&](std::vector<Check> v) { out.insert(out.end(), v.begin(), v.end()); };
    append(lq_squares({5, 13, 29}, 20));
    append(anisotropic_descent(30));
    append(gamma_identity(30));
    append(st_pairs(20));
    append(k_family(3, 30));
    append(ell_family(6, 100));
    append(nine_n_family(30));
    return out;
}

} // namespace tsl::identities
