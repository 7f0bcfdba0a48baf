// tsl: command-line front end for the ternary square-regularity library.
#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

#include "tsl/enumerate.hpp"
#include "tsl/genus.hpp"
#include "tsl/reduce.hpp"
#include "tsl/search.hpp"
#include "tsl/ssr.hpp"
#include "tsl/watson.hpp"

using nlohmann::json;
using namespace tsl;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

bool text_mode = false;

json matrix_json(const Mat3& m)
{
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
    return rows;
}

json vector_json(const Vec3& v) { return {v[0], v[1], v[2]}; }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
    else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })
             && !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_array() && x.size() == 3; })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
    else {
        rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void emit(const json& j)
{
    if (!text_mode) {
        std::cout << j.dump() << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

TernaryForm read_form(const std::string& text, bool primitive)
{
    const TernaryForm f = parse_form(text);
    if (primitive && !f.is_primitive()) throw NotPrimitive(text + " is not primitive");
    return f;
}

json step_json(const WatsonStep& s)
{
    return {{"p", s.p},
            {"input", to_string(s.input)},
            {"sublattice", to_string(s.sublattice.form)},
            {"index", s.sublattice.index},
            {"basis", matrix_json(s.sublattice.basis)},
            {"scale_divisor", s.scale_divisor},
            {"output", to_string(s.output)}};
}

json sublattice_json(const Sublattice& s)
{
    return {{"form", to_string(s.form)},
            {"reduced", to_string(minkowski_reduce(s.form).form)},
            {"index", s.index},
            {"basis", matrix_json(s.basis)}};
}

json ssr_json(const SsrReport& r)
{
    json j = {{"form", to_string(r.form)}, {"bound", r.bound}, {"passed", r.passed}};
    j["m_s"] = r.m_s ? json(*r.m_s) : json(nullptr);
    if (r.counterexample)
        j["counterexample"] = {{"n", r.counterexample->n}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
    else
        j["counterexample"] = nullptr;
    return j;
}

std::optional<Scale> scale_from(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    if (s == "integral") return Scale::integral;
    if (s == "half") return Scale::half;
    throw ParseError("--scale must be 'integral' or 'half'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representation numbers, genera and strongly s-regular checks for ternary forms"};
    app.require_subcommand(1);
    std::string tables = default_tables_path();
    app.add_flag("--text", text_mode, "aligned text instead of JSON");
    app.add_option("--tables", tables, "path to tables207.jsonl")->check(CLI::ExistingFile);

    std::string form_text, other_text;
    Int n = 0, bound = 40, p = 0, times = 1, cap = default_ms_cap;
    bool list = false, solutions = false, no_identities = false;
    std::string scale_text, block;
    SearchCaps caps;

    auto* rcount = app.add_subcommand("rcount", "r(n,f)");
    rcount->add_option("FORM", form_text)->required();
    rcount->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
    rcount->add_flag("--solutions", solutions, "also list R(n,f)");

    auto* theta = app.add_subcommand("theta", "r(n,f) for 0 <= n <= B");
    theta->add_option("FORM", form_text)->required();
    theta->add_option("B", n)->required()->check(CLI::NonNegativeNumber);

    auto* ms = app.add_subcommand("ms", "least n with r(n^2,f) > 0");
    ms->add_option("FORM", form_text)->required();
    ms->add_option("--cap", cap)->check(CLI::PositiveNumber);

    auto* ssr = app.add_subcommand("ssr", "check the strongly s-regular identity up to a bound");
    ssr->add_option("FORM", form_text)->required();
    ssr->add_option("--bound", bound)->check(CLI::PositiveNumber);

    auto* terminal = app.add_subcommand("terminal", "reduce to a terminal form by Watson transformations");
    terminal->add_option("FORM", form_text)->required();
    terminal->add_option("--cap", cap)->check(CLI::PositiveNumber);

    auto* watson = app.add_subcommand("watson", "lambda_p applied K times");
    watson->add_option("FORM", form_text)->required();
    watson->add_option("P", p)->required()->check(CLI::PositiveNumber);
    watson->add_option("--times", times)->check(CLI::PositiveNumber);

    auto* gamma = app.add_subcommand("gamma", "the two index-p sublattices with norm in pZ");
    gamma->add_option("FORM", form_text)->required();
    gamma->add_option("P", p)->required()->check(CLI::PositiveNumber);

    auto* genus = app.add_subcommand("genus", "classes, automorphism orders and mass of the genus");
    genus->add_option("FORM", form_text)->required();
    genus->add_option("--bound", bound, "square-distinction scan bound")->check(CLI::PositiveNumber);

    auto* isometric = app.add_subcommand("isometric", "isometry test (exit 1 when not isometric)");
    isometric->add_option("F", form_text)->required();
    isometric->add_option("G", other_text)->required();

    auto* autos = app.add_subcommand("auto", "automorphism group order");
    autos->add_option("FORM", form_text)->required();
    autos->add_flag("--list", list, "list the matrices");

    auto* search = app.add_subcommand("search", "bounded search for strongly s-regular forms representing 1");
    search->add_option("--scale", scale_text)->check(CLI::IsMember({"integral", "half"}));
    search->add_option("--block", block);
    search->add_option("--bound", bound)->check(CLI::PositiveNumber);
    search->add_option("--max-coeff", caps.max_coeff)->check(CLI::PositiveNumber);
    search->add_option("--max-disc", caps.max_discriminant)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-tables", "check every dataset entry");
    verify->add_option("--bound", bound)->check(CLI::PositiveNumber);
    verify->add_flag("--no-identities", no_identities, "skip the identity suites");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*rcount) {
            const TernaryForm f = read_form(form_text, false);
            const RepResult r = rep_count(f, n, solutions);
            json j = {{"n", r.n}, {"count", r.count}};
            if (r.solutions) {
                j["solutions"] = json::array();
                for (const auto& x : *r.solutions) j["solutions"].push_back(vector_json(x));
            }
            emit(j);
            return exit_ok;
        }
        if (*theta) {
            const ThetaPrefix t = theta_prefix(read_form(form_text, false), n);
            emit({{"bound", t.bound}, {"counts", t.counts}});
            return exit_ok;
        }
        if (*ms) {
            const TernaryForm f = read_form(form_text, true);
            const auto m = min_square(f, cap);
            emit({{"form", to_string(f)}, {"cap", cap}, {"m_s", m ? json(*m) : json(nullptr)}});
            return m ? exit_ok : exit_check_failed;
        }
        if (*ssr) {
            const SsrReport r = check_ssr(read_form(form_text, true), bound);
            emit(ssr_json(r));
            return r.passed ? exit_ok : exit_check_failed;
        }
        if (*terminal) {
            const TernaryForm f = read_form(form_text, true);
            const TerminalReduction r = reduce_to_terminal(f, cap);
            json steps = json::array();
            for (const auto& s : r.chain.steps) steps.push_back(step_json(s));
            emit({{"form", to_string(f)}, {"N", r.N}, {"descents", r.descents}, {"terminal", to_string(r.terminal_form)},
                  {"steps", steps}});
            return exit_ok;
        }
        if (*watson) {
            TernaryForm current = read_form(form_text, false);
            json steps = json::array();
            for (Int k = 0; k < times; ++k) {
                const WatsonStep s = watson_lambda(current, p);
                steps.push_back(step_json(s));
                current = s.output;
            }
            emit({{"p", p}, {"times", times}, {"output", to_string(current)}, {"steps", steps}});
            return exit_ok;
        }
        if (*gamma) {
            const GammaPair g = gamma_pair(read_form(form_text, false), p);
            emit({{"p", g.p}, {"gamma1", sublattice_json(g.gamma1)}, {"gamma2", sublattice_json(g.gamma2)}});
            return exit_ok;
        }
        if (*genus) {
            const GenusData g = enumerate_genus(read_form(form_text, true));
            json classes = json::array();
            for (const auto& c : g.classes)
                classes.push_back({{"form", to_string(c.form)}, {"automorphism_order", c.automorphism_order}});
            const SquareDistinction sq = indistinguishable_by_squares(g, bound);
            json j = {{"base", to_string(g.base)},
                      {"class_number", g.class_number()},
                      {"classes", classes},
                      {"mass", g.mass.str()},
                      {"neighbor_primes", g.neighbor_primes},
                      {"square_bound", bound},
                      {"indistinguishable_by_squares", sq.indistinguishable}};
            if (sq.witness)
                j["square_witness"] = {{"n", sq.witness->n},
                                       {"first", to_string(g.classes[sq.witness->first].form)},
                                       {"second", to_string(g.classes[sq.witness->second].form)}};
            emit(j);
            return exit_ok;
        }
        if (*isometric) {
            const auto u = is_isometric(read_form(form_text, false), read_form(other_text, false));
            json j = {{"isometric", u.has_value()}};
            if (u) j["map"] = matrix_json(*u);
            emit(j);
            return u ? exit_ok : exit_check_failed;
        }
        if (*autos) {
            const TernaryForm f = read_form(form_text, false);
            if (!list) {
                emit({{"form", to_string(f)}, {"order", automorphism_order(f)}});
                return exit_ok;
            }
            const auto group = automorphisms(f);
            json mats = json::array();
            for (const auto& g : group) mats.push_back(matrix_json(g));
            emit({{"form", to_string(f)}, {"order", group.size()}, {"automorphisms", mats}});
            return exit_ok;
        }
        if (*search) {
            SearchOptions opt;
            opt.scale = scale_from(scale_text);
            if (!block.empty()) opt.block = block;
            opt.bound = bound;
            opt.caps = caps;
            opt.tables_path = tables;
            const SearchReport r = search_representing_one(opt);
            auto forms = [](const std::vector<TernaryForm>& v) {
                json a = json::array();
                for (const auto& f : v) a.push_back(to_string(f));
                return a;
            };
            emit({{"bound", bound},
                  {"candidates_examined", r.candidates_examined},
                  {"candidates_pruned", r.candidates_pruned},
                  {"passer_count", r.passers.size()},
                  {"passers", forms(r.passers)},
                  {"matched_against_dataset", r.matched_against_dataset},
                  {"discrepancies", forms(r.discrepancies)},
                  {"missing", forms(r.missing)},
                  {"note", "finite-bound reproduction; the dataset is ground truth"}});
            return r.matched_against_dataset ? exit_ok : exit_check_failed;
        }
        if (*verify) {
            const TablesReport r = verify_tables(bound, tables, !no_identities);
            json failures = json::array();
            for (const auto& e : r.entries)
                if (!e.passed) failures.push_back({{"form", to_string(e.entry.form)}, {"failures", e.failures}});
            json blocks = json::array();
            for (const auto& [key, count] : r.block_counts)
                blocks.push_back({{"table", key.first}, {"block", key.second}, {"count", count}});
            json ids = json::array();
            std::size_t id_failed = 0;
            for (const auto& c : r.identities) {
                if (!c.passed) {
                    ++id_failed;
                    ids.push_back({{"name", c.name}, {"failure", c.failure.value_or("")}});
                }
            }
            emit({{"bound", r.bound},
                  {"entries", r.entries.size()},
                  {"failed_entries", r.failed_entries()},
                  {"entry_failures", failures},
                  {"block_counts", blocks},
                  {"dataset_failures", r.failures},
                  {"identity_checks", r.identities.size()},
                  {"identity_failures", id_failed},
                  {"failed_identities", ids},
                  {"passed", r.passed()},
                  {"note", "certified up to the bound only; unbounded statements rest on the published proofs"}});
            return r.passed() ? exit_ok : exit_check_failed;
        }
    }
    catch (const ParseError& e) {
        std::cerr << "tsl: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const NotPositiveDefinite& e) {
        std::cerr << "tsl: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const NotPrimitive& e) {
        std::cerr << "tsl: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const InvalidPrime& e) {
        std::cerr << "tsl: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error& e) {
        std::cerr << "tsl: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
