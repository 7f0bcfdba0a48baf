#include "tsl/search.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "tsl/enumerate.hpp"
#include "tsl/genus.hpp"
#include "tsl/parallel.hpp"
#include "tsl/reduce.hpp"

namespace tsl {

namespace {

bool by_discriminant(const TernaryForm& x, const TernaryForm& y)
{
    const Int dx = discriminant4(x).value, dy = discriminant4(y).value;
    return dx != dy ? dx < dy : x < y;
}

const std::map<std::pair<int, std::string>, int>& expected_block_counts()
{
    static const std::map<std::pair<int, std::string>, int> counts{
        {{1, "3∤dL"}, 47},         {{1, "3|dL,5∤dL"}, 45},  {{1, "15|dL,7∤dL"}, 9},
        {{2, "3∤dL"}, 37},         {{2, "3|dL,5∤dL"}, 47},  {{2, "15|dL,7∤dL"}, 18},
        {{2, "105|dL,11∤dL"}, 4},
    };
    return counts;
}

} // namespace

std::string default_tables_path() { return TSL_DEFAULT_TABLES; }

std::vector<TableEntry> load_tables(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open table dataset " + path);
    std::vector<TableEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            TableEntry e;
            e.form = make_form(j.at("form").get<std::array<Int, 6>>());
            e.table = j.at("table").get<int>();
            e.block = j.at("block").get<std::string>();
            e.class_number = j.at("class_number").get<int>();
            if (!j.at("mark").is_null()) e.mark = j.at("mark").get<std::string>();
            if (j.contains("note")) e.note = j.at("note").get<std::string>();
            out.push_back(std::move(e));
        }
        catch (const nlohmann::json::exception& ex) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + ex.what());
        }
    }
    return out;
}

std::string block_tag(const TernaryForm& f)
{
    const Int D = discriminant4(f).value;
    if (D % 3 != 0) return "3∤dL";
    if (D % 5 != 0) return "3|dL,5∤dL";
    if (D % 7 != 0) return "15|dL,7∤dL";
    if (D % 11 != 0) return "105|dL,11∤dL";
    return "1155|dL";
}

Scale scale_of(const TernaryForm& f) { return f.integral_scale() ? Scale::integral : Scale::half; }

std::vector<TernaryForm> enumerate_candidates(Scale scale, const SearchCaps& caps)
{
    std::vector<TernaryForm> out;
    const Int A = caps.max_coeff;
    if (scale == Scale::integral) {
        for (Int a = 1; a <= A; ++a)
            for (Int c = a; c <= A; ++c)
                for (Int b2 = 0; b2 <= a; b2 += 2) {
                    const TernaryForm f = make_lattice(1, a, c, b2, 0, 0);
                    if (discriminant4(f).value <= caps.max_discriminant) out.push_back(f);
                }
        return out;
    }
    for (Int a = 1; a <= A; ++a)
        for (Int b = a; b <= A; ++b)
            for (Int d = 0; d <= a; ++d)
                for (Int e = -1; e <= 1; ++e)
                    for (Int f = 0; f <= 1; ++f) {
                        if (d % 2 == 0 && e % 2 == 0 && f % 2 == 0) continue;
                        const TernaryForm g{1, a, b, d, e, f};
                        const Mat3 gram = g.gram();
                        if (!is_positive_definite(gram)) continue;
                        if (discriminant4(gram) > caps.max_discriminant) continue;
                        out.push_back(g);
                    }
    return out;
}

bool prune_by_prime_divisors(const TernaryForm& f)
{
    const Int D = discriminant4(f).value;
    const Int all = f.integral_scale() ? 3 * 5 * 7 : 3 * 5 * 7 * 11;
    return D % all != 0;
}

SearchReport search_representing_one(const SearchOptions& options)
{
    SearchReport report;
    std::vector<TernaryForm> candidates;
    for (Scale s : {Scale::integral, Scale::half}) {
        if (options.scale && *options.scale != s) continue;
        for (const auto& f : enumerate_candidates(s, options.caps))
            if (!options.block || block_tag(f) == *options.block) candidates.push_back(f);
    }
    report.candidates_examined = static_cast<Int>(candidates.size());

    std::vector<std::optional<TernaryForm>> passed(candidates.size());
    std::vector<char> pruned(candidates.size(), 0);
    parallel_for(candidates.size(), [&](std::size_t i) {
        const TernaryForm& f = candidates[i];
        if (!prune_by_prime_divisors(f)) {
            pruned[i] = 1;
            return;
        }
        if (check_ssr(f, options.bound, 1).passed) passed[i] = minkowski_reduce(f).form;
    });
    report.candidates_pruned = std::count(pruned.begin(), pruned.end(), 1);

    std::set<TernaryForm> classes;
    for (const auto& p : passed)
        if (p) classes.insert(*p);
    report.passers.assign(classes.begin(), classes.end());
    std::sort(report.passers.begin(), report.passers.end(), by_discriminant);
    for (const auto& f : report.passers)
        if (!check_ssr(f, options.bound, 1).passed) throw Error("search: passer " + to_string(f) + " fails re-verification");

    std::set<TernaryForm> expected;
    for (const auto& e : load_tables(options.tables_path)) {
        if (options.scale && scale_of(e.form) != *options.scale) continue;
        if (options.block && e.block != *options.block) continue;
        expected.insert(minkowski_reduce(e.form).form);
    }
    for (const auto& f : report.passers)
        if (!expected.count(f)) report.discrepancies.push_back(f);
    for (const auto& f : expected)
        if (!classes.count(f)) report.missing.push_back(f);
    std::sort(report.missing.begin(), report.missing.end(), by_discriminant);
    report.matched_against_dataset = report.discrepancies.empty() && report.missing.empty();
    return report;
}

bool TablesReport::passed() const
{
    if (!failures.empty() || failed_entries() != 0) return false;
    return std::all_of(identities.begin(), identities.end(), [](const auto& c) { return c.passed; });
}

std::size_t TablesReport::failed_entries() const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.passed; }));
}

TablesReport verify_tables(Int bound, const std::string& path, bool run_identities)
{
    TablesReport report;
    report.bound = bound;
    const auto table = load_tables(path);
    report.entries.resize(table.size());
    std::vector<GenusData> genera(table.size());

    parallel_for(table.size(), [&](std::size_t i) {
        EntryResult& res = report.entries[i];
        res.entry = table[i];
        const TernaryForm& f = res.entry.form;
        auto fail = [&](std::string why) {
            res.passed = false;
            res.failures.push_back(std::move(why));
        };
        if ((res.entry.table == 1) != (scale_of(f) == Scale::integral)) fail("scale does not match table");
        if (block_tag(f) != res.entry.block) fail("block tag " + block_tag(f) + " does not match discriminant");
        if (rep_count(f, 1).count == 0) fail("does not represent 1");
        const TernaryForm reduced = minkowski_reduce(f).form;
        if (reduced.a != f.a || reduced.b != f.b || reduced.c != f.c) fail("diagonal is not the successive minima");
        res.ssr = check_ssr(f, bound);
        if (!res.ssr.passed)
            fail("square identity fails at n=" + std::to_string(res.ssr.counterexample->n));
        genera[i] = enumerate_genus(f);
        res.class_number = genera[i].class_number();
        if (static_cast<int>(res.class_number) != res.entry.class_number)
            fail("class number " + std::to_string(res.class_number) + ", annotated "
                 + std::to_string(res.entry.class_number));
        const bool single = !res.entry.mark;
        if (single != (res.entry.class_number == 1)) fail("mark and annotated class number disagree");
    });

    // S_i and T_i share a genus.
    std::map<std::string, std::size_t> by_mark;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].mark) by_mark[*table[i].mark] = i;
    for (int k = 1; k <= 15; ++k) {
        const auto s = by_mark.find("S" + std::to_string(k)), t = by_mark.find("T" + std::to_string(k));
        if (s == by_mark.end() || t == by_mark.end()) {
            report.failures.push_back("S" + std::to_string(k) + "/T" + std::to_string(k) + " missing from dataset");
            continue;
        }
        const TernaryForm partner = minkowski_reduce(table[t->second].form).form;
        const auto& classes = genera[s->second].classes;
        const bool together = std::any_of(classes.begin(), classes.end(), [&](const auto& c) { return c.form == partner; });
        if (!together) {
            report.entries[s->second].passed = false;
            report.entries[s->second].failures.push_back("T" + std::to_string(k) + " is not in the genus");
        }
    }

    std::set<TernaryForm> classes;
    for (const auto& e : table) {
        ++report.block_counts[{e.table, e.block}];
        classes.insert(minkowski_reduce(e.form).form);
    }
    if (classes.size() != table.size()) report.failures.push_back("dataset entries are not pairwise non-isometric");
    if (report.block_counts != expected_block_counts()) report.failures.push_back("block counts differ from the tables");
    if (run_identities) report.identities = identities::all();
    return report;
}

} // namespace tsl
