#ifndef TSL_SEARCH_HPP
#define TSL_SEARCH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsl/form.hpp"
#include "tsl/identities.hpp"
#include "tsl/ssr.hpp"

namespace tsl {

enum class Scale { integral, half };

struct TableEntry {
    TernaryForm form;
    int table = 1;
    std::string block;
    int class_number = 1;
    std::optional<std::string> mark; // dagger, boldface, S1..T15, L1, L4, L10, M6
    std::optional<std::string> note;
};

/// Path compiled into the library; the CLI can override it.
std::string default_tables_path();
std::vector<TableEntry> load_tables(const std::string& path = default_tables_path());

/// Row-block tag from the odd part of 4dL: "3∤dL", "3|dL,5∤dL", "15|dL,7∤dL",
/// "105|dL,11∤dL", or "1155|dL" past the tables.
std::string block_tag(const TernaryForm& f);
Scale scale_of(const TernaryForm& f);

struct SearchCaps {
    Int max_coeff = 81;
    Int max_discriminant = 4800; // on D = 4dL
};

/// Integral: [1,a,c,2b,0,0] with 0 <= 2b <= a <= c. Half: [1,a,b,d,e,f] with
/// 1 <= a <= b, 0 <= d <= a, e in {-1,0,1}, f in {0,1}, some cross term odd.
std::vector<TernaryForm> enumerate_candidates(Scale scale, const SearchCaps& caps = {});

/// False (discard) iff dL is divisible by 3, 5, 7 (integral) or 3, 5, 7, 11 (half).
bool prune_by_prime_divisors(const TernaryForm& f);

struct SearchOptions {
    std::optional<Scale> scale;
    std::optional<std::string> block;
    Int bound = 40;
    SearchCaps caps;
    std::string tables_path = default_tables_path();
};

struct SearchReport {
    Int candidates_examined = 0;
    Int candidates_pruned = 0;
    /// Canonical class representatives, sorted by D then coefficients.
    std::vector<TernaryForm> passers;
    bool matched_against_dataset = false;
    /// Passers absent from the dataset (finite-bound false positives).
    std::vector<TernaryForm> discrepancies;
    /// Dataset entries in the searched range that did not pass: hard errors.
    std::vector<TernaryForm> missing;
};

SearchReport search_representing_one(const SearchOptions& options = {});

struct EntryResult {
    TableEntry entry;
    bool passed = true;
    std::vector<std::string> failures;
    std::size_t class_number = 0;
    SsrReport ssr;
};

struct TablesReport {
    Int bound = 0;
    std::vector<EntryResult> entries;
    /// (table, block) -> number of entries.
    std::map<std::pair<int, std::string>, int> block_counts;
    std::vector<identities::Check> identities;
    std::vector<std::string> failures; // dataset-level failures

    bool passed() const;
    std::size_t failed_entries() const;
};

TablesReport verify_tables(Int bound = 40, const std::string& path = default_tables_path(), bool run_identities = true);

} // namespace tsl

#endif
