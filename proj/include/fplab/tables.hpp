#ifndef FPLAB_TABLES_HPP
#define FPLAB_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/multiindex.hpp"

namespace fplab {

/// A bound entry; nullopt means no information (the bound is >= #S).
using TableEntry = std::optional<std::uint64_t>;

struct ComparisonCell {
    Multiindex leading_monomial;
    std::uint64_t staircase_bound = 0;   // floor((#J_S - #{j in J_S : j >= lm}) / #J)
    std::uint64_t sz_bound = 0;          // floor(#S * sum lm_j w_j / #S_j / r)
    std::uint64_t grid_size = 0;

    TableEntry staircase_entry() const;
    TableEntry sz_entry() const;
};

/// Both bounds for every leading monomial in J_S, J = {i : |i|_w < r}.
/// Cells follow the sorted order of J_S.
struct ComparisonTable {
    WeightVector weights;
    std::uint64_t r = 1;
    std::vector<std::size_t> sizes;
    std::vector<ComparisonCell> cells;

    const ComparisonCell* find(const Multiindex& lm) const;
};

ComparisonTable comparison_table(const WeightVector& w, std::uint64_t r, const std::vector<std::size_t>& sizes);

namespace serial {
ComparisonTable comparison_table(const WeightVector& w, std::uint64_t r, const std::vector<std::size_t>& sizes);
}

enum class TableKind { staircase, schwartz_zippel };

/// Two-variable layout: rows are x1 powers printed from the highest down to
/// 1, columns are x2 powers from 1 upward. Cells outside J_S are blank and
/// no-information entries print as "-". Throws unless there are two variables.
std::string render_table_text(const ComparisonTable& table, TableKind kind);

/// Both tables, with headings, as emitted by the `table` command.
std::string render_tables_text(const ComparisonTable& table);

/// Long format, any number of variables: header `table,i1,...,im,bound`,
/// one line per cell of each table, "-" for no information.
std::string render_tables_csv(const ComparisonTable& table);

}  // namespace fplab

#endif  // FPLAB_TABLES_HPP
