#include "fplab/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fplab/bounds.hpp"

namespace fplab {

TableEntry ComparisonCell::staircase_entry() const {
    if (staircase_bound >= grid_size) return std::nullopt;
    return staircase_bound;
}

TableEntry ComparisonCell::sz_entry() const {
    if (sz_bound >= grid_size) return std::nullopt;
    return sz_bound;
}

const ComparisonCell* ComparisonTable::find(const Multiindex& lm) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), lm,
                               [](const ComparisonCell& c, const Multiindex& m) { return c.leading_monomial < m; });
    if (it == cells.end() || it->leading_monomial != lm) return nullptr;
    return &*it;
}

namespace {

struct TableSetup {
    DecreasingSet J;
    std::vector<Multiindex> js;
    std::uint64_t card;
};

TableSetup setup(const WeightVector& w, std::uint64_t r, const std::vector<std::size_t>& sizes) {
    if (sizes.size() != w.size()) throw std::invalid_argument("need one size per weight");
    std::uint64_t card = 1;
    for (auto s : sizes) {
        if (s == 0) throw std::invalid_argument("coordinate set sizes must be positive");
        card *= s;
    }
    DecreasingSet J = weighted_ball(w, r);
    auto js = grid_expand(J, sizes);
    return {std::move(J), std::move(js), card};
}

// Cell for lm, given the precomputed J_S (sorted).
ComparisonCell make_cell(const Multiindex& lm, const TableSetup& t, const WeightVector& w, std::uint64_t r,
                         const std::vector<std::size_t>& sizes) {
    std::uint64_t removed = 0;
    for (const auto& j : t.js) {
        if (lm.divides(j)) ++removed;
    }
    ComparisonCell cell{lm, 0, 0, t.card};
    cell.staircase_bound = (t.js.size() - removed) / t.J.size();
    cell.sz_bound = schwartz_zippel_rhs(lm, w, sizes) / r;
    return cell;
}

std::string entry_text(const TableEntry& e) { return e ? std::to_string(*e) : "-"; }

std::string power_label(const char* var, std::uint32_t e) {
    if (e == 0) return "1";
    std::string s = var;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

ComparisonTable comparison_table(const WeightVector& w, std::uint64_t r, const std::vector<std::size_t>& sizes) {
    TableSetup t = setup(w, r, sizes);
    std::vector<ComparisonCell> cells(t.js.size(), ComparisonCell{Multiindex(sizes.size()), 0, 0, 0});
    const auto n = static_cast<std::int64_t>(t.js.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        cells[idx] = make_cell(t.js[idx], t, w, r, sizes);
    }
    return {w, r, sizes, std::move(cells)};
}

namespace serial {
ComparisonTable comparison_table(const WeightVector& w, std::uint64_t r, const std::vector<std::size_t>& sizes) {
    TableSetup t = setup(w, r, sizes);
    std::vector<ComparisonCell> cells;
    cells.reserve(t.js.size());
    for (const auto& lm : t.js) cells.push_back(make_cell(lm, t, w, r, sizes));
    return {w, r, sizes, std::move(cells)};
}
}  // namespace serial

std::string render_table_text(const ComparisonTable& table, TableKind kind) {
    if (table.sizes.size() != 2) throw std::invalid_argument("text tables need exactly two variables");
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    for (const auto& c : table.cells) {
        rows = std::max(rows, c.leading_monomial[0] + 1);
        cols = std::max(cols, c.leading_monomial[1] + 1);
    }
    std::vector<std::string> row_labels(rows);
    std::size_t label_width = 0;
    for (std::uint32_t i = 0; i < rows; ++i) {
        row_labels[i] = power_label("x1", i);
        label_width = std::max(label_width, row_labels[i].size());
    }
    std::vector<std::string> col_labels(cols);
    std::vector<std::size_t> widths(cols);
    for (std::uint32_t j = 0; j < cols; ++j) {
        col_labels[j] = power_label("x2", j);
        widths[j] = col_labels[j].size();
    }
    std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(cols));
    for (const auto& c : table.cells) {
        const auto i = c.leading_monomial[0];
        const auto j = c.leading_monomial[1];
        grid[i][j] = entry_text(kind == TableKind::staircase ? c.staircase_entry() : c.sz_entry());
        widths[j] = std::max(widths[j], grid[i][j].size());
    }
    auto pad = [](const std::string& s, std::size_t width) { return std::string(width - s.size(), ' ') + s; };
    std::ostringstream out;
    for (std::uint32_t i = rows; i-- > 0;) {
        std::string line = pad(row_labels[i], label_width) + " |";
        std::uint32_t last = 0;
        for (std::uint32_t j = 0; j < cols; ++j) {
            if (!grid[i][j].empty()) last = j + 1;
        }
        for (std::uint32_t j = 0; j < last; ++j) line += " " + pad(grid[i][j], widths[j]);
        out << line << '\n';
    }
    std::string rule(label_width + 1, '-');
    rule += '+';
    for (auto wdt : widths) rule += std::string(wdt + 1, '-');
    out << rule << '\n';
    std::string footer = std::string(label_width, ' ') + " |";
    for (std::uint32_t j = 0; j < cols; ++j) footer += " " + pad(col_labels[j], widths[j]);
    out << footer << '\n';
    return out.str();
}

std::string render_tables_text(const ComparisonTable& table) {
    std::ostringstream out;
    out << "weights (";
    for (std::size_t k = 0; k < table.weights.size(); ++k) out << (k ? "," : "") << table.weights[k];
    out << "), r = " << table.r << ", sizes (";
    for (std::size_t k = 0; k < table.sizes.size(); ++k) out << (k ? "," : "") << table.sizes[k];
    out << ")\n\nfootprint (staircase) bound\n"
        << render_table_text(table, TableKind::staircase) << "\nSchwartz-Zippel bound\n"
        << render_table_text(table, TableKind::schwartz_zippel);
    return out.str();
}

std::string render_tables_csv(const ComparisonTable& table) {
    std::ostringstream out;
    out << "table";
    for (std::size_t k = 0; k < table.sizes.size(); ++k) out << ",i" << k + 1;
    out << ",bound\n";
    for (TableKind kind : {TableKind::staircase, TableKind::schwartz_zippel}) {
        const char* name = kind == TableKind::staircase ? "footprint" : "schwartz-zippel";
        for (const auto& c : table.cells) {
            out << name;
            for (auto e : c.leading_monomial) out << ',' << e;
            out << ',' << entry_text(kind == TableKind::staircase ? c.staircase_entry() : c.sz_entry()) << '\n';
        }
    }
    return out.str();
}

}  // namespace fplab
