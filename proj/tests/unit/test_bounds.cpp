#include <doctest.h>

#include <algorithm>
#include <set>

#include "../common/weighted_tables.hpp"
#include "fplab/bounds.hpp"
#include "fplab/groebner.hpp"
#include "fplab/poly_io.hpp"
#include "fplab/random.hpp"
#include "fplab/tables.hpp"
#include "oracles.hpp"

using namespace fplab;

namespace {

Polynomial P(const char* s, const PrimeField& F, std::size_t m) { return parse_polynomial(s, F, m); }

DecreasingSet two_monomial_J() {
    return DecreasingSet(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {0, 1}, {1, 1}, {2, 1}});
}

std::uint64_t brute_nonzeros(const Polynomial& f, const Grid& grid) {
    std::uint64_t n = 0;
    for (const auto& a : grid.points()) n += oracle::eval(f, a) != 0;
    return n;
}

// A random polynomial whose lex leading monomial lies in J_S: reduce modulo
// the grid ideal, whose footprint is exactly J_S.
std::optional<Polynomial> random_in_staircase(const Grid& grid, const DecreasingSet& J, const MonomialOrdering& ord,
                                              Rng& rng) {
    auto basis = grid_ideal_basis(grid, J, ord);
    auto f = normal_form(random_polynomial(grid.field(), grid.num_vars(), 6, 5, rng), basis.elements(), ord);
    if (f.is_zero()) return std::nullopt;
    return f;
}

}  // namespace

TEST_CASE("footprint_bound examples") {
    PrimeField F(5);
    auto grid = Grid::from_ints(F, {{0, 1, 2}, {0, 1, 2}});
    auto ord = MonomialOrdering::lex(2);

    auto diag = footprint_bound(IdealPresentation({P("x1-x2", F, 2)}), origin_only(2), grid, ord);
    CHECK(diag.value == 3);
    CHECK_FALSE(diag.no_information);
    CHECK(diag.grid_size == 9);
    CHECK(std::get<FootprintWitness>(diag.witness).footprint_size == 3);
    CHECK(oracle::count_J_zeros({P("x1-x2", F, 2)}, origin_only(2), grid) == 3);

    auto unit = footprint_bound(IdealPresentation({P("3", F, 2)}), origin_only(2), grid, ord);
    CHECK(unit.value == 0);
    CHECK(std::get<FootprintWitness>(unit.witness).footprint_size == 0);

    // nothing removed: the full grid survives
    auto all = footprint_bound(IdealPresentation({P("x1^3-3*x1^2+2*x1", F, 2)}), origin_only(2), grid, ord);
    CHECK(all.value == 9);
    CHECK(all.no_information);
}

TEST_CASE("footprint bound on the two-monomial configuration") {
    PrimeField F(5);
    auto grid = Grid::from_ints(F, {{0, 1}, {0, 1}});
    const auto J = two_monomial_J();
    const std::vector<Multiindex> lms{{2, 3}, {8, 1}};
    auto rep = leading_monomial_footprint_bound(lms, J, grid);
    CHECK(rep.value == 3);
    const auto& w = std::get<FootprintWitness>(rep.witness);
    CHECK(w.footprint_size == 28);
    CHECK(w.grid_expansion_size == 36);
    CHECK(w.decreasing_set_size == 9);
    CHECK(std::set<Multiindex>(w.leading_monomials.begin(), w.leading_monomials.end()) ==
          std::set<Multiindex>{{0, 4}, {6, 2}, {12, 0}, {2, 3}, {8, 1}});
    CHECK(staircase_count(lms, J, grid.sizes()) == 28);

    // With the monomials as actual generators Buchberger sees the whole
    // leading ideal, which can only be smaller.
    auto exact = footprint_bound(IdealPresentation({P("x1^2*x2^3", F, 2), P("x1^8*x2", F, 2)}), J, grid,
                                 MonomialOrdering::lex(2));
    CHECK(exact.value <= rep.value);
    CHECK(oracle::count_J_zeros({P("x1^2*x2^3", F, 2), P("x1^8*x2", F, 2)}, J, grid) <= exact.value);
}

TEST_CASE("footprint wrappers agree with the general engine") {
    PrimeField F(7);
    auto grid = Grid::from_ints(F, {{0, 1, 2, 3}, {1, 5, 6}});
    auto ord = MonomialOrdering::grlex(2);
    IdealPresentation I({P("x1^2*x2-x1+3", F, 2)});
    CHECK(classical_footprint_bound(I, grid, ord).value == footprint_bound(I, origin_only(2), grid, ord).value);
    CHECK(multiplicity_footprint_bound(I, 2, grid, ord).value ==
          footprint_bound(I, weighted_ball(WeightVector({1, 1}), 2), grid, ord).value);
    CHECK(coordinate_footprint_bound(I, {2, 1}, grid, ord).value ==
          footprint_bound(I, coordinate_box({2, 1}), grid, ord).value);
    CHECK(weighted_footprint_bound(I, WeightVector({2, 3}), 5, grid, ord).value ==
          footprint_bound(I, weighted_ball(WeightVector({2, 3}), 5), grid, ord).value);
}

TEST_CASE("staircase_removed_count examples") {
    auto J = weighted_ball(WeightVector({3, 2}), 5);
    const std::vector<std::size_t> sizes{4, 4};
    CHECK(staircase_removed_count({0, 1}, J, sizes) == 56);
    CHECK(staircase_removed_count({0, 0}, J, sizes) == 64);
    CHECK(staircase_removed_count({7, 3}, J, sizes) == 1);
    CHECK_THROWS_AS(staircase_removed_count({8, 0}, J, sizes), std::invalid_argument);
    CHECK_THROWS_AS(staircase_removed_count({4, 4}, J, sizes), std::invalid_argument);
}

TEST_CASE("demillo_lipton_general_bound examples") {
    PrimeField F(5);
    auto grid = Grid::from_ints(F, {{0, 1, 2}, {0, 1, 2}});
    auto rep = demillo_lipton_general_bound({1, 1}, origin_only(2), grid);
    CHECK(rep.value == 5);
    const auto& w = std::get<DeMilloLiptonWitness>(rep.witness);
    CHECK(w.removed_count == 4);
    CHECK(w.min_non_zeros == 4);
    CHECK(demillo_lipton_product_nonzeros(P("x1*x2", F, 2), grid) == 4);
    CHECK(brute_nonzeros(P("x1*x2", F, 2), grid) == 4);

    CHECK(demillo_lipton_general_bound({0, 0}, origin_only(2), grid).value == 0);
    CHECK_THROWS_AS(demillo_lipton_general_bound({3, 0}, origin_only(2), grid), std::invalid_argument);
    CHECK_THROWS_AS(demillo_lipton_product_nonzeros(P("x1^3", F, 2), grid), std::invalid_argument);

    PrimeField F3(3);
    auto full = Grid::from_ints(F3, {{0, 1, 2}, {0, 1, 2}});
    CHECK(alon_furedi_min_nonzeros(1, full.sizes()) == 6);
    CHECK(brute_nonzeros(P("x1+x2", F3, 2), full) == 6);
    const std::vector<std::size_t> one{5};
    CHECK(alon_furedi_min_nonzeros(2, one) == 3);
}

TEST_CASE("schwartz_zippel_weighted examples") {
    PrimeField F(5);
    auto full = Grid::from_ints(F, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}});
    auto rep = schwartz_zippel_weighted(P("x1*x2", F, 2), WeightVector({1, 1}), full);
    CHECK(std::get<SchwartzZippelWitness>(rep.witness).multiplicity_sum_bound == 10);
    CHECK(rep.value == 10);
    CHECK_FALSE(rep.no_information);

    auto c = schwartz_zippel_weighted(P("4", F, 2), WeightVector({1, 1}), full);
    CHECK(std::get<SchwartzZippelWitness>(c.witness).multiplicity_sum_bound == 0);

    auto g44 = Grid::from_ints(F, {{0, 1, 2, 3}, {0, 1, 2, 3}});
    CHECK(schwartz_zippel_weighted(P("x1", F, 2), WeightVector({3, 2}), g44, {}, 5).value == 2);
    CHECK(schwartz_zippel_rhs({1, 0}, WeightVector({3, 2}), g44.sizes()) == 12);

    // lex priority x2 > x1 changes the leading monomial of x1 + x2^2
    auto f = P("x1+x2^2", F, 2);
    CHECK(std::get<SchwartzZippelWitness>(schwartz_zippel_weighted(f, WeightVector({1, 1}), full).witness)
              .leading_monomial == Multiindex{1, 0});
    CHECK(std::get<SchwartzZippelWitness>(schwartz_zippel_weighted(f, WeightVector({1, 1}), full, {1, 0}).witness)
              .leading_monomial == Multiindex{0, 2});

    CHECK_THROWS_AS(schwartz_zippel_weighted(Polynomial(F, 2), WeightVector({1, 1}), full), std::invalid_argument);
}

TEST_CASE("nullstellensatz witness examples") {
    PrimeField F3(3);
    auto g = Grid::from_ints(F3, {{1, 2}, {1, 2}});
    auto w = nullstellensatz_witness(P("x1*x2+1", F3, 2), origin_only(2), g, MonomialOrdering::lex(2));
    CHECK(w.point == Point{FieldElement{1}, FieldElement{1}});
    CHECK(w.derivative == Multiindex{0, 0});
    CHECK(w.value.value == 2);

    auto one = nullstellensatz_witness(P("1", F3, 2), origin_only(2), g, MonomialOrdering::lex(2));
    CHECK(one.value.value == 1);

    auto g01 = Grid::from_ints(F3, {{0, 1}, {0, 1}});
    auto J = coordinate_box({2, 1});
    auto sq = nullstellensatz_witness(P("x1^2", F3, 2), J, g01, MonomialOrdering::lex(2));
    CHECK(J.contains(sq.derivative));
    CHECK(sq.value.value != 0);
    CHECK(oracle::eval(oracle::hasse_by_expansion(P("x1^2", F3, 2), sq.derivative), sq.point) == sq.value.value);

    // x1^2 - x1 vanishes on {0,1}: its LM lies outside J_S for J = {0}
    CHECK_THROWS_AS(nullstellensatz_witness(P("x1^2-x1", F3, 2), origin_only(2), g01, MonomialOrdering::lex(2)),
                    std::invalid_argument);

    auto a = alon_nullstellensatz_witness(P("x1*x2+1", F3, 2), {1, 1}, g);
    CHECK(a.value.value == 2);
    CHECK_THROWS_AS(alon_nullstellensatz_witness(P("x1*x2+x1", F3, 2), {1, 0}, g), std::invalid_argument);
    CHECK_THROWS_AS(alon_nullstellensatz_witness(P("x1^2", F3, 2), {2, 0}, g), std::invalid_argument);

    auto wn = weighted_nullstellensatz_witness(P("x1^2", F3, 2), WeightVector({1, 1}), 2, {2, 0}, g01);
    CHECK(weighted_order(wn.derivative, WeightVector({1, 1})) < 2);
    CHECK(wn.value.value != 0);
}

TEST_CASE("whole_grid_check examples") {
    PrimeField F3(3);
    auto full = Grid::from_ints(F3, {{0, 1, 2}, {0, 1, 2}});
    CHECK(whole_grid_check(P("x1^3*x2^3-x1^3*x2-x1*x2^3+x1*x2", F3, 2), WeightVector({1, 1}), 1, full));
    CHECK_FALSE(whole_grid_check(P("1", F3, 2), WeightVector({1, 1}), 1, full));
    auto line = Grid::from_ints(F3, {{0, 1, 2}});
    CHECK(whole_grid_check(P("x1^3-x1", F3, 1).pow(2), WeightVector({1}), 2, line));
    auto uneven = Grid::from_ints(F3, {{0, 1, 2}, {0, 1}});
    CHECK_THROWS_AS(whole_grid_check(P("x1", F3, 2), WeightVector({1, 1}), 1, uneven), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("comparison table reproduces the weighted r = 5 tables") {
    auto t = comparison_table(WeightVector({3, 2}), 5, {4, 4});
    CHECK(t.cells.size() == 64);
    for (int row = 0; row < weighted_tables::kRows; ++row) {
        const std::uint32_t i1 = static_cast<std::uint32_t>(weighted_tables::kRows - 1 - row);
        for (int col = 0; col < weighted_tables::kCols; ++col) {
            const Multiindex lm{i1, static_cast<std::uint32_t>(col)};
            const ComparisonCell* cell = t.find(lm);
            const int top = weighted_tables::staircase[row][col];
            const int bottom = weighted_tables::schwartz_zippel[row][col];
            CAPTURE(lm.to_string());
            if (top == -2) {
                CHECK(cell == nullptr);
                continue;
            }
            REQUIRE(cell != nullptr);
            CHECK(cell->staircase_entry() == TableEntry(static_cast<std::uint64_t>(top)));
            if (bottom == -1) {
                CHECK_FALSE(cell->sz_entry().has_value());
            } else {
                CHECK(cell->sz_entry() == TableEntry(static_cast<std::uint64_t>(bottom)));
            }
        }
    }
}

TEST_CASE("comparison table small cases") {
    auto t = comparison_table(WeightVector({1, 1}), 1, {2, 2});
    REQUIRE(t.cells.size() == 4);
    // no multiplicity: staircase bound = 4 - (2 - i1)(2 - i2)
    for (const auto& c : t.cells) {
        const auto& i = c.leading_monomial;
        CHECK(c.staircase_bound == 4 - (2 - i[0]) * (2 - i[1]));
        CHECK(c.sz_bound == 2 * i[0] + 2 * i[1]);
    }
    CHECK_FALSE(t.find({1, 1})->sz_entry().has_value());
    CHECK(t.find({1, 1})->staircase_entry() == TableEntry(3));

    auto one = comparison_table(WeightVector({1, 1}), 1, {1, 1});
    REQUIRE(one.cells.size() == 1);
    CHECK(one.cells[0].staircase_entry() == TableEntry(0));
    CHECK(one.cells[0].sz_entry() == TableEntry(0));
}

TEST_CASE("table rendering") {
    auto t = comparison_table(WeightVector({3, 2}), 5, {4, 4});
    auto text = render_tables_text(t);
    CHECK(text.find("   1 |  0  2    4    6    8    9   10   11   12   13    14    15") != std::string::npos);
    CHECK(text.find("   1 |  0  1    3    4    6    8    9   11   12   14     -     -") != std::string::npos);
    auto csv = render_tables_csv(t);
    CHECK(csv.rfind("table,i1,i2,bound\n", 0) == 0);
    CHECK(csv.find("schwartz-zippel,7,0,-\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 129);
    auto t3 = comparison_table(WeightVector({1, 1, 1}), 2, {2, 2, 2});
    CHECK_THROWS_AS(render_table_text(t3, TableKind::staircase), std::invalid_argument);
}

TEST_CASE("property: serial and parallel tables agree") {
    Rng rng(31);
    for (int n = 0; n < 40; ++n) {
        const std::size_t m = uniform(rng, 1, 3);
        auto w = random_weights(m, 4, rng);
        const std::uint64_t r = uniform(rng, 1, 8);
        std::vector<std::size_t> sizes(m);
        for (auto& s : sizes) s = uniform(rng, 1, 4);
        auto a = comparison_table(w, r, sizes);
        auto b = serial::comparison_table(w, r, sizes);
        REQUIRE(a.cells.size() == b.cells.size());
        for (std::size_t k = 0; k < a.cells.size(); ++k) {
            CHECK(a.cells[k].leading_monomial == b.cells[k].leading_monomial);
            CHECK(a.cells[k].staircase_bound == b.cells[k].staircase_bound);
            CHECK(a.cells[k].sz_bound == b.cells[k].sz_bound);
        }
    }
}

TEST_CASE("property: footprint bound is sound and never looser than the single-LM bound") {
    Rng rng(41);
    for (int n = 0; n < 200; ++n) {
        PrimeField F(uniform(rng, 0, 1) ? 5 : 7);
        const std::size_t m = uniform(rng, 1, 2);
        auto grid = random_grid(F, m, 4, rng);
        auto J = random_decreasing_set(m, uniform(rng, 1, 6), rng);
        auto ord = MonomialOrdering::lex(m);
        auto f = random_in_staircase(grid, J, ord, rng);
        if (!f) continue;
        auto fp = footprint_bound(IdealPresentation({*f}), J, grid, ord);
        CHECK(oracle::count_J_zeros({*f}, J, grid) <= fp.value);
        CHECK(fp.no_information == (fp.value >= grid.cardinality()));
        auto dl = demillo_lipton_general_bound(f->leading_monomial(ord), J, grid);
        CHECK(fp.value <= dl.value);
    }
}

TEST_CASE("property: no-multiplicity chain footprint <= #S - prod(#S_j - i_j) <= SZ") {
    Rng rng(43);
    for (int n = 0; n < 150; ++n) {
        PrimeField F(7);
        const std::size_t m = uniform(rng, 1, 3);
        auto grid = random_grid(F, m, 4, rng);
        auto ord = MonomialOrdering::lex(m);
        auto f = random_in_staircase(grid, origin_only(m), ord, rng);
        if (!f) continue;
        const auto lm = f->leading_monomial(ord);
        auto fp = classical_footprint_bound(IdealPresentation({*f}), grid, ord);
        std::uint64_t prod = 1;
        for (std::size_t j = 0; j < m; ++j) prod *= grid.sizes()[j] - lm[j];
        const std::uint64_t middle = grid.cardinality() - prod;
        CHECK(fp.value <= middle);
        const std::vector<std::uint32_t> ones(m, 1);
        CHECK(middle <= schwartz_zippel_rhs(lm, WeightVector(ones), grid.sizes()));
    }
}

TEST_CASE("property: the no-information region of the Schwartz-Zippel table") {
    Rng rng(47);
    int region_hits = 0;
    for (int n = 0; n < 60; ++n) {
        const std::size_t m = uniform(rng, 1, 3);
        auto w = random_weights(m, 4, rng);
        const std::uint64_t r = uniform(rng, 1, 8);
        std::vector<std::size_t> sizes(m);
        std::uint64_t card = 1;
        for (auto& s : sizes) card *= (s = uniform(rng, 1, 4));
        auto t = comparison_table(w, r, sizes);
        for (const auto& c : t.cells) {
            std::uint64_t lower = 0;
            std::uint64_t scaled = 0;  // #S * sum i_j w_j / #S_j
            for (std::size_t j = 0; j < m; ++j) {
                lower += (c.leading_monomial[j] / sizes[j]) * w[j];
                scaled += card / sizes[j] * c.leading_monomial[j] * w[j];
            }
            if (lower < r && r * card <= scaled) {
                ++region_hits;
                CHECK_FALSE(c.sz_entry().has_value());
                CHECK(c.staircase_entry().has_value());
            }
        }
    }
    CHECK(region_hits > 0);
}

TEST_CASE("property: Nullstellensatz witnesses check out") {
    Rng rng(53);
    for (int n = 0; n < 150; ++n) {
        PrimeField F(uniform(rng, 0, 1) ? 3 : 5);
        const std::size_t m = uniform(rng, 1, 2);
        auto grid = random_grid(F, m, 3, rng);
        auto J = random_decreasing_set(m, uniform(rng, 1, 4), rng);
        auto ord = MonomialOrdering(static_cast<OrderingKind>(uniform(rng, 0, 2)), m);
        auto f = random_in_staircase(grid, J, ord, rng);
        if (!f) continue;
        auto w = nullstellensatz_witness(*f, J, grid, ord);
        CHECK(grid.contains(w.point));
        CHECK(J.contains(w.derivative));
        CHECK(w.value.value != 0);
        CHECK(oracle::eval(oracle::hasse_by_expansion(*f, w.derivative), w.point) == w.value.value);
    }
}

TEST_CASE("property: DeMillo-Lipton and Alon-Furedi against grid scans") {
    Rng rng(59);
    for (int n = 0; n < 150; ++n) {
        PrimeField F(uniform(rng, 0, 1) ? 5 : 7);
        const std::size_t m = uniform(rng, 1, 3);
        auto grid = random_grid(F, m, 4, rng);
        auto f = random_polynomial(F, m, 4, 4, rng);
        const auto actual = brute_nonzeros(f, grid);
        bool below = true;
        for (std::size_t j = 0; j < m; ++j) below = below && f.degree_in(j) < grid.sizes()[j];
        if (below) CHECK(demillo_lipton_product_nonzeros(f, grid) <= actual);
        if (actual > 0) CHECK(alon_furedi_min_nonzeros(f.total_degree(), grid.sizes()) <= actual);
    }
}

TEST_CASE("property: weighted Schwartz-Zippel holds for every lex priority") {
    Rng rng(61);
    for (int n = 0; n < 80; ++n) {
        PrimeField F(7);
        const std::size_t m = uniform(rng, 1, 2);
        auto grid = random_grid(F, m, 4, rng);
        auto w = random_weights(m, 3, rng);
        auto f = random_polynomial(F, m, 5, 4, rng);
        std::vector<std::size_t> prio(m);
        for (std::size_t k = 0; k < m; ++k) prio[k] = k;
        do {
            auto rep = schwartz_zippel_weighted(f, w, grid, prio);
            std::uint64_t sum = 0;
            for (const auto& a : grid.points()) sum += oracle::multiplicity(f, a, w);
            CHECK(sum <= std::get<SchwartzZippelWitness>(rep.witness).multiplicity_sum_bound);
        } while (std::next_permutation(prio.begin(), prio.end()));
    }
}
