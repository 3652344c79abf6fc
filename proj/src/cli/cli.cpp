#include "fplab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "fplab/bounds.hpp"
#include "fplab/codes.hpp"
#include "fplab/groebner.hpp"
#include "fplab/hermite.hpp"
#include "fplab/poly_io.hpp"
#include "fplab/random.hpp"
#include "fplab/tables.hpp"
#include "fplab/zeros.hpp"

namespace fplab::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::optional<std::uint64_t> modulus;
    std::string grid;
    std::string sizes;
    std::string weights;
    std::optional<std::uint64_t> r;
    std::string box;
    std::string j_explicit;
    std::string order = "lex";
    std::string priority;
    std::vector<std::string> polys;
    std::string monomials;
    std::string targets;
    std::string format = "text";
    std::string golden;
    bool oracle = false;
    std::uint64_t seed = 1;
    std::uint64_t count = 500;
};

// Thrown for an oracle mismatch; mapped to exit code 3.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad integer in ") + what + ": '" + s + "'");
    }
}

std::vector<std::uint64_t> parse_naturals(const std::string& s, const char* what) {
    std::vector<std::uint64_t> out;
    for (const auto& part : split(s, ',')) {
        const auto v = parse_int(part, what);
        if (v < 0) throw std::invalid_argument(std::string("negative value in ") + what);
        out.push_back(static_cast<std::uint64_t>(v));
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
    return out;
}

PrimeField make_field(const RunConfig& c) {
    if (!c.modulus) throw std::invalid_argument("--modulus/-p is required");
    return PrimeField(*c.modulus);
}

Grid make_grid(const RunConfig& c, const PrimeField& F) {
    if (!c.grid.empty() && !c.sizes.empty()) throw std::invalid_argument("--grid and --sizes are mutually exclusive");
    if (!c.grid.empty()) {
        std::vector<std::vector<std::int64_t>> coords;
        for (const auto& part : split(c.grid, ';')) {
            std::vector<std::int64_t> set;
            for (const auto& e : split(part, ',')) set.push_back(parse_int(e, "--grid"));
            coords.push_back(std::move(set));
        }
        return Grid::from_ints(F, coords);
    }
    if (!c.sizes.empty()) {
        std::vector<std::size_t> sizes;
        for (auto v : parse_naturals(c.sizes, "--sizes")) sizes.push_back(v);
        return Grid::leading_block(F, sizes);
    }
    throw std::invalid_argument("a grid is required (--grid or --sizes)");
}

DecreasingSet make_J(const RunConfig& c, std::size_t m) {
    const int chosen = int(!c.weights.empty()) + int(!c.box.empty()) + int(!c.j_explicit.empty());
    if (chosen > 1) throw std::invalid_argument("--weights/--r, --box and --J-explicit are mutually exclusive");
    if (!c.weights.empty()) {
        if (!c.r) throw std::invalid_argument("--weights needs --r");
        std::vector<std::uint32_t> w;
        for (auto v : parse_naturals(c.weights, "--weights")) w.push_back(static_cast<std::uint32_t>(v));
        if (w.size() != m) throw std::invalid_argument("--weights needs one weight per variable");
        return weighted_ball(WeightVector(std::move(w)), *c.r);
    }
    if (c.r) throw std::invalid_argument("--r needs --weights");
    if (!c.box.empty()) {
        auto r = parse_naturals(c.box, "--box");
        if (r.size() != m) throw std::invalid_argument("--box needs one entry per variable");
        Multiindex box(m);
        for (std::size_t k = 0; k < m; ++k) box[k] = static_cast<Multiindex::value_type>(r[k]);
        return coordinate_box(box);
    }
    if (!c.j_explicit.empty()) {
        static const std::regex tuple(R"(\(([^()]*)\))");
        std::vector<Multiindex> elems;
        std::string rest = c.j_explicit;
        for (std::sregex_iterator it(rest.begin(), rest.end(), tuple), end; it != end; ++it) {
            auto v = parse_naturals((*it)[1].str(), "--J-explicit");
            if (v.size() != m) throw std::invalid_argument("--J-explicit element has the wrong length");
            Multiindex i(m);
            for (std::size_t k = 0; k < m; ++k) i[k] = static_cast<Multiindex::value_type>(v[k]);
            elems.push_back(i);
        }
        if (elems.empty()) throw std::invalid_argument("--J-explicit lists no elements");
        return DecreasingSet(m, std::move(elems));
    }
    return origin_only(m);
}

std::optional<WeightVector> maybe_weights(const RunConfig& c) {
    if (c.weights.empty()) return std::nullopt;
    std::vector<std::uint32_t> w;
    for (auto v : parse_naturals(c.weights, "--weights")) w.push_back(static_cast<std::uint32_t>(v));
    return WeightVector(std::move(w));
}

MonomialOrdering make_ordering(const RunConfig& c, std::size_t m) {
    std::vector<std::size_t> prio;
    if (!c.priority.empty()) {
        for (auto v : parse_naturals(c.priority, "--priority")) {
            if (v == 0) throw std::invalid_argument("--priority uses 1-based variable indices");
            prio.push_back(v - 1);
        }
    }
    auto kind = parse_ordering_kind(c.order);
    if (!kind) throw std::invalid_argument("unknown ordering '" + c.order + "'");
    return MonomialOrdering(*kind, m, prio);
}

std::vector<Polynomial> make_polys(const RunConfig& c, const PrimeField& F, std::size_t m) {
    std::vector<Polynomial> out;
    for (const auto& s : c.polys) out.push_back(parse_polynomial(s, F, m));
    return out;
}

std::vector<Multiindex> make_monomials(const RunConfig& c, std::size_t m) {
    std::vector<Multiindex> out;
    if (c.monomials.empty()) return out;
    for (const auto& s : split(c.monomials, ',')) out.push_back(parse_monomial(s, m));
    return out;
}

std::string format_point(const Point& a) {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k].value);
    return s + ")";
}

json point_json(const Point& a) {
    json j = json::array();
    for (auto e : a) j.push_back(e.value);
    return j;
}

json multiindex_json(const Multiindex& i) {
    json j = json::array();
    for (auto e : i) j.push_back(e);
    return j;
}

std::string join_monomials(const std::vector<Multiindex>& ms) {
    std::string s;
    for (std::size_t k = 0; k < ms.size(); ++k) s += (k ? ", " : "") + format_monomial(ms[k]);
    return s;
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (c.format == a) return;
    }
    throw std::invalid_argument("format '" + c.format + "' is not supported by this command");
}

// bound ---------------------------------------------------------------------

int cmd_bound(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const PrimeField F = make_field(c);
    const Grid grid = make_grid(c, F);
    const std::size_t m = grid.num_vars();
    const DecreasingSet J = make_J(c, m);
    const MonomialOrdering ord = make_ordering(c, m);
    auto polys = make_polys(c, F, m);
    auto monos = make_monomials(c, m);
    if (polys.empty() && monos.empty()) throw std::invalid_argument("bound needs --poly or --monomials");

    std::vector<Polynomial> gens = polys;
    for (const auto& mono : monos) gens.push_back(Polynomial::monomial(F, mono));
    IdealPresentation ideal(gens);

    BoundReport report = polys.empty() ? leading_monomial_footprint_bound(monos, J, grid)
                                       : footprint_bound(ideal, J, grid, ord);
    const auto& w = std::get<FootprintWitness>(report.witness);
    const std::string method = polys.empty() ? "staircase of the given leading monomials"
                                             : "reduced Groebner basis (" + ord.name() + ")";

    std::optional<std::size_t> actual;
    if (c.oracle) actual = zeros_with_multiplicity(ideal, J, grid).size();
    const bool violation = actual && *actual > report.value;

    if (c.format == "json") {
        json j{{"method", polys.empty() ? "staircase" : "groebner"},
               {"ordering", ord.name()},
               {"grid_size", report.grid_size},
               {"J_size", w.decreasing_set_size},
               {"J_S_size", w.grid_expansion_size},
               {"footprint_size", w.footprint_size},
               {"bound", report.value},
               {"no_information", report.no_information}};
        json lms = json::array();
        for (const auto& lm : w.leading_monomials) lms.push_back(format_monomial(lm));
        j["leading_monomials"] = lms;
        if (actual) j["oracle"] = {{"actual", *actual}, {"verdict", violation ? "VIOLATION" : "OK"}};
        out << j.dump(2) << '\n';
    } else {
        out << "method: " << method << '\n'
            << "#S: " << report.grid_size << '\n'
            << "#J: " << w.decreasing_set_size << '\n'
            << "#J_S: " << w.grid_expansion_size << '\n'
            << "leading monomials: " << join_monomials(w.leading_monomials) << '\n'
            << "footprint size: " << w.footprint_size << '\n'
            << "bound: " << report.value << (report.no_information ? " (no information)" : "") << '\n';
        if (actual) out << "actual: " << *actual << '\n' << "verdict: " << (violation ? "VIOLATION" : "OK") << '\n';
    }
    if (violation) throw InvariantViolation("zero count exceeds the footprint bound");
    return ok;
}

// table ---------------------------------------------------------------------

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_format(c, {"text", "csv", "json"});
    if (c.weights.empty() || !c.r) throw std::invalid_argument("table needs --weights and --r");
    std::vector<std::size_t> sizes;
    if (!c.sizes.empty()) {
        if (!c.grid.empty()) throw std::invalid_argument("--grid and --sizes are mutually exclusive");
        for (auto v : parse_naturals(c.sizes, "--sizes")) sizes.push_back(v);
    } else if (!c.grid.empty()) {
        sizes = make_grid(c, make_field(c)).sizes();
    } else {
        throw std::invalid_argument("table needs --sizes or --grid");
    }
    if (c.modulus) (void)PrimeField(*c.modulus);  // validated even though the tables do not depend on it
    auto w = *maybe_weights(c);
    if (w.size() != sizes.size()) throw std::invalid_argument("--weights needs one weight per variable");
    ComparisonTable table = comparison_table(w, *c.r, sizes);

    std::string text;
    if (c.format == "csv") {
        text = render_tables_csv(table);
    } else if (c.format == "json") {
        json cells = json::array();
        for (const auto& cell : table.cells) {
            auto entry = [](const TableEntry& e) { return e ? json(*e) : json(nullptr); };
            cells.push_back({{"lm", multiindex_json(cell.leading_monomial)},
                             {"footprint", entry(cell.staircase_entry())},
                             {"schwartz_zippel", entry(cell.sz_entry())}});
        }
        text = json{{"weights", w.values()}, {"r", *c.r}, {"sizes", sizes}, {"cells", cells}}.dump(2) + "\n";
    } else {
        text = render_tables_text(table);
    }
    out << text;
    if (!c.golden.empty()) {
        std::ifstream in(c.golden, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot read golden file " + c.golden);
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != text) {
            err << "golden mismatch against " << c.golden << '\n';
            return invariant_violation;
        }
        err << "golden match: " << c.golden << '\n';
    }
    return ok;
}

// groebner ------------------------------------------------------------------

int cmd_groebner(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const PrimeField F = make_field(c);
    const Grid grid = make_grid(c, F);
    const std::size_t m = grid.num_vars();
    const DecreasingSet J = make_J(c, m);
    const MonomialOrdering ord = make_ordering(c, m);
    auto polys = make_polys(c, F, m);

    GroebnerBasis basis = grid_ideal_basis(grid, J, ord);
    bool verified = true;
    std::string source = "grid products";
    if (polys.empty()) {
        verified = satisfies_buchberger_criterion(basis.elements(), ord) &&
                   ideal_equal(basis, buchberger(IdealPresentation(basis.elements()), ord));
    } else {
        source = "augmented ideal";
        basis = buchberger(augment_ideal(IdealPresentation(polys), J, grid), ord);
        verified = satisfies_buchberger_criterion(basis.elements(), ord);
    }
    if (c.format == "json") {
        json elems = json::array();
        for (const auto& g : basis.elements()) elems.push_back(format_polynomial(g));
        out << json{{"source", source}, {"ordering", ord.name()}, {"basis", elems}, {"verified", verified}}.dump(2)
            << '\n';
    } else {
        out << "ordering: " << ord.name() << '\n' << "basis (" << source << "):\n";
        for (const auto& g : basis.elements()) out << "  " << format_polynomial(g) << '\n';
        out << "reduced Groebner basis verified: " << (verified ? "yes" : "no") << '\n';
    }
    if (!verified) throw InvariantViolation("Groebner basis verification failed");
    return ok;
}

// interpolate ---------------------------------------------------------------

std::vector<InterpolationTarget> read_targets(const std::string& path, const PrimeField& F, std::size_t m) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read targets file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("targets file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_array()) throw std::invalid_argument("targets file must hold a JSON array");
    std::vector<InterpolationTarget> out;
    try {
        for (const auto& t : doc) {
            Point a;
            for (const auto& v : t.at("point")) a.push_back(F.from_int(v.get<std::int64_t>()));
            Multiindex i(m);
            const auto& d = t.at("derivative");
            if (a.size() != m || d.size() != m) throw std::invalid_argument("target has the wrong number of variables");
            for (std::size_t k = 0; k < m; ++k) {
                const auto v = d[k].get<std::int64_t>();
                if (v < 0) throw std::invalid_argument("negative derivative order in targets");
                i[k] = static_cast<Multiindex::value_type>(v);
            }
            out.push_back({std::move(a), i, F.from_int(t.at("value").get<std::int64_t>())});
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed target entry: " + std::string(e.what()));
    }
    return out;
}

int cmd_interpolate(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const PrimeField F = make_field(c);
    const Grid grid = make_grid(c, F);
    const std::size_t m = grid.num_vars();
    const DecreasingSet J = make_J(c, m);
    if (c.targets.empty()) throw std::invalid_argument("interpolate needs --targets FILE.json");
    auto targets = read_targets(c.targets, F, m);
    for (const auto& t : targets) {
        if (!grid.contains(t.point)) throw std::invalid_argument("target point " + format_point(t.point) + " is off the grid");
    }
    Polynomial f = hermite_interpolate_unique(grid, J, targets);

    bool matches = true;
    if (c.oracle) {
        auto points = grid.points();
        auto derivs = J.graded_elements();
        auto ev = evaluate_with_derivatives(f, points, derivs);
        std::map<std::pair<Point, Multiindex>, FieldElement> wanted;
        for (const auto& t : targets) wanted[{t.point, t.derivative}] = t.value;
        std::size_t pos = 0;
        for (const auto& a : points) {
            for (const auto& i : derivs) {
                auto it = wanted.find({a, i});
                const FieldElement expect = it == wanted.end() ? F.zero() : it->second;
                if (ev[pos++] != expect) matches = false;
            }
        }
    }
    if (c.format == "json") {
        json j{{"polynomial", format_polynomial(f)}};
        if (c.oracle) j["oracle"] = matches ? "OK" : "VIOLATION";
        out << j.dump(2) << '\n';
    } else {
        out << format_polynomial(f) << '\n';
        if (c.oracle) out << "verdict: " << (matches ? "OK" : "VIOLATION") << '\n';
    }
    if (!matches) throw InvariantViolation("interpolant does not reproduce the targets");
    return ok;
}

// encode --------------------------------------------------------------------

int cmd_encode(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    const PrimeField F = make_field(c);
    const Grid grid = make_grid(c, F);
    const std::size_t m = grid.num_vars();
    const DecreasingSet J = make_J(c, m);
    auto monos = make_monomials(c, m);
    if (monos.empty()) throw std::invalid_argument("encode needs --monomials");
    EvaluationCode code = build_code(grid, monos, J);

    if (c.format == "csv") {
        out << generator_csv(code);
        return ok;
    }
    const auto dim = code.dimension();
    const auto lower = code_distance(code, DistanceMode::lower_bound);
    std::optional<std::uint64_t> brute;
    try {
        brute = code_distance(code, DistanceMode::brute_force, EnumerationLimits::from_environment().max_points);
    } catch (const std::length_error&) {
        brute.reset();
    }
    const bool violation = brute && lower > *brute;
    if (c.format == "json") {
        json rows = json::array();
        const auto& G = code.generator();
        for (std::size_t r = 0; r < G.rows(); ++r) {
            json row = json::array();
            for (std::size_t k = 0; k < G.cols(); ++k) row.push_back(G(r, k).value);
            rows.push_back(row);
        }
        json j{{"length", code.length()},
               {"block_size", code.block_size()},
               {"dimension", dim},
               {"distance_lower_bound", lower},
               {"generator", rows}};
        j["distance_brute_force"] = brute ? json(*brute) : json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << "length: " << code.length() << '\n'
            << "block size: " << code.block_size() << '\n'
            << "dimension: " << dim << '\n'
            << "distance lower bound: " << lower << '\n'
            << "distance (brute force): " << (brute ? std::to_string(*brute) : "skipped, above enumeration cap") << '\n'
            << "generator (" << code.generator().rows() << "x" << code.generator().cols() << "):\n";
        const auto& G = code.generator();
        for (std::size_t r = 0; r < G.rows(); ++r) {
            out << "  " << format_monomial(code.monomials()[r]) << ":";
            for (std::size_t k = 0; k < G.cols(); ++k) out << ' ' << G(r, k).value;
            out << '\n';
        }
    }
    if (violation) throw InvariantViolation("distance lower bound exceeds the brute-force distance");
    return ok;
}

// zeros ---------------------------------------------------------------------

int cmd_zeros(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const PrimeField F = make_field(c);
    const Grid grid = make_grid(c, F);
    const std::size_t m = grid.num_vars();
    const DecreasingSet J = make_J(c, m);
    auto polys = make_polys(c, F, m);
    if (polys.empty()) throw std::invalid_argument("zeros needs at least one --poly");
    IdealPresentation ideal(polys);
    ZeroSet zs = zeros_with_multiplicity(ideal, J, grid);
    // Weighted multiplicities are reported for a single polynomial.
    std::vector<std::optional<Multiplicity>> mult(zs.size());
    if (auto w = maybe_weights(c); w && polys.size() == 1) {
        for (std::size_t k = 0; k < zs.size(); ++k) mult[k] = weighted_multiplicity(polys[0], zs.points[k], *w);
    }
    auto mult_text = [](const Multiplicity& mu) { return mu.is_infinite() ? std::string("inf") : std::to_string(mu.value()); };
    if (c.format == "json") {
        json pts = json::array();
        for (std::size_t k = 0; k < zs.size(); ++k) {
            json p{{"point", point_json(zs.points[k])}};
            if (mult[k]) p["weighted_multiplicity"] = mult_text(*mult[k]);
            pts.push_back(p);
        }
        out << json{{"count", zs.size()}, {"zeros", pts}}.dump(2) << '\n';
    } else {
        out << "zeros: " << zs.size() << '\n';
        for (std::size_t k = 0; k < zs.size(); ++k) {
            out << "  " << format_point(zs.points[k]);
            if (mult[k]) out << " m_w=" << mult_text(*mult[k]);
            out << '\n';
        }
    }
    return ok;
}

// selftest ------------------------------------------------------------------

int cmd_selftest(const RunConfig& c, std::ostream& out) {
    Rng rng(c.seed);
    std::uint64_t violations = 0;
    for (std::uint64_t n = 0; n < c.count; ++n) {
        const PrimeField F(n % 2 == 0 ? 5 : 7);
        Grid grid = random_grid(F, 2, 4, rng);
        DecreasingSet J = random_decreasing_set(2, uniform(rng, 1, 6), rng);
        Polynomial f = random_polynomial(F, 2, 6, 6, rng);
        IdealPresentation ideal({f});
        const auto bound = footprint_bound(ideal, J, grid, MonomialOrdering::grevlex(2));
        const auto actual = zeros_with_multiplicity(ideal, J, grid).size();
        const auto w = random_weights(2, 3, rng);
        const auto sz = schwartz_zippel_weighted(f, w, grid);
        const auto msum = multiplicity_sum(f, w, grid);
        const auto& szw = std::get<SchwartzZippelWitness>(sz.witness);
        if (actual > bound.value || msum > szw.multiplicity_sum_bound) {
            ++violations;
            out << "VIOLATION at config " << n << ": " << format_polynomial(f) << '\n';
        }
    }
    out << "selftest: " << c.count << " configs, seed " << c.seed << ", " << violations << " violations\n";
    if (violations) throw InvariantViolation("selftest found violations");
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeros with multiplicity, footprint bounds and Hermite interpolation over finite grids", "fplab"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig c;
    app.add_option("-p,--modulus", c.modulus, "prime modulus p");
    app.add_option("--grid", c.grid, "coordinate sets, e.g. \"0,1,2;0,1,2\"");
    app.add_option("--sizes", c.sizes, "coordinate set sizes, S_j = {0..n_j-1}");
    app.add_option("--weights", c.weights, "weights w, with --r selects J = {|i|_w < r}");
    app.add_option("--r", c.r, "multiplicity threshold");
    app.add_option("--box", c.box, "J = {i : i_j < r_j}");
    app.add_option("--J-explicit", c.j_explicit, "J as a list, e.g. \"(0,0),(1,0)\"");
    app.add_option("--order", c.order, "lex, grlex or grevlex")->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    app.add_option("--priority", c.priority, "variable priority, 1-based, most significant first");
    app.add_option("--poly", c.polys, "polynomial (repeatable)");
    app.add_option("--monomials", c.monomials, "comma-separated monomials, e.g. \"1,x1,x1^2*x2\"");
    app.add_option("--targets", c.targets, "interpolation targets JSON file");
    app.add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--golden", c.golden, "compare table output with this file");
    app.add_flag("--oracle", c.oracle, "cross-check against brute force");
    app.add_option("--seed", c.seed, "seed for randomized self-tests");
    app.add_option("--count", c.count, "number of randomized self-test configs");

    auto* bound = app.add_subcommand("bound", "footprint bound on the number of zeros with multiplicity");
    auto* table = app.add_subcommand("table", "footprint and Schwartz-Zippel comparison tables");
    auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of I(S;J) or of an augmented ideal");
    auto* interpolate = app.add_subcommand("interpolate", "Hermite interpolation over the grid");
    auto* encode = app.add_subcommand("encode", "evaluation code with derivatives");
    auto* zeros = app.add_subcommand("zeros", "brute-force zeros with multiplicity");
    auto* selftest = app.add_subcommand("selftest", "randomized soundness checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }
    try {
        if (bound->parsed()) return cmd_bound(c, out);
        if (table->parsed()) return cmd_table(c, out, err);
        if (groebner->parsed()) return cmd_groebner(c, out);
        if (interpolate->parsed()) return cmd_interpolate(c, out);
        if (encode->parsed()) return cmd_encode(c, out);
        if (zeros->parsed()) return cmd_zeros(c, out);
        if (selftest->parsed()) return cmd_selftest(c, out);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return invariant_violation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::logic_error& e) {
        err << "invariant violation: " << e.what() << '\n';
        return invariant_violation;
    }
    return input_error;
}

}  // namespace fplab::cli
