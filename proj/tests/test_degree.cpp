#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "l2t/catalog.hpp"
#include "l2t/degree.hpp"

using namespace l2t;

namespace {

TorsionProblem catalog_problem(const std::string& name, Rat scale = Rat(1)) {
    const CatalogEntry* e = find_catalog(name);
    REQUIRE(e != nullptr);
    TorsionProblem prob;
    prob.pres = e->pres;
    AbelianizationData abel = abelianize(*e->pres);
    long long sgn = 0;
    for (const auto& w : abel.gen_weights)
        if (w[0] != 0) { sgn = w[0] > 0 ? 1 : -1; break; }
    prob.phi.weights = {Rat(sgn) * scale};
    return prob;
}

}  // namespace

TEST_CASE("exact degree for the trefoil") {
    TorsionSetup s = prepare_torsion(catalog_problem("trefoil"));
    DegreeResult r = degree_exact(s);
    CHECK(r.exact);
    CHECK(r.slope0 == Rat(0));
    CHECK(r.slopeInf == Rat(-1));
    CHECK(r.degree == Rat(-1));
    // both roots of the determinant lie on the unit circle
    CHECK(r.T0 == doctest::Approx(1.0));
    CHECK(r.TInf == doctest::Approx(1.0));
}

TEST_CASE("exact degree for the circle cross disk") {
    TorsionSetup s = prepare_torsion(catalog_problem("s1xd2"));
    DegreeResult r = degree_exact(s);
    CHECK(r.slope0 == Rat(0));
    CHECK(r.slopeInf == Rat(1));
    CHECK(r.degree == Rat(1));
}

TEST_CASE("exact degree for the figure eight knot") {
    TorsionSetup s = prepare_torsion(catalog_problem("fig8"));
    DegreeResult r = degree_exact(s);
    CHECK(r.degree == Rat(-1));
    double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(r.TInf == doctest::Approx(golden).epsilon(1e-9));
    CHECK(r.T0 * r.TInf == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("torus knots have degree -(pq - p - q)") {
    CHECK(degree_exact(prepare_torsion(catalog_problem("t25"))).degree == Rat(-3));
    CHECK(degree_exact(prepare_torsion(catalog_problem("t34"))).degree == Rat(-5));
}

TEST_CASE("numeric degree on synthetic samples") {
    TorsionSamples s;
    s.grid = make_log_grid(-3, 3, 121);
    s.values.resize(s.grid.size());
    for (std::size_t i = 0; i < s.grid.size(); ++i)
        s.values[i] = -std::max(0.0, std::log(s.grid[i]));
    DegreeResult r = degree_numeric(s);
    CHECK(r.slope0 == Rat(0));
    CHECK(r.slopeInf == Rat(-1));
    CHECK(r.degree == Rat(-1));

    // adding a global 3 ln t shifts both slopes but not the degree
    for (std::size_t i = 0; i < s.grid.size(); ++i) s.values[i] += 3.0 * std::log(s.grid[i]);
    DegreeResult rs = degree_numeric(s);
    CHECK(rs.slope0 == Rat(3));
    CHECK(rs.slopeInf == Rat(2));
    CHECK(rs.degree == Rat(-1));
}

TEST_CASE("numeric degree rejects short grids") {
    TorsionSamples s;
    s.grid = make_log_grid(-1, 1, 50);
    s.values.assign(50, 0.0);
    CHECK_THROWS(degree_numeric(s));
    TorsionSamples few;
    few.grid = make_log_grid(-3, 3, 10);
    few.values.assign(10, 0.0);
    CHECK_THROWS(degree_numeric(few));
}

TEST_CASE("numeric degree agrees with the exact one") {
    for (const char* name : {"trefoil", "fig8", "t25", "k52"}) {
        TorsionSetup s = prepare_torsion(catalog_problem(name));
        DegreeResult ex = degree_exact(s);
        TorsionSamples samples = rho_eval(s, make_log_grid(-4, 4, 161));
        DegreeResult nu = degree_numeric(samples);
        CHECK(std::abs(nu.degree.value() - ex.degree.value()) < 0.05);
    }
}

TEST_CASE("degree scales with the class") {
    TorsionSetup base = prepare_torsion(catalog_problem("fig8"));
    DegreeResult r1 = degree_exact(base);
    for (long long r : {2, 3}) {
        TorsionSetup scaled = prepare_torsion(catalog_problem("fig8", Rat(r)));
        DegreeResult rr = degree_exact(scaled);
        CHECK(rr.degree == Rat(r) * r1.degree);
    }
}

TEST_CASE("thurston comparison verdicts") {
    DegreeResult r;
    r.degree = Rat(-1);
    CHECK(compare_thurston(r, Rat(1), false) == ThurstonVerdict::Equal);
    CHECK(compare_thurston(r, Rat(2), false) == ThurstonVerdict::LowerBoundOk);
    CHECK(compare_thurston(r, Rat(0), false) == ThurstonVerdict::Violation);
    CHECK(compare_thurston(r, Rat(1), true) == ThurstonVerdict::NotApplicable);
    CHECK(verdict_name(ThurstonVerdict::Equal) == "EQUAL");
    CHECK(verdict_name(ThurstonVerdict::LowerBoundOk) == "LOWER-BOUND-OK");
    CHECK(verdict_name(ThurstonVerdict::Violation) == "VIOLATION");
    CHECK(verdict_name(ThurstonVerdict::NotApplicable) == "N/A");
}

TEST_CASE("tower study for 1 + z + w") {
    MultiLaurent p(2);
    p.add_term({0, 0}, Cx(1, 0));
    p.add_term({1, 0}, Cx(1, 0));
    p.add_term({0, 1}, Cx(1, 0));
    CohomClass phi;
    phi.weights = {Rat(1), Rat(0)};
    std::vector<double> grid = {0.5, 1.0, 2.0};
    TowerReport rep = tower_study(p, phi, 7, grid);
    REQUIRE(rep.levels.size() == 8);
    CHECK(rep.violations.empty());

    // the limit at t = 1 is the 2-var Mahler measure of 1 + z + w
    CHECK(std::abs(rep.limit[1] - 0.3230659472) < 1e-3);
    // by level 7 the whole grid has converged to the limit
    for (std::size_t gi = 0; gi < grid.size(); ++gi)
        CHECK(std::abs(rep.levels[7].values[gi] - rep.limit[gi]) < 1e-2);
    // at t = 1 the finite levels sit above the 2-var value
    for (const TowerLevel& lv : rep.levels) CHECK(lv.values[1] >= rep.limit[1] - 1e-6);
    for (const TowerLevel& lv : rep.levels) CHECK(lv.kernel_dim == Rat(0));

    std::ostringstream os;
    write_tower_csv(rep, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "level,t,value");
}

TEST_CASE("tower study for a constant") {
    // p = 2: every level and the limit are exactly ln 2
    MultiLaurent p = MultiLaurent::constant(2, Cx(2, 0));
    CohomClass phi;
    phi.weights = {Rat(1), Rat(0)};
    TowerReport rep = tower_study(p, phi, 4, {0.5, 1.0, 2.0});
    for (const TowerLevel& lv : rep.levels)
        for (double v : lv.values) CHECK(v == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    for (double v : rep.limit) CHECK(v == doctest::Approx(std::log(2.0)).epsilon(1e-6));
    CHECK(rep.violations.empty());
}

TEST_CASE("tower study counts vanishing fibers") {
    // p = w - 1 dies on the fiber zeta = 1, one of 2^i at each level
    MultiLaurent p(2);
    p.add_term({0, 1}, Cx(1, 0));
    p.add_term({0, 0}, Cx(-1, 0));
    CohomClass phi;
    phi.weights = {Rat(1), Rat(0)};
    TowerReport rep = tower_study(p, phi, 3, {1.0});
    for (const TowerLevel& lv : rep.levels)
        CHECK(lv.kernel_dim == Rat(1, 1LL << lv.level));
}

TEST_CASE("tower study input validation") {
    MultiLaurent p1(1);
    p1.add_term({0}, Cx(1, 0));
    CohomClass phi1;
    phi1.weights = {Rat(1)};
    CHECK_THROWS(tower_study(p1, phi1, 2, {1.0}));
}
