#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "l2t/fkdet.hpp"
#include "l2t/laurent_det.hpp"
#include "l2t/mahler.hpp"
#include "l2t/torsion.hpp"

using namespace l2t;

namespace {

MultiLaurent random_poly(std::mt19937_64& rng, int nvars, int max_terms, double offset) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-3, 3), expo(-2, 2);
    MultiLaurent p(nvars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = expo(rng);
        p.add_term(e, Cx(coeff(rng), 0));
    }
    // keep the polynomial clear of zeros on the torus so quadrature converges
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), Cx(offset, 0));
    return p;
}

}  // namespace

TEST_CASE("parallel mahler quadrature matches the serial one") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 10; ++it) {
        MultiLaurent p = random_poly(rng, 2, 6, 9.0);
        double par = mahler_numeric(p);
        double ser = mahler_numeric_serial(p);
        CHECK(std::abs(par - ser) < 1e-9);
    }
}

TEST_CASE("parallel determinant interpolation matches the serial one") {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 5; ++it) {
        LaurentMatrix m(6, 2);
        for (auto& e : m.entries) e = random_poly(rng, 2, 3, 1.0);
        MultiLaurent par = laurent_det(m);
        MultiLaurent ser = laurent_det_serial(m);
        MultiLaurent diff = par - ser;
        double scale = std::max(1.0, ser.max_abs_coeff());
        CHECK(diff.max_abs_coeff() / scale < 1e-10);
    }
}

TEST_CASE("pipeline values agree across thread counts") {
    auto pres = std::make_shared<Presentation>(
        Presentation::from_strings({"a", "b"}, {"a B A b a B a b A B"}));
    TorsionProblem prob;
    prob.pres = pres;
    AbelianizationData abel = abelianize(*pres);
    prob.phi.weights = {Rat(abel.gen_weights[0][0])};
    TorsionSetup s = prepare_torsion(prob);
    for (double t : {0.5, 1.0, 2.5})
        CHECK(std::abs(s.fk.log_det(t) - s.fk.log_det_serial(t)) < 1e-12);
}
