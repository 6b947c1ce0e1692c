#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "l2t/fkdet.hpp"
#include "l2t/foxcalc.hpp"

using namespace l2t;

namespace {

const std::vector<std::string> kAB = {"a", "b"};

MultiLaurent mono(int nvars, const Exponent& e, double c) {
    return MultiLaurent::monomial(nvars, e, Cx(c, 0));
}

MultiLaurent random_poly(std::mt19937_64& rng, int nvars, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-3, 3), expo(-2, 2);
    MultiLaurent p(nvars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = expo(rng);
        p.add_term(e, Cx(coeff(rng), 0));
    }
    return p;
}

/// Independent determinant oracle: Leibniz expansion over all permutations.
MultiLaurent leibniz_det(const LaurentMatrix& m) {
    std::vector<int> perm(static_cast<std::size_t>(m.n));
    std::iota(perm.begin(), perm.end(), 0);
    MultiLaurent det(m.nvars);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign = -sign;
        MultiLaurent prod = MultiLaurent::constant(m.nvars, Cx(sign, 0));
        for (int i = 0; i < m.n; ++i) prod = prod * m.at(i, perm[static_cast<std::size_t>(i)]);
        det = det + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

QuotientHom s3_trefoil_hom(const Presentation& p, const AbelianizationData& abel) {
    FiniteGroupRep rep;
    rep.degree = 3;
    rep.gen_images = {Perm{{1, 0, 2}}, Perm{{0, 2, 1}}};
    QuotientHom h;
    h.presentation = &p;
    h.finite_part = rep;
    h.weights = abel.gen_weights;
    return h;
}

}  // namespace

TEST_CASE("laurent_det examples") {
    LaurentMatrix d(2, 1);
    d.at(0, 0) = mono(1, {1}, 1);
    d.at(1, 1) = mono(1, {-1}, 1);
    MultiLaurent det = laurent_det(d);
    REQUIRE(det.size() == 1);
    CHECK(det.terms().at({0}).real() == doctest::Approx(1.0));

    LaurentMatrix one(1, 1);
    one.at(0, 0) = mono(1, {1}, 1) + mono(1, {0}, -2);
    MultiLaurent dz = laurent_det(one);
    CHECK(dz.terms().at({1}).real() == doctest::Approx(1.0));
    CHECK(dz.terms().at({0}).real() == doctest::Approx(-2.0));

    LaurentMatrix two(2, 2);
    two.at(0, 0) = mono(2, {0, 0}, 1);
    two.at(0, 1) = mono(2, {1, 0}, 1);
    two.at(1, 0) = mono(2, {0, 1}, 1);
    two.at(1, 1) = mono(2, {0, 0}, 1);
    MultiLaurent dzw = laurent_det(two);
    CHECK(dzw.terms().at({0, 0}).real() == doctest::Approx(1.0));
    CHECK(dzw.terms().at({1, 1}).real() == doctest::Approx(-1.0));
}

TEST_CASE("laurent_det interpolation agrees with Leibniz expansion") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 5; ++it) {
        LaurentMatrix m(5, 2);  // n = 5 forces the evaluation path
        for (auto& e : m.entries) e = random_poly(rng, 2, 3);
        MultiLaurent fast = laurent_det(m);
        MultiLaurent slow = leibniz_det(m);
        MultiLaurent diff = fast - slow;
        double scale = std::max(1.0, slow.max_abs_coeff());
        CHECK(diff.max_abs_coeff() / scale < 1e-8);
    }
}

TEST_CASE("laurent_det_at matches symbolic determinant") {
    std::mt19937_64 rng(53);
    LaurentMatrix m(6, 2);
    for (auto& e : m.entries) e = random_poly(rng, 2, 3);
    MultiLaurent det = laurent_det(m);
    std::vector<Cx> pt = {Cx(0.6, 0.8), Cx(-0.8, 0.6)};
    CHECK(std::abs(laurent_det_at(m, pt) - det.eval(pt)) < 1e-7 * std::max(1.0, det.norm1()));
}

TEST_CASE("mahler measure, one variable") {
    CHECK(mahler_exact_1var({Cx(-2, 0), Cx(1, 0)}) == doctest::Approx(std::log(2.0)));  // z - 2
    CHECK(mahler_exact_1var({Cx(0, 0), Cx(1, 0)}) == doctest::Approx(0.0));             // z
    CHECK(mahler_exact_1var({Cx(5, 0)}) == doctest::Approx(std::log(5.0)));
    // z^2 - z - 1: golden ratio
    CHECK(mahler_exact_1var({Cx(-1, 0), Cx(-1, 0), Cx(1, 0)}) ==
          doctest::Approx(std::log((1 + std::sqrt(5.0)) / 2)));

    MultiLaurent p(1);
    p.add_term({1}, Cx(1, 0));
    p.add_term({0}, Cx(-2, 0));
    CHECK(mahler_numeric(p) == doctest::Approx(std::log(2.0)).epsilon(1e-4));
}

TEST_CASE("mahler numeric agrees with exact on random cubics") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> coeff(-5, 5);
    int done = 0;
    while (done < 20) {
        std::vector<Cx> c(4);
        for (auto& v : c) v = Cx(coeff(rng), 0);
        if (std::abs(c[3]) == 0.0 || std::abs(c[0]) == 0.0) continue;
        MultiLaurent p(1);
        for (int k = 0; k < 4; ++k) p.add_term({k}, c[static_cast<std::size_t>(k)]);
        double exact = mahler_exact_1var(c);
        double numeric = mahler_numeric(p, 1e-10, 9);
        CHECK(std::abs(numeric - exact) < 1e-4);
        ++done;
    }
}

TEST_CASE("mahler measure, two variables") {
    MultiLaurent p(2);
    p.add_term({0, 0}, Cx(1, 0));
    p.add_term({1, 0}, Cx(1, 0));
    p.add_term({0, 1}, Cx(1, 0));
    CHECK(std::abs(mahler_numeric(p) - 0.3230659472) < 1e-3);

    // zw - 1 vanishes on a curve in the torus; its support lies on a line, so
    // the exact route applies and gives 0
    MultiLaurent q(2);
    q.add_term({1, 1}, Cx(1, 0));
    q.add_term({0, 0}, Cx(-1, 0));
    auto uq = to_univariate(q);
    REQUIRE(uq.has_value());
    CHECK(mahler_exact_1var(uq->coeffs) == doctest::Approx(0.0));

    // (1 + z)(1 + w) also vanishes on the torus but has rectangular support
    MultiLaurent r(2);
    r.add_term({0, 0}, Cx(1, 0));
    r.add_term({1, 0}, Cx(1, 0));
    r.add_term({0, 1}, Cx(1, 0));
    r.add_term({1, 1}, Cx(1, 0));
    CHECK(std::abs(mahler_numeric(r)) < 5e-3);
}

TEST_CASE("factor_poly reconstructs") {
    PolyFactorization f = factor_poly({Cx(-1, 0), Cx(0, 0), Cx(1, 0)});  // z^2 - 1
    CHECK(f.order == 0);
    REQUIRE(f.roots.size() == 2);
    CHECK(std::abs(std::abs(f.roots[0]) - 1.0) < 1e-9);
    CHECK(f.log_abs_lead == doctest::Approx(0.0));

    PolyFactorization g = factor_poly({Cx(0, 0), Cx(0, 0), Cx(3, 0)});  // 3 z^2
    CHECK(g.order == 2);
    CHECK(g.roots.empty());
    CHECK(g.log_abs_lead == doctest::Approx(std::log(3.0)));
}

TEST_CASE("mahler is continuous in the coefficients") {
    std::vector<Cx> base = {Cx(1, 0), Cx(-3, 0), Cx(1, 0)};
    double m0 = mahler_exact_1var(base);
    for (double eps : {1e-3, 1e-4, 1e-5}) {
        std::vector<Cx> pert = base;
        for (auto& c : pert) c += Cx(eps, 0);
        CHECK(std::abs(mahler_exact_1var(pert) - m0) <= 10 * eps);
    }
}

TEST_CASE("index power law for cyclic restrictions") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> coeff(-5, 5), deg(1, 4);
    int done = 0;
    while (done < 50) {
        int n = deg(rng);
        MultiLaurent p(1);
        for (int k = 0; k <= n; ++k) p.add_term({k}, Cx(coeff(rng), 0));
        if (p.is_zero()) continue;
        auto up = to_univariate(p);
        REQUIRE(up.has_value());
        double mp = mahler_exact_1var(up->coeffs);
        for (int k : {2, 3}) {
            MultiLaurent det = laurent_det(restrict_univariate_power(p, k)).pruned(1e-11);
            auto ud = to_univariate(det);
            REQUIRE(ud.has_value());
            double md = mahler_exact_1var(ud->coeffs);
            CHECK(std::abs(md - k * mp) <= 1e-9 * std::max(1.0, std::abs(k * mp)));
        }
        ++done;
    }
}

TEST_CASE("restriction structure, abelian case") {
    auto p = Presentation::from_strings({"a", "b"}, {"a b a B A B"});
    auto abel = abelianize(p);
    QuotientHom h = QuotientHom::abelian(p, abel);
    LatticeRestriction r = build_restriction(h);
    CHECK(r.d == 1);
    CHECK(r.index == 1);
    CHECK(r.basis == std::vector<std::vector<long long>>{{1}});
    CohomClass phi;
    phi.weights = {Rat(1)};
    CHECK(r.reweight(phi) == std::vector<Rat>{Rat(1)});
}

TEST_CASE("restriction structure, S3 fiber") {
    auto p = Presentation::from_strings({"a", "b"}, {"a b a B A B"});
    auto abel = abelianize(p);
    QuotientHom h = s3_trefoil_hom(p, abel);
    LatticeRestriction r = build_restriction(h);
    CHECK(r.index == 6);
    CHECK(r.basis == std::vector<std::vector<long long>>{{2}});
    CHECK(r.group.size() == 6);
    CHECK(r.group[0].is_identity());
    CohomClass phi;
    phi.weights = {Rat(1)};
    CHECK(r.reweight(phi) == std::vector<Rat>{Rat(2)});
}

TEST_CASE("fk value is independent of the transversal") {
    auto p = Presentation::from_strings({"a", "b"}, {"a b a B A B"});
    auto abel = abelianize(p);
    QuotientHom h = s3_trefoil_hom(p, abel);
    CohomClass phi;
    phi.weights = {Rat(abel.gen_weights[0][0])};
    SquareMatrixData sq = square_matrix_boundary(p, abel);

    FkPipeline base = build_fk_pipeline(sq, h, abel, phi);
    std::vector<std::vector<long long>> offsets = {{2}, {-4}, {0}, {6}, {-2}, {8}};
    FkPipeline moved = build_fk_pipeline(sq, h, abel, phi, &offsets);
    for (double t : {0.5, 1.0, 2.0})
        CHECK(std::abs(base.log_det(t) - moved.log_det(t)) < 1e-9);
}

TEST_CASE("S3 restricted determinant matches the Leibniz oracle") {
    auto p = Presentation::from_strings({"a", "b"}, {"a b a B A B"});
    auto abel = abelianize(p);
    QuotientHom h = s3_trefoil_hom(p, abel);
    CohomClass phi;
    phi.weights = {Rat(abel.gen_weights[0][0])};
    SquareMatrixData sq = square_matrix_boundary(p, abel);
    FkPipeline pipe = build_fk_pipeline(sq, h, abel, phi);
    CHECK(pipe.b.n == 6);

    MultiLaurent oracle = leibniz_det(pipe.b).pruned(1e-11);
    MultiLaurent diff = pipe.det - oracle;
    CHECK(diff.max_abs_coeff() < 1e-6 * std::max(1.0, oracle.max_abs_coeff()));

    // closed form built from the oracle determinant
    auto uo = to_univariate(oracle);
    REQUIRE(uo.has_value());
    auto oracle_exact = exact_det_data(*uo, pipe.restriction.reweight(phi));
    REQUIRE(oracle_exact.has_value());
    for (double t : {0.5, 1.0, 2.0})
        CHECK(std::abs(pipe.log_det(t) -
                       oracle_exact->eval_log(std::log(t)) / static_cast<double>(pipe.index)) < 1e-6);
}

TEST_CASE("kernel dimension") {
    LaurentMatrix zero(1, 1);
    CHECK(kernel_dimension(zero, 1) == Rat(1));

    LaurentMatrix zm1(1, 1);
    zm1.at(0, 0) = mono(1, {1}, 1) + mono(1, {0}, -1);
    CHECK(kernel_dimension(zm1, 1) == Rat(0));

    LaurentMatrix half(2, 1);
    half.at(1, 1) = mono(1, {0}, 1);
    CHECK(kernel_dimension(half, 2) == Rat(1, 2));

    auto p = Presentation::from_strings({"a", "b"}, {"a b a B A B"});
    auto abel = abelianize(p);
    QuotientHom h = QuotientHom::abelian(p, abel);
    CohomClass phi;
    phi.weights = {Rat(1)};
    SquareMatrixData sq = square_matrix_boundary(p, abel);
    FkPipeline pipe = build_fk_pipeline(sq, h, abel, phi);
    CHECK(kernel_dimension(pipe.b, pipe.index) == Rat(0));
}

TEST_CASE("non-acyclic input raises with a certificate") {
    auto p = Presentation::from_strings({"a", "b"}, {"1"});
    auto abel = abelianize(p);
    REQUIRE(abel.free_rank == 2);
    QuotientHom h = QuotientHom::abelian(p, abel);
    CohomClass phi;
    phi.weights = {Rat(1), Rat(0)};
    SquareMatrixData sq = square_matrix_boundary(p, abel);
    try {
        build_fk_pipeline(sq, h, abel, phi);
        FAIL("expected NonAcyclicError");
    } catch (const NonAcyclicError& e) {
        CHECK(e.kernel_dimension == Rat(1));
    }
}

TEST_CASE("determinant bound at t = 1") {
    // exp of the log determinant never exceeds norm1(A)^m
    for (const char* rel : {"a b a B A B", "a b a b A B A B", "a b A b a B A B"}) {
        auto p = Presentation::from_strings({"a", "b"}, {rel});
        auto abel = abelianize(p);
        if (abel.free_rank != 1) continue;
        QuotientHom h = QuotientHom::abelian(p, abel);
        CohomClass phi;
        phi.weights = {Rat(1)};
        SquareMatrixData sq = square_matrix_boundary(p, abel);
        FkPipeline pipe = build_fk_pipeline(sq, h, abel, phi);
        double m = sq.A.rows;
        CHECK(pipe.log_det(1.0) <= m * std::log(std::max(1.0, pipe.a_norm1)) + 1e-9);
    }
}

TEST_CASE("exact closed form matches pointwise evaluation") {
    auto p = Presentation::from_strings({"a", "b"}, {"a b a B A B"});
    auto abel = abelianize(p);
    QuotientHom h = QuotientHom::abelian(p, abel);
    CohomClass phi;
    phi.weights = {Rat(abel.gen_weights[0][0])};
    SquareMatrixData sq = square_matrix_boundary(p, abel);
    FkPipeline pipe = build_fk_pipeline(sq, h, abel, phi);
    REQUIRE(pipe.exact_available());
    std::vector<Rat> wp = pipe.restriction.reweight(phi);
    std::vector<double> w(wp.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = wp[i].value();
    for (double t : {0.3, 0.9, 1.0, 1.7, 4.0}) {
        double numeric = mahler_numeric(pipe.det.scale_weights(w, t)) / static_cast<double>(pipe.index);
        CHECK(std::abs(pipe.log_det(t) - numeric) < 1e-4);
    }
}
