#include "l2t/fkdet.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace l2t {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Rat kernel_dimension(const LaurentMatrix& b, long long index, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * kPi);
    std::map<int, int> votes;
    for (int s = 0; s < samples; ++s) {
        std::vector<Cx> pt(static_cast<std::size_t>(b.nvars));
        for (int v = 0; v < b.nvars; ++v) {
            double ang = unif(rng);
            pt[static_cast<std::size_t>(v)] = Cx(std::cos(ang), std::sin(ang));
        }
        Eigen::MatrixXcd m(b.n, b.n);
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j) m(i, j) = b.at(i, j).eval(pt);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
        qr.setThreshold(1e-10);
        votes[b.n - static_cast<int>(qr.rank())]++;
    }
    int best = 0, best_count = -1;
    for (const auto& [nullity, count] : votes)
        if (count > best_count) { best = nullity; best_count = count; }
    return Rat(best, index);
}

double FkPipeline::log_det(double t) const {
    if (exact) return exact->eval_log(std::log(t)) / static_cast<double>(index);
    std::vector<double> w(wprime.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = wprime[i].value();
    return mahler_numeric(det.scale_weights(w, t)) / static_cast<double>(index);
}

double FkPipeline::log_det_serial(double t) const {
    if (exact) return exact->eval_log(std::log(t)) / static_cast<double>(index);
    std::vector<double> w(wprime.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = wprime[i].value();
    return mahler_numeric_serial(det.scale_weights(w, t)) / static_cast<double>(index);
}

FkPipeline build_fk_pipeline(const SquareMatrixData& sq, const QuotientHom& hom,
                             const AbelianizationData& abel, const CohomClass& phi,
                             const std::vector<std::vector<long long>>* rep_offsets) {
    FkPipeline p;
    p.abel = abel;
    p.phi = phi;
    p.restriction = build_restriction(hom, 20000, rep_offsets);
    p.index = p.restriction.index;
    p.a_norm1 = norm1(sq.A);
    p.b = restrict_matrix(to_complex(sq.A), hom, p.restriction);
    p.det = laurent_det(p.b).pruned(1e-11);
    // the untwisted restricted matrix is integral, so its determinant is too
    if (auto exact_int = p.det.rounded_to_int(1e-6)) p.det = *exact_int;
    if (p.det.is_zero()) {
        Rat kd = kernel_dimension(p.b, p.index);
        throw NonAcyclicError("twisted complex is not weakly acyclic: restricted determinant vanishes "
                              "(kernel dimension about " + kd.str() + ")",
                              kd);
    }
    p.wprime = p.restriction.reweight(phi);
    // exact closed form whenever the support of the determinant lies on a line
    if (auto u = to_univariate(p.det)) p.exact = exact_det_data(*u, p.wprime);
    return p;
}

double fk_log_det(const SquareMatrixData& sq, const QuotientHom& hom, const AbelianizationData& abel,
                  const CohomClass& phi, double t) {
    return build_fk_pipeline(sq, hom, abel, phi).log_det(t);
}

}  // namespace l2t
