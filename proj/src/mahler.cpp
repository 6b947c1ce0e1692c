#include "l2t/mahler.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace l2t {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTinyAbs = 1e-300;
}  // namespace

PolyFactorization factor_poly(const std::vector<Cx>& coeffs, double tol) {
    double mx = 0;
    for (const Cx& c : coeffs) mx = std::max(mx, std::abs(c));
    if (mx == 0) throw std::invalid_argument("cannot factor the zero polynomial");

    std::size_t hi = coeffs.size();
    while (hi > 0 && std::abs(coeffs[hi - 1]) <= tol * mx) --hi;
    std::size_t lo = 0;
    while (lo < hi && std::abs(coeffs[lo]) <= tol * mx) ++lo;

    PolyFactorization f;
    f.order = static_cast<long long>(lo);
    Cx lead = coeffs[hi - 1];
    f.log_abs_lead = std::log(std::abs(lead));

    const std::size_t n = hi - 1 - lo;  // degree of the reduced polynomial
    if (n > 0) {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<int>(n), static_cast<int>(n));
        for (std::size_t i = 1; i < n; ++i) comp(static_cast<int>(i), static_cast<int>(i - 1)) = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            comp(static_cast<int>(i), static_cast<int>(n - 1)) = -coeffs[lo + i] / lead;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
        if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed on companion matrix");
        for (std::size_t i = 0; i < n; ++i) f.roots.push_back(es.eigenvalues()(static_cast<int>(i)));
    }

    // re-expand and compare against the input
    std::vector<Cx> expand = {lead};
    for (const Cx& a : f.roots) {
        std::vector<Cx> nxt(expand.size() + 1, Cx(0, 0));
        for (std::size_t i = 0; i < expand.size(); ++i) {
            nxt[i + 1] += expand[i];
            nxt[i] -= expand[i] * a;
        }
        expand = std::move(nxt);
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Cx want = coeffs[i];
        Cx got(0, 0);
        if (i >= lo && i - lo < expand.size()) got = expand[i - lo];
        if (std::abs(want - got) > std::max(tol, 1e3 * tol) * mx * static_cast<double>(coeffs.size()))
            throw std::runtime_error("root factorization failed the reconstruction check");
    }
    return f;
}

double mahler_exact_1var(const std::vector<Cx>& coeffs) {
    PolyFactorization f = factor_poly(coeffs);
    double m = f.log_abs_lead;
    for (const Cx& a : f.roots) m += std::max(0.0, std::log(std::abs(a)));
    return m;
}

namespace {

double torus_average(const MultiLaurent& p, int per_axis, bool parallel) {
    const int d = p.nvars();
    if (d == 0) {
        double v = std::abs(p.eval({}));
        return std::log(std::max(v, kTinyAbs));
    }
    long long total = 1;
    for (int v = 0; v < d; ++v) total *= per_axis;

#ifdef _OPENMP
    int threads = parallel ? omp_get_max_threads() : 1;
#else
    int threads = 1;
    (void)parallel;
#endif
    double sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum) num_threads(threads)
    for (long long g = 0; g < total; ++g) {
        std::vector<Cx> pt(static_cast<std::size_t>(d));
        long long rem = g;
        for (int v = 0; v < d; ++v) {
            long long k = rem % per_axis;
            rem /= per_axis;
            // midpoint nodes keep zeros of p on the torus off the grid
            double ang = 2.0 * kPi * (static_cast<double>(k) + 0.5) / per_axis;
            pt[static_cast<std::size_t>(v)] = Cx(std::cos(ang), std::sin(ang));
        }
        double a = std::abs(p.eval(pt));
        sum += std::log(std::max(a, kTinyAbs));
    }
    return sum / static_cast<double>(total);
}

double mahler_numeric_impl(const MultiLaurent& p, double tol, int max_doublings, bool parallel) {
    if (p.is_zero()) throw std::invalid_argument("log Mahler measure of zero is undefined");
    int per_axis = 64;
    double prev = torus_average(p, per_axis, parallel);
    for (int i = 0; i < max_doublings; ++i) {
        per_axis *= 2;
        double cur = torus_average(p, per_axis, parallel);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace

double mahler_numeric(const MultiLaurent& p, double tol, int max_doublings) {
    return mahler_numeric_impl(p, tol, max_doublings, true);
}
double mahler_numeric_serial(const MultiLaurent& p, double tol, int max_doublings) {
    return mahler_numeric_impl(p, tol, max_doublings, false);
}

double ExactDetData::eval_log(double log_t) const {
    double v = log_abs_lead + lin.value() * log_t;
    double w = wdir.value();
    for (const Cx& a : roots) v += std::max(0.0, std::log(std::abs(a)) - w * log_t);
    return v;
}

std::vector<double> ExactDetData::breakpoints() const {
    std::vector<double> out;
    if (wdir.is_zero()) return out;
    for (const Cx& a : roots) out.push_back(std::exp(std::log(std::abs(a)) / wdir.value()));
    return out;
}

std::optional<ExactDetData> exact_det_data(const UnivariateReduction& u, const std::vector<Rat>& wprime) {
    if (u.coeffs.empty()) return std::nullopt;  // zero polynomial, not acyclic
    PolyFactorization f;
    try {
        f = factor_poly(u.coeffs);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    ExactDetData d;
    d.log_abs_lead = f.log_abs_lead;
    d.roots = f.roots;
    Rat phi_base, phi_dir;
    for (std::size_t i = 0; i < wprime.size(); ++i) {
        phi_base += wprime[i] * Rat(u.base[i]);
        phi_dir += wprime[i] * Rat(u.direction[i]);
    }
    d.wdir = phi_dir;
    long long n = f.order + static_cast<long long>(f.roots.size());
    d.lin = phi_base + Rat(n) * phi_dir;
    return d;
}

}  // namespace l2t
