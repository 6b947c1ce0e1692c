#include "l2t/laurent_det.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace l2t {

namespace {

constexpr double kPi = 3.14159265358979323846;

MultiLaurent cofactor_det(const LaurentMatrix& m) {
    if (m.n == 0) return MultiLaurent::constant(m.nvars, Cx(1, 0));
    if (m.n == 1) return m.at(0, 0);
    MultiLaurent acc(m.nvars);
    for (int j = 0; j < m.n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        LaurentMatrix minor(m.n - 1, m.nvars);
        for (int i = 1; i < m.n; ++i)
            for (int k = 0, kk = 0; k < m.n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, kk++) = m.at(i, k);
            }
        MultiLaurent term = m.at(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// per-variable bounds on the exponents of det(m): sums of columnwise extremes
struct DegreeBounds {
    std::vector<long long> lo, hi;
    bool zero_column = false;
};

DegreeBounds det_bounds(const LaurentMatrix& m) {
    DegreeBounds b;
    b.lo.assign(static_cast<std::size_t>(m.nvars), 0);
    b.hi.assign(static_cast<std::size_t>(m.nvars), 0);
    for (int j = 0; j < m.n; ++j) {
        bool any = false;
        std::vector<long long> clo(static_cast<std::size_t>(m.nvars), 0),
            chi(static_cast<std::size_t>(m.nvars), 0);
        for (int i = 0; i < m.n; ++i)
            for (const auto& [e, c] : m.at(i, j).terms()) {
                for (int v = 0; v < m.nvars; ++v) {
                    long long k = e[static_cast<std::size_t>(v)];
                    if (!any) { clo[static_cast<std::size_t>(v)] = k; chi[static_cast<std::size_t>(v)] = k; }
                    else {
                        clo[static_cast<std::size_t>(v)] = std::min(clo[static_cast<std::size_t>(v)], k);
                        chi[static_cast<std::size_t>(v)] = std::max(chi[static_cast<std::size_t>(v)], k);
                    }
                }
                any = true;
            }
        if (!any) { b.zero_column = true; return b; }
        for (int v = 0; v < m.nvars; ++v) {
            b.lo[static_cast<std::size_t>(v)] += clo[static_cast<std::size_t>(v)];
            b.hi[static_cast<std::size_t>(v)] += chi[static_cast<std::size_t>(v)];
        }
    }
    return b;
}

Cx det_at(const LaurentMatrix& m, const std::vector<Cx>& point) {
    Eigen::MatrixXcd a(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) a(i, j) = m.at(i, j).eval(point);
    return a.determinant();
}

MultiLaurent interpolated_det(const LaurentMatrix& m, const std::vector<long long>& lo,
                              const std::vector<int>& sizes, bool parallel) {
    const int d = m.nvars;
    long long total = 1;
    for (int s : sizes) total *= s;
    if (total > 4'000'000) throw std::runtime_error("interpolation grid too large");

    // grid values of det, row-major over the multi-index
    std::vector<Cx> vals(static_cast<std::size_t>(total));
#ifdef _OPENMP
    int threads = parallel ? omp_get_max_threads() : 1;
#else
    int threads = 1;
    (void)parallel;
#endif
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long g = 0; g < total; ++g) {
        std::vector<Cx> pt(static_cast<std::size_t>(d));
        long long rem = g;
        for (int v = d - 1; v >= 0; --v) {
            int k = static_cast<int>(rem % sizes[static_cast<std::size_t>(v)]);
            rem /= sizes[static_cast<std::size_t>(v)];
            double ang = 2.0 * kPi * k / sizes[static_cast<std::size_t>(v)];
            pt[static_cast<std::size_t>(v)] = Cx(std::cos(ang), std::sin(ang));
        }
        vals[static_cast<std::size_t>(g)] = det_at(m, pt);
    }

    // divide out the low-order monomial so the remainder is a true polynomial
    {
        long long total2 = total;
        for (long long g = 0; g < total2; ++g) {
            long long rem = g;
            double ang = 0;
            for (int v = d - 1; v >= 0; --v) {
                int k = static_cast<int>(rem % sizes[static_cast<std::size_t>(v)]);
                rem /= sizes[static_cast<std::size_t>(v)];
                ang -= 2.0 * kPi * k * static_cast<double>(lo[static_cast<std::size_t>(v)]) /
                       sizes[static_cast<std::size_t>(v)];
            }
            vals[static_cast<std::size_t>(g)] *= Cx(std::cos(ang), std::sin(ang));
        }
    }

    // axis-by-axis inverse DFT
    long long stride = 1;
    for (int v = d - 1; v >= 0; --v) {
        const int n = sizes[static_cast<std::size_t>(v)];
        std::vector<Cx> line(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
        const long long blocks = total / (stride * n);
        for (long long blk = 0; blk < blocks; ++blk)
            for (long long off = 0; off < stride; ++off) {
                long long base = blk * stride * n + off;
                for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(base + k * stride)];
                for (int a = 0; a < n; ++a) {
                    Cx acc(0, 0);
                    for (int k = 0; k < n; ++k) {
                        double ang = -2.0 * kPi * a * k / n;
                        acc += line[static_cast<std::size_t>(k)] * Cx(std::cos(ang), std::sin(ang));
                    }
                    out[static_cast<std::size_t>(a)] = acc / static_cast<double>(n);
                }
                for (int a = 0; a < n; ++a) vals[static_cast<std::size_t>(base + a * stride)] = out[static_cast<std::size_t>(a)];
            }
        stride *= n;
    }

    MultiLaurent det(d);
    double mx = 0;
    for (const Cx& c : vals) mx = std::max(mx, std::abs(c));
    Exponent e(static_cast<std::size_t>(d));
    for (long long g = 0; g < total; ++g) {
        Cx c = vals[static_cast<std::size_t>(g)];
        if (std::abs(c) <= 1e-11 * mx) continue;
        long long rem = g;
        for (int v = d - 1; v >= 0; --v) {
            int k = static_cast<int>(rem % sizes[static_cast<std::size_t>(v)]);
            rem /= sizes[static_cast<std::size_t>(v)];
            e[static_cast<std::size_t>(v)] = k + static_cast<int>(lo[static_cast<std::size_t>(v)]);
        }
        det.add_term(e, c);
    }
    return det;
}

MultiLaurent laurent_det_impl(const LaurentMatrix& m, bool parallel) {
    if (m.n <= 4) return cofactor_det(m);
    DegreeBounds b = det_bounds(m);
    if (b.zero_column) return MultiLaurent(m.nvars);

    std::vector<int> sizes(static_cast<std::size_t>(m.nvars));
    for (int v = 0; v < m.nvars; ++v)
        sizes[static_cast<std::size_t>(v)] =
            static_cast<int>(b.hi[static_cast<std::size_t>(v)] - b.lo[static_cast<std::size_t>(v)]) + 1;

    std::mt19937_64 rng(0x5eed1234abcdull);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * kPi);
    for (int attempt = 0; attempt < 2; ++attempt) {
        MultiLaurent det = interpolated_det(m, b.lo, sizes, parallel);
        // verify at a random point on the torus
        std::vector<Cx> pt(static_cast<std::size_t>(m.nvars));
        for (int v = 0; v < m.nvars; ++v) {
            double ang = unif(rng);
            pt[static_cast<std::size_t>(v)] = Cx(std::cos(ang), std::sin(ang));
        }
        Cx direct = det_at(m, pt);
        Cx interp = det.eval(pt);
        double scale = std::max({std::abs(direct), det.norm1(), 1.0});
        if (std::abs(direct - interp) <= 1e-7 * scale) return det;
        for (int v = 0; v < m.nvars; ++v) sizes[static_cast<std::size_t>(v)] *= 2;
    }
    throw std::runtime_error("determinant interpolation failed to verify");
}

}  // namespace

MultiLaurent laurent_det(const LaurentMatrix& m) { return laurent_det_impl(m, true); }
MultiLaurent laurent_det_serial(const LaurentMatrix& m) { return laurent_det_impl(m, false); }
Cx laurent_det_at(const LaurentMatrix& m, const std::vector<Cx>& point) { return det_at(m, point); }

}  // namespace l2t
