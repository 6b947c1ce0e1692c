// Compares the OpenMP quadrature and determinant kernels against their serial
// reference implementations on a medium-size workload.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "l2t/laurent_det.hpp"
#include "l2t/mahler.hpp"

using namespace l2t;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

MultiLaurent random_poly2(std::mt19937_64& rng, int span) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    MultiLaurent p(2);
    for (int i = 0; i <= span; ++i)
        for (int j = 0; j <= span; ++j) p.add_term({i, j}, Cx(coeff(rng), 0));
    p.add_term({0, 0}, Cx(7, 0));  // keep it nonvanishing on the torus
    return p;
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);

    {
        MultiLaurent p = random_poly2(rng, 4);
        auto t0 = std::chrono::steady_clock::now();
        double serial = mahler_numeric_serial(p, 1e-12, 4);
        auto t1 = std::chrono::steady_clock::now();
        double parallel = mahler_numeric(p, 1e-12, 4);
        auto t2 = std::chrono::steady_clock::now();
        std::printf("torus quadrature:   serial %.3fs  parallel %.3fs  speedup %.2fx  |diff| %.2e\n",
                    seconds(t0, t1), seconds(t1, t2), seconds(t0, t1) / seconds(t1, t2),
                    std::abs(serial - parallel));
    }

    {
        std::uniform_int_distribution<int> coeff(-2, 2);
        LaurentMatrix m(8, 2);
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) {
                m.at(i, j).add_term({0, 0}, Cx(coeff(rng), 0));
                m.at(i, j).add_term({1, 0}, Cx(coeff(rng), 0));
                m.at(i, j).add_term({0, 1}, Cx(coeff(rng), 0));
            }
        auto t0 = std::chrono::steady_clock::now();
        MultiLaurent ds = laurent_det_serial(m);
        auto t1 = std::chrono::steady_clock::now();
        MultiLaurent dp = laurent_det(m);
        auto t2 = std::chrono::steady_clock::now();
        double dev = (ds - dp).max_abs_coeff();
        std::printf("det interpolation:  serial %.3fs  parallel %.3fs  speedup %.2fx  |diff| %.2e\n",
                    seconds(t0, t1), seconds(t1, t2), seconds(t0, t1) / seconds(t1, t2), dev);
    }
    return 0;
}
