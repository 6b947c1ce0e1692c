#include "l2t/degree.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <stdexcept>

#include "l2t/mahler.hpp"

namespace l2t {

DegreeResult degree_exact(const TorsionSetup& s) {
    if (!s.fk.exact_available()) throw std::runtime_error("no exact closed form available");
    const ExactDetData& e = *s.fk.exact;
    const Rat index(s.fk.index);
    const Rat ns(static_cast<long long>(e.roots.size()));

    // each root term max(0, ln|a| - wdir ln t) has slope -wdir where active:
    // for t -> 0 the terms are active iff wdir > 0, for t -> inf iff wdir < 0
    Rat zero;
    Rat fk0 = (zero < e.wdir) ? (e.lin - ns * e.wdir) / index : e.lin / index;
    Rat fkInf = (e.wdir < zero) ? (e.lin - ns * e.wdir) / index : e.lin / index;

    Rat etaInf;
    for (const Rat& x : s.eta_exponents) etaInf += x;

    DegreeResult r;
    r.exact = true;
    r.slope0 = zero - fk0;
    r.slopeInf = etaInf - fkInf;
    r.degree = r.slopeInf - r.slope0;
    auto bp = e.breakpoints();
    if (!bp.empty()) {
        r.T0 = *std::min_element(bp.begin(), bp.end());
        r.TInf = *std::max_element(bp.begin(), bp.end());
    }
    return r;
}

namespace {

// least-squares slope of rho against ln t over [from, to)
double ls_slope(const TorsionSamples& s, std::size_t from, std::size_t to) {
    double mx = 0, my = 0;
    const double n = static_cast<double>(to - from);
    for (std::size_t i = from; i < to; ++i) {
        mx += std::log(s.grid[i]);
        my += s.values[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = from; i < to; ++i) {
        double x = std::log(s.grid[i]) - mx;
        sxx += x * x;
        sxy += x * (s.values[i] - my);
    }
    return sxy / sxx;
}

Rat to_rat(double v) {
    // round to a denominator-bounded rational for reporting
    long long best_p = 0, best_q = 1;
    double best_err = 1e18;
    for (long long q = 1; q <= 60; ++q) {
        long long p = static_cast<long long>(std::llround(v * static_cast<double>(q)));
        double err = std::abs(v - static_cast<double>(p) / static_cast<double>(q));
        if (err < best_err - 1e-15) {
            best_err = err;
            best_p = p;
            best_q = q;
        }
    }
    return Rat(best_p, best_q);
}

}  // namespace

DegreeResult degree_numeric(const TorsionSamples& s) {
    if (s.grid.size() < 20) throw std::invalid_argument("too few samples for numeric slopes");
    double span = std::log10(s.grid.back() / s.grid.front());
    if (span < 4.0 - 1e-9) throw std::invalid_argument("grid must span at least 4 decades");

    // outermost decade on each side, widened to hold at least 10 samples
    std::size_t lo_end = 0;
    while (lo_end < s.grid.size() && s.grid[lo_end] <= s.grid.front() * 10.0) ++lo_end;
    lo_end = std::max<std::size_t>(lo_end, 10);
    std::size_t hi_begin = s.grid.size();
    while (hi_begin > 0 && s.grid[hi_begin - 1] >= s.grid.back() / 10.0) --hi_begin;
    hi_begin = std::min(hi_begin, s.grid.size() - 10);

    DegreeResult r;
    r.exact = false;
    double slope0 = ls_slope(s, 0, lo_end);
    double slopeInf = ls_slope(s, hi_begin, s.grid.size());
    r.slope0 = to_rat(slope0);
    r.slopeInf = to_rat(slopeInf);
    r.degree = to_rat(slopeInf - slope0);
    return r;
}

std::string verdict_name(ThurstonVerdict v) {
    switch (v) {
        case ThurstonVerdict::Equal: return "EQUAL";
        case ThurstonVerdict::LowerBoundOk: return "LOWER-BOUND-OK";
        case ThurstonVerdict::Violation: return "VIOLATION";
        case ThurstonVerdict::NotApplicable: return "N/A";
    }
    return "?";
}

ThurstonVerdict compare_thurston(const DegreeResult& r, const Rat& x, bool excluded, double tol) {
    if (excluded) return ThurstonVerdict::NotApplicable;
    double deg = r.degree.value();
    if (std::abs(deg + x.value()) < tol) return ThurstonVerdict::Equal;
    if (deg >= -x.value() - tol) return ThurstonVerdict::LowerBoundOk;
    return ThurstonVerdict::Violation;
}

namespace {
constexpr double kPi = 3.14159265358979323846;

// specialize the second variable to zeta and collect a 1-var coefficient list,
// twisting z by t^phi1 and w by t^phi2
std::vector<Cx> specialize(const MultiLaurent& p, Cx zeta, double t, double phi1, double phi2,
                           long long& low) {
    long long lo = 0, hi = 0;
    bool first = true;
    std::map<long long, Cx> terms;
    for (const auto& [e, c] : p.terms()) {
        long long ez = e[0], ew = e[1];
        Cx v = c * std::pow(zeta, Cx(static_cast<double>(ew), 0)) *
               std::pow(t, phi1 * static_cast<double>(ez) + phi2 * static_cast<double>(ew));
        terms[ez] += v;
        if (first || ez < lo) lo = ez;
        if (first || ez > hi) hi = ez;
        first = false;
    }
    low = lo;
    std::vector<Cx> coeffs(static_cast<std::size_t>(hi - lo + 1), Cx(0, 0));
    for (const auto& [ez, v] : terms) coeffs[static_cast<std::size_t>(ez - lo)] = v;
    return coeffs;
}

}  // namespace

TowerReport tower_study(const MultiLaurent& p, const CohomClass& phi, int max_level,
                        const std::vector<double>& grid, double tol) {
    if (p.nvars() != 2 || phi.dim() != 2) throw std::invalid_argument("tower study expects two variables");
    if (max_level < 0 || max_level > 24) throw std::invalid_argument("bad level count");
    const double phi1 = phi.weights[0].value(), phi2 = phi.weights[1].value();

    TowerReport rep;
    rep.grid = grid;
    rep.limit.resize(grid.size());
    std::vector<double> w = {phi1, phi2};
#pragma omp parallel for schedule(dynamic)
    for (long long gi = 0; gi < static_cast<long long>(grid.size()); ++gi)
        rep.limit[static_cast<std::size_t>(gi)] =
            mahler_numeric(p.scale_weights(w, grid[static_cast<std::size_t>(gi)]), 1e-10, 4);

    for (int level = 0; level <= max_level; ++level) {
        TowerLevel lv;
        lv.level = level;
        const long long n = 1LL << level;
        long long zero_fibers = 0;
        lv.values.assign(grid.size(), 0.0);
        for (long long j = 0; j < n; ++j) {
            double ang = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            Cx zeta(std::cos(ang), std::sin(ang));
            long long low = 0;
            std::vector<Cx> probe = specialize(p, zeta, 1.0, phi1, phi2, low);
            double mxc = 0;
            for (const Cx& c : probe) mxc = std::max(mxc, std::abs(c));
            if (mxc < 1e-12) {
                ++zero_fibers;
                continue;
            }
#pragma omp parallel for schedule(static)
            for (long long gi = 0; gi < static_cast<long long>(grid.size()); ++gi) {
                double t = grid[static_cast<std::size_t>(gi)];
                long long lo = 0;
                std::vector<Cx> coeffs = specialize(p, zeta, t, phi1, phi2, lo);
                double v = mahler_exact_1var(coeffs);
#pragma omp atomic
                lv.values[static_cast<std::size_t>(gi)] += v / static_cast<double>(n);
            }
        }
        lv.kernel_dim = Rat(zero_fibers, n);
        rep.levels.push_back(std::move(lv));
    }
    // early levels oscillate around the 2-var value, so only the deepest level
    // is held against the limit
    const TowerLevel& last = rep.levels.back();
    for (std::size_t gi = 0; gi < grid.size(); ++gi)
        if (std::abs(last.values[gi] - rep.limit[gi]) > tol)
            rep.violations.push_back("level " + std::to_string(last.level) + " t=" +
                                     std::to_string(grid[gi]) + " has not converged to the limit");
    return rep;
}

void write_tower_csv(const TowerReport& r, std::ostream& os) {
    os << "level,t,value\n";
    os << std::setprecision(17);
    for (const TowerLevel& lv : r.levels)
        for (std::size_t i = 0; i < r.grid.size(); ++i)
            os << lv.level << "," << r.grid[i] << "," << lv.values[i] << "\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i)
        os << -1 << "," << r.grid[i] << "," << r.limit[i] << "\n";
}

}  // namespace l2t
