#include "l2t/torsion.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "l2t/laurent_det.hpp"
#include "l2t/mahler.hpp"

namespace l2t {

namespace {

QuotientHom make_hom(const TorsionProblem& prob, const AbelianizationData& abel) {
    QuotientHom h;
    h.presentation = prob.pres.get();
    h.weights = prob.weights ? *prob.weights : abel.gen_weights;
    h.finite_part = prob.finite;
    h.validate();
    return h;
}

TorsionSetup finish_setup(const TorsionProblem& prob, AbelianizationData abel, SquareMatrixData sq) {
    TorsionSetup s;
    s.pres = prob.pres;
    s.abel = std::move(abel);
    s.hom = make_hom(prob, s.abel);
    s.phi = prob.phi;
    if (s.phi.dim() != s.abel.free_rank)
        throw std::invalid_argument("cohomology class dimension does not match b1");
    if (!prob.spinc.is_identity()) spinc_shift(sq, prob.spinc);
    s.sq = std::move(sq);
    s.large = check_large(s.hom, s.abel);
    s.eta_exponents.push_back(pair(s.phi, s.sq.s, s.abel).abs());
    if (s.sq.s_prime) s.eta_exponents.push_back(pair(s.phi, *s.sq.s_prime, s.abel).abs());
    s.fk = build_fk_pipeline(s.sq, s.hom, s.abel, s.phi);
    return s;
}

}  // namespace

TorsionSetup prepare_torsion(const TorsionProblem& prob) {
    if (!prob.pres) throw std::invalid_argument("no presentation");
    AbelianizationData abel = abelianize(*prob.pres);
    SquareMatrixData sq = square_matrix_boundary(*prob.pres, abel, prob.chosen_gen);
    return finish_setup(prob, std::move(abel), std::move(sq));
}

TorsionSetup prepare_torsion_from_matrix(const TorsionProblem& prob, const SquareMatrixData& sq) {
    if (!prob.pres) throw std::invalid_argument("no presentation");
    AbelianizationData abel = abelianize(*prob.pres);
    return finish_setup(prob, std::move(abel), sq);
}

double eta(const TorsionSetup& s, double t) {
    double lt = std::log(t);
    double v = 0;
    for (const Rat& e : s.eta_exponents) v += std::max(0.0, e.value() * lt);
    return v;
}

double rho(const TorsionSetup& s, double t) { return eta(s, t) - s.fk.log_det(t); }

TorsionSamples rho_eval(const TorsionSetup& s, const std::vector<double>& grid) {
    TorsionSamples out;
    out.grid = grid;
    out.values.resize(grid.size());
    out.exact = s.fk.exact_available();
    out.unit_ambiguity = s.sq.A.rows > 0 ? 1 : 0;
#pragma omp parallel for schedule(dynamic) if (!out.exact)
    for (long long i = 0; i < static_cast<long long>(grid.size()); ++i)
        out.values[static_cast<std::size_t>(i)] = rho(s, grid[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<double> make_log_grid(double a, double b, int n) {
    if (n < 2 || !(a < b)) throw std::invalid_argument("grid needs n >= 2 and a < b");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
    return g;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::istringstream is(spec);
    std::string kind, sa, sb, sn;
    if (!std::getline(is, kind, ':') || kind != "log" || !std::getline(is, sa, ':') ||
        !std::getline(is, sb, ':') || !std::getline(is, sn))
        throw std::invalid_argument("grid spec must look like log:a:b:n");
    return make_log_grid(std::stod(sa), std::stod(sb), std::stoi(sn));
}

std::vector<double> default_grid() { return make_log_grid(-3, 3, 121); }

void write_samples_csv(const TorsionSamples& s, std::ostream& os) {
    os << "t,rho,exact\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < s.grid.size(); ++i)
        os << s.grid[i] << "," << s.values[i] << "," << (s.exact ? 1 : 0) << "\n";
}

CheckReport check_scaling(const TorsionProblem& prob, const Rat& r, const std::vector<double>& grid,
                          double tol) {
    if (r.is_zero()) throw std::invalid_argument("scaling needs r != 0");
    TorsionProblem scaled = prob;
    for (Rat& w : scaled.phi.weights) w *= r;
    TorsionSetup base = prepare_torsion(prob);
    TorsionSetup rs = prepare_torsion(scaled);
    CheckReport rep;
    rep.name = "scaling r=" + r.str();
    rep.tol = tol;
    double rv = r.value();
    for (double t : grid) {
        double dev = std::abs(rho(rs, t) - rho(base, std::pow(t, rv)));
        rep.max_dev = std::max(rep.max_dev, dev);
    }
    rep.pass = rep.max_dev < tol;
    return rep;
}

SymmetryReport check_symmetry(const TorsionSetup& s, const std::vector<double>& grid, double tol) {
    SymmetryReport out;
    out.report.name = "symmetry";
    out.report.tol = tol;
    double sxx = 0, sxy = 0;
    std::vector<double> lts, diffs;
    for (double t : grid) {
        double lt = std::log(t);
        double d = rho(s, 1.0 / t) - rho(s, t);
        lts.push_back(lt);
        diffs.push_back(d);
        sxx += lt * lt;
        sxy += lt * d;
    }
    out.e = sxx > 0 ? sxy / sxx : 0.0;
    for (std::size_t i = 0; i < lts.size(); ++i)
        out.report.max_dev = std::max(out.report.max_dev, std::abs(diffs[i] - out.e * lts[i]));
    bool integral_phi = true;
    for (const Rat& w : s.phi.weights) integral_phi = integral_phi && w.is_integer();
    bool e_int = std::abs(out.e - std::round(out.e)) < 1e-6;
    out.report.pass = out.report.max_dev < tol && (!integral_phi || e_int);
    if (integral_phi && !e_int) out.report.detail = "fitted e is not an integer";
    return out;
}

PinchingReport check_pinching(const TorsionSetup& s, const std::vector<double>& grid) {
    PinchingReport out;
    out.report.name = "pinching";
    const int m = s.sq.A.rows;
    Rat maxphi;
    for (const auto& e : s.sq.A.entries)
        for (const auto& [w, c] : e.terms()) {
            Rat p = pair(s.phi, w, s.abel).abs();
            if (maxphi < p) maxphi = p;
        }
    Rat csum = Rat(m) * maxphi;
    for (const Rat& e : s.eta_exponents) csum += e;
    out.C = csum.value();
    out.D = m * std::max(0.0, std::log(2.0 * s.fk.a_norm1 + 1.0));
    for (double t : grid) {
        double v = rho(s, t);
        double bound = out.C * std::abs(std::log(t)) + out.D;
        out.report.max_dev = std::max(out.report.max_dev, std::abs(v) - bound);
    }
    out.report.tol = 1e-9;
    out.report.pass = out.report.max_dev <= out.report.tol;
    return out;
}

double shifted_log_det(const LaurentMatrix& f0, int k, double t) {
    if (k < 0 || k > f0.n) throw std::invalid_argument("bad summand count");
    LaurentMatrix f = f0;
    for (int i = 0; i < k; ++i)
        f.at(i, i).add_term(Exponent(static_cast<std::size_t>(f.nvars), 0), Cx(t, 0));
    MultiLaurent det = laurent_det(f);
    if (det.is_zero()) throw std::runtime_error("determinant vanishes");
    if (auto u = to_univariate(det)) {
        // support on a line: the Mahler measure reduces to the 1-var root formula
        try {
            return mahler_exact_1var(u->coeffs);
        } catch (const std::exception&) {
        }
    }
    return mahler_numeric(det);
}

double shifted_det_bound(double t, int m, int k, double f0_norm1, double f1_norm1) {
    if (t <= 1.0) return m * std::max(0.0, std::log(f0_norm1 + f1_norm1));
    return k * std::log(t) + m * std::max(0.0, std::log(2.0 * f0_norm1 + f1_norm1));
}

CheckReport check_shifted_det(const LaurentMatrix& f0, int k, const std::vector<double>& grid) {
    CheckReport rep;
    rep.name = "shifted determinant bound";
    rep.tol = 1e-9;
    double n0 = 0;
    for (const auto& e : f0.entries) n0 = std::max(n0, e.norm1());
    n0 *= static_cast<double>(f0.n) * static_cast<double>(f0.n);
    double n1 = k > 0 ? static_cast<double>(f0.n) * static_cast<double>(f0.n) : 0.0;
    for (double t : grid) {
        double v = shifted_log_det(f0, k, t);
        double b = shifted_det_bound(t, f0.n, k, n0, n1);
        rep.max_dev = std::max(rep.max_dev, v - b);
    }
    rep.pass = rep.max_dev <= rep.tol;
    return rep;
}

}  // namespace l2t
