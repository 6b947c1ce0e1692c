#pragma once

#include <optional>
#include <vector>

#include "l2t/laurent.hpp"
#include "l2t/rational.hpp"

namespace l2t {

/// p(z) = lead * z^order * prod (z - roots[i]) with every root nonzero.
struct PolyFactorization {
    double log_abs_lead = 0;
    long long order = 0;       // multiplicity of the root at zero
    std::vector<Cx> roots;
};

/// Roots via the companion matrix; the factorization is re-expanded and
/// compared against the input coefficients (relative tolerance tol).
PolyFactorization factor_poly(const std::vector<Cx>& coeffs, double tol = 1e-9);

/// Exact Mahler measure of a one-variable polynomial: log|lead| plus the log
/// moduli of the roots outside the unit circle.
double mahler_exact_1var(const std::vector<Cx>& coeffs);

/// Log Mahler measure of p over the torus by tensor trapezoid quadrature,
/// doubling an initial 64^d grid until two consecutive values agree to tol
/// (at most max_doublings refinements).
double mahler_numeric(const MultiLaurent& p, double tol = 1e-10, int max_doublings = 4);
double mahler_numeric_serial(const MultiLaurent& p, double tol = 1e-10, int max_doublings = 4);

/// Closed form of the twisted log determinant of a determinant polynomial
/// whose support lies on a line. Writing u = t^wdir,
///   value(t) = log_abs_lead + lin * ln t + sum_i max(0, ln|a_i| - wdir ln t).
struct ExactDetData {
    double log_abs_lead = 0;
    Rat lin;                    // slope contribution of the monomial prefactor
    Rat wdir;                   // reweighted class paired with the support direction
    std::vector<Cx> roots;      // nonzero roots of the reduced polynomial

    double eval_log(double log_t) const;
    /// Breakpoints t where a root crosses the twist radius; empty if wdir == 0.
    std::vector<double> breakpoints() const;
};

/// Assembles the closed form from a univariate reduction and the reweighted
/// class phi' (as Lambda-basis coefficients). Returns nothing if the
/// factorization check fails.
std::optional<ExactDetData> exact_det_data(const UnivariateReduction& u, const std::vector<Rat>& wprime);

}  // namespace l2t
