#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "l2t/fkdet.hpp"
#include "l2t/foxcalc.hpp"
#include "l2t/homomorphism.hpp"
#include "l2t/presentation.hpp"

namespace l2t {

/// Input description of one torsion computation.
struct TorsionProblem {
    std::shared_ptr<Presentation> pres;
    std::optional<FiniteGroupRep> finite;
    std::optional<std::vector<std::vector<long long>>> weights;  // default: abelianization
    CohomClass phi;
    std::optional<int> chosen_gen;  // deleted-column override
    Word spinc;                     // spin-c shift, identity by default
};

/// Everything assembled for evaluating rho(t) = eta(t) - fk_log_det(t).
struct TorsionSetup {
    std::shared_ptr<Presentation> pres;
    AbelianizationData abel;
    QuotientHom hom;
    SquareMatrixData sq;
    CohomClass phi;
    std::vector<Rat> eta_exponents;  // |phi(s)| and, closed case, |phi(s')|
    FkPipeline fk;
    LargeCheck large;
};

TorsionSetup prepare_torsion(const TorsionProblem& prob);

/// Closed-case and synthetic inputs: the square matrix is supplied directly.
TorsionSetup prepare_torsion_from_matrix(const TorsionProblem& prob, const SquareMatrixData& sq);

double eta(const TorsionSetup& s, double t);
double rho(const TorsionSetup& s, double t);

struct TorsionSamples {
    std::vector<double> grid;
    std::vector<double> values;
    bool exact = false;
    long long unit_ambiguity = 0;  // values pinned modulo this multiple of ln t
};

TorsionSamples rho_eval(const TorsionSetup& s, const std::vector<double>& grid);

/// "log:a:b:n": n log-spaced points from 10^a to 10^b.
std::vector<double> make_log_grid(double a, double b, int n);
std::vector<double> parse_grid(const std::string& spec);
std::vector<double> default_grid();  // log:-3:3:121

void write_samples_csv(const TorsionSamples& s, std::ostream& os);

struct CheckReport {
    std::string name;
    bool pass = false;
    double max_dev = 0;
    double tol = 0;
    std::string detail;
};

/// Scaling identity: rho for the class r*phi equals rho_phi(t^r) on the grid.
CheckReport check_scaling(const TorsionProblem& prob, const Rat& r, const std::vector<double>& grid,
                          double tol = 1e-8);

struct SymmetryReport {
    CheckReport report;
    double e = 0;  // fitted constant in rho(1/t) - rho(t) = e ln t
};

/// Symmetry defect: least-squares fit of e over a grid symmetric under t -> 1/t;
/// for integral phi the fit must land on an integer.
SymmetryReport check_symmetry(const TorsionSetup& s, const std::vector<double>& grid, double tol = 1e-8);

struct PinchingReport {
    CheckReport report;
    double C = 0, D = 0;
};

/// Pinching: C ln t - D <= rho(t) <= -C ln t + D for t <= 1, mirrored above 1.
PinchingReport check_pinching(const TorsionSetup& s, const std::vector<double>& grid);

/// Shifted family f[t] = f0 + t * (identity on the first k coordinates).
double shifted_log_det(const LaurentMatrix& f0, int k, double t);
double shifted_det_bound(double t, int m, int k, double f0_norm1, double f1_norm1);
CheckReport check_shifted_det(const LaurentMatrix& f0, int k, const std::vector<double>& grid);

}  // namespace l2t
