#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2t/laurent.hpp"
#include "l2t/rational.hpp"
#include "l2t/torsion.hpp"

namespace l2t {

struct DegreeResult {
    Rat slope0, slopeInf, degree;  // degree = slopeInf - slope0
    double T0 = 1, TInf = 1;       // break thresholds (root magnitudes in t)
    bool exact = false;
};

/// Exact asymptotic slopes from the univariate closed form.
DegreeResult degree_exact(const TorsionSetup& s);

/// Least-squares slopes over the outermost decade on each side; needs a grid
/// spanning at least 4 decades.
DegreeResult degree_numeric(const TorsionSamples& samples);

enum class ThurstonVerdict { Equal, LowerBoundOk, Violation, NotApplicable };
std::string verdict_name(ThurstonVerdict v);

/// EQUAL when degree == -x within tol, LOWER-BOUND-OK when degree >= -x - tol.
ThurstonVerdict compare_thurston(const DegreeResult& r, const Rat& x, bool excluded, double tol = 1e-9);

struct TowerLevel {
    int level = 0;                // quotient Z x Z/2^level
    std::vector<double> values;  // per grid t
    Rat kernel_dim;
};

struct TowerReport {
    std::vector<double> grid;
    std::vector<TowerLevel> levels;
    std::vector<double> limit;  // 2-variable numeric values per grid t
    std::vector<std::string> violations;
};

/// Tower study for a 1x1 matrix [p(z,w)] over Z^2 along the chain
/// G_i = {0} x 2^i Z: each level specializes w to 2^i-th roots of unity and
/// averages the exact 1-var values. Early levels oscillate around the 2-var
/// value (above it at t = 1, below it elsewhere), so only the deepest level
/// is compared against the limit: a gap above tol is reported as a violation.
TowerReport tower_study(const MultiLaurent& p, const CohomClass& phi, int max_level,
                        const std::vector<double>& grid, double tol = 1e-2);

void write_tower_csv(const TowerReport& r, std::ostream& os);

}  // namespace l2t
