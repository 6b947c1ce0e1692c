#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "l2t/foxcalc.hpp"
#include "l2t/homomorphism.hpp"
#include "l2t/laurent_det.hpp"
#include "l2t/mahler.hpp"
#include "l2t/restriction.hpp"

namespace l2t {

/// Raised when the twisted chain complex is not weakly acyclic: the restricted
/// determinant vanishes identically. Carries the estimated von Neumann
/// dimension of the kernel as a certificate.
class NonAcyclicError : public std::runtime_error {
public:
    NonAcyclicError(std::string what, Rat kernel_dim)
        : std::runtime_error(std::move(what)), kernel_dimension(kernel_dim) {}
    Rat kernel_dimension;
};

/// Generic nullity of the restricted matrix on the torus, divided by the
/// restriction index: samples random unit-modulus points, takes the rank by
/// column-pivoted QR, and majority-votes over the samples.
Rat kernel_dimension(const LaurentMatrix& b, long long index, int samples = 11, unsigned seed = 7);

/// Everything needed to evaluate the Fuglede-Kadison log determinant of the
/// twisted square matrix as a function of t, computed once per (matrix, hom,
/// class) triple.
struct FkPipeline {
    AbelianizationData abel;
    CohomClass phi;
    LatticeRestriction restriction;
    LaurentMatrix b;                 // untwisted restricted matrix
    MultiLaurent det;                // its determinant over the lattice
    std::vector<Rat> wprime;         // phi in the lattice basis
    std::optional<ExactDetData> exact;
    long long index = 1;
    double a_norm1 = 0;              // norm bound of the unrestricted matrix

    bool exact_available() const { return exact.has_value(); }

    /// (1/index) * log det of the t-twisted restricted matrix.
    double log_det(double t) const;
    double log_det_serial(double t) const;
};

/// Builds the pipeline; throws NonAcyclicError if the determinant vanishes.
FkPipeline build_fk_pipeline(const SquareMatrixData& sq, const QuotientHom& hom,
                             const AbelianizationData& abel, const CohomClass& phi,
                             const std::vector<std::vector<long long>>* rep_offsets = nullptr);

/// Standalone Fuglede-Kadison log determinant of the twisted matrix at one t.
double fk_log_det(const SquareMatrixData& sq, const QuotientHom& hom, const AbelianizationData& abel,
                  const CohomClass& phi, double t);

}  // namespace l2t
