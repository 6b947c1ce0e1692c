#pragma once

#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/homomorphism.hpp"
#include "l2t/laurent.hpp"
#include "l2t/rational.hpp"

namespace l2t {

/// Restriction of the quotient Q <= H x Z^d to the finite-index lattice
/// Lambda = Q intersect ({1} x Z^d). Elements of the image group H' are
/// enumerated with index 0 = identity; each coset keeps a transversal
/// representative offset in Z^d.
struct LatticeRestriction {
    int d = 0;                                       // ambient abelian rank
    long long index = 1;                             // [Q : Lambda] = |H'|
    std::vector<Perm> group;                         // elements of H'
    std::vector<std::vector<long long>> rep_offset;  // r(sigma) per element
    std::vector<std::vector<long long>> basis;       // Lambda basis rows, upper triangular HNF
    std::vector<int> gen_target;                     // per (element, generator): target element index
    int num_gens = 0;

    int target(int elem, int gen) const { return gen_target[static_cast<std::size_t>(elem) * static_cast<std::size_t>(num_gens) + static_cast<std::size_t>(gen)]; }

    /// Index of a group element; -1 if absent.
    int find(const Perm& p) const;

    /// Exact coordinates of v in the basis; throws if v is not in Lambda.
    std::vector<long long> coords(const std::vector<long long>& v) const;

    /// phi expressed in the Lambda basis: w_i = phi(basis row i).
    std::vector<Rat> reweight(const CohomClass& phi) const;
};

/// Builds the restriction data for a validated quotient hom. Throws if the
/// image group exceeds max_fiber elements or if Lambda has rank < d.
/// extra_offsets, if given, perturbs each transversal representative; the
/// Fuglede-Kadison determinant of the restricted matrix must not change.
LatticeRestriction build_restriction(const QuotientHom& h, long long max_fiber = 20000,
                                     const std::vector<std::vector<long long>>* extra_offsets = nullptr);

/// The matrix of right multiplication by A, restricted to the induced
/// Z[Lambda]-module. Output size is (A.rows * index) x (A.cols * index) with
/// nvars = d; block row (i, a) and block column (j, b).
LaurentMatrix restrict_matrix(const CxGRMatrix& a, const QuotientHom& h, const LatticeRestriction& r);

/// One-variable helper: the k x k matrix of multiplication by p(z) on C[z,1/z]
/// viewed over the sublattice kZ. Used to test the index power law.
LaurentMatrix restrict_univariate_power(const MultiLaurent& p, int k);

}  // namespace l2t
