#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/presentation.hpp"
#include "l2t/word.hpp"

namespace l2t {

/// Free Fox derivative d(w)/d(x_gen) as a group ring element.
IntGroupRing fox_derivative(const Word& w, int gen);

/// Full Fox matrix of a presentation: rows are relators, columns generators.
IntGRMatrix fox_matrix(const Presentation& p);

/// The square matrix entering the torsion formula, together with the
/// bookkeeping needed for the eta term and the spin-c offset.
struct SquareMatrixData {
    IntGRMatrix A;                 // square, possibly 0 x 0
    Word s;                        // generator deleted in the boundary case / column case
    std::optional<Word> s_prime;   // second eta word, closed case only
    bool boundary_case = true;
    int deleted_col = -1;
    int deleted_row = -1;          // closed case only
    Word spinc_word;               // accumulated spin-c shift h
};

/// Boundary case (deficiency one): delete the column of the first generator
/// with nonzero image in H1_f, or of chosen_gen if given.
SquareMatrixData square_matrix_boundary(const Presentation& p, const AbelianizationData& abel,
                                        std::optional<int> chosen_gen = std::nullopt);

/// Closed case (deficiency zero): delete row i and column j of the Fox matrix.
/// s is generator j; s_prime must be supplied by the caller.
SquareMatrixData square_matrix_closed(const Presentation& p, int row, int col, const Word& s_prime);

/// Changes the spin-c structure by h: multiplies one column of A on the right
/// by h^{-1}, which adds phi(h)*ln t to the torsion function. Throws if A is
/// empty, since there is no column to act on.
void spinc_shift(SquareMatrixData& sq, const Word& h);

/// JSON round trip ({"rows","cols","entries":[[i,j,[["word",coeff],...]],...]}).
std::string square_matrix_to_json(const SquareMatrixData& sq, const std::vector<std::string>& names);
SquareMatrixData square_matrix_from_json(const std::string& text, const std::vector<std::string>& names);

}  // namespace l2t
