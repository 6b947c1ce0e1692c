#pragma once

#include <string>
#include <vector>

#include "l2t/word.hpp"

namespace l2t {

/// A finite presentation. Generators are indexed; names are kept for I/O only.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int num_generators() const { return static_cast<int>(generator_names.size()); }
    int deficiency() const {
        return static_cast<int>(generator_names.size()) - static_cast<int>(relators.size());
    }

    /// Throws if a relator references an undeclared generator index.
    void validate() const;

    static Presentation from_strings(std::vector<std::string> gens,
                                     const std::vector<std::string>& relator_texts);
};

/// H1 of a presentation: free rank, torsion invariants, and the image of each
/// generator in the free part and the torsion summands.
struct AbelianizationData {
    int free_rank = 0;                                   // d
    std::vector<long long> torsion_invariants;           // divisors >= 2, each dividing the next
    std::vector<std::vector<long long>> gen_weights;     // per generator, vector in Z^d
    std::vector<std::vector<long long>> gen_torsion;     // per generator, residues mod torsion_invariants

    /// Exponent-sum image of a word in Z^d (free part only).
    std::vector<long long> weight_of(const Word& w) const;
};

/// Smith normal form data of an integer matrix: positive diagonal divisors and
/// the left transform U with U*M*V = diag(divisors).
struct SmithForm {
    std::vector<long long> divisors;                 // nonzero diagonal entries, d_i | d_{i+1}
    std::vector<std::vector<long long>> left;        // U, rows x rows of input
};

SmithForm smith_normal_form(const std::vector<std::vector<long long>>& m);

AbelianizationData abelianize(const Presentation& p);

}  // namespace l2t
