#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "l2t/homomorphism.hpp"
#include "l2t/presentation.hpp"
#include "l2t/rational.hpp"

namespace l2t {

struct CatalogEntry {
    std::string name;
    std::shared_ptr<Presentation> pres;
    bool boundary = true;
    bool excluded = false;  // outside the main theorem (S^1 x D^2)
    bool fibered = false;
    std::optional<double> dilatation;  // monodromy entropy for fibered entries
    Rat x_unit;                        // Thurston norm of the generating class
    Rat expected_degree;
    std::string notes;
};

const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_catalog(const std::string& name);

/// x_M(phi) by table lookup and the scaling law x(r phi) = |r| x(phi).
/// All entries have b1 = 1, so phi is one rational weight.
Rat thurston_oracle(const CatalogEntry& entry, const CohomClass& phi);

std::string catalog_json();

}  // namespace l2t
