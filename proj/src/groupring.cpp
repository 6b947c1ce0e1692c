#include "l2t/groupring.hpp"

#include <cmath>

namespace l2t {

CxGRMatrix twist(const CxGRMatrix& a, const CohomClass& phi, double t, const AbelianizationData& abel) {
    CxGRMatrix r(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            CxGroupRing e;
            for (const auto& [w, c] : a.at(i, j).terms())
                e.add_term(w, c * std::pow(t, phi.pair_weights(abel.weight_of(w)).value()));
            r.at(i, j) = e;
        }
    return r;
}

}  // namespace l2t
