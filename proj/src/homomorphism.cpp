#include "l2t/homomorphism.hpp"

#include <cstdlib>
#include <stdexcept>

namespace l2t {

void FiniteGroupRep::validate(const Presentation& p) const {
    if (gen_images.size() != static_cast<std::size_t>(p.num_generators()))
        throw std::invalid_argument("finite part: wrong number of generator images");
    for (const Perm& q : gen_images)
        if (q.degree() != degree) throw std::invalid_argument("finite part: degree mismatch");
    for (const Word& r : p.relators)
        if (!image(r).is_identity())
            throw std::invalid_argument("finite part: relator does not map to the identity");
}

void QuotientHom::validate() const {
    if (!presentation) throw std::invalid_argument("hom: no presentation");
    if (weights.size() != static_cast<std::size_t>(presentation->num_generators()))
        throw std::invalid_argument("hom: wrong number of weight vectors");
    for (const auto& w : weights)
        if (static_cast<int>(w.size()) != abelian_rank())
            throw std::invalid_argument("hom: ragged weight vectors");
    if (finite_part) finite_part->validate(*presentation);
    for (const Word& r : presentation->relators) {
        for (long long v : weight_of(r))
            if (v != 0) throw std::invalid_argument("hom: relator has nonzero abelian image");
    }
}

QuotientHom QuotientHom::abelian(const Presentation& p, const AbelianizationData& a) {
    QuotientHom h;
    h.presentation = &p;
    h.weights = a.gen_weights;
    h.is_large = true;
    return h;
}

long long int_det(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<long long>> hnf_rows(std::vector<std::vector<long long>> m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // euclid on column entries below 'row'
        for (bool moved = true; moved;) {
            moved = false;
            std::size_t piv = m.size();
            for (std::size_t i = row; i < m.size(); ++i)
                if (m[i][col] != 0 &&
                    (piv == m.size() || std::abs(m[i][col]) < std::abs(m[piv][col])))
                    piv = i;
            if (piv == m.size()) break;
            std::swap(m[row], m[piv]);
            for (std::size_t i = row + 1; i < m.size(); ++i)
                if (m[i][col] != 0) {
                    long long q = m[i][col] / m[row][col];
                    for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                    if (m[i][col] != 0) moved = true;
                }
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0)
            for (std::size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
        for (std::size_t i = 0; i < row; ++i) {
            long long q = m[i][col] / m[row][col];
            if (m[i][col] % m[row][col] < 0) --q;  // floor
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

LargeCheck check_large(QuotientHom& h, const AbelianizationData& abel) {
    LargeCheck out;
    h.validate();
    const int d = h.abelian_rank();
    if (d != abel.free_rank) {
        out.failure = LargeFailure::RankMismatch;
        out.detail = "hom rank " + std::to_string(d) + " vs H1 free rank " +
                     std::to_string(abel.free_rank);
        h.is_large = false;
        return out;
    }
    if (d == 0) {
        out.ok = true;
        h.is_large = true;
        return out;
    }
    const std::size_t g = h.weights.size();

    // The weights reproduce the H1_f projection up to unimodular basis change
    // iff both d x g weight matrices have full rank d and span the same row
    // lattice in Z^g.
    std::vector<std::vector<long long>> w0(static_cast<std::size_t>(d), std::vector<long long>(g, 0));
    std::vector<std::vector<long long>> w(static_cast<std::size_t>(d), std::vector<long long>(g, 0));
    for (std::size_t j = 0; j < g; ++j)
        for (int i = 0; i < d; ++i) {
            w0[static_cast<std::size_t>(i)][j] = abel.gen_weights[j][static_cast<std::size_t>(i)];
            w[static_cast<std::size_t>(i)][j] = h.weights[j][static_cast<std::size_t>(i)];
        }
    auto h0 = hnf_rows(w0);
    auto h1 = hnf_rows(w);
    if (h1.size() != static_cast<std::size_t>(d)) {
        out.failure = LargeFailure::RankMismatch;
        out.detail = "hom weights have rank " + std::to_string(h1.size()) + " < " + std::to_string(d);
        h.is_large = false;
        return out;
    }
    if (h0 != h1) {
        out.failure = LargeFailure::WeightMismatch;
        out.detail = "hom weights span a different lattice than the H1_f projection";
        h.is_large = false;
        return out;
    }
    out.ok = true;
    h.is_large = true;
    return out;
}

Rat pair(const CohomClass& phi, const Word& w, const AbelianizationData& a) {
    if (phi.dim() != a.free_rank) throw std::invalid_argument("cohomology class dimension mismatch");
    return phi.pair_weights(a.weight_of(w));
}

}  // namespace l2t
