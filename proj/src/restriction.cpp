#include "l2t/restriction.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace l2t {

int LatticeRestriction::find(const Perm& p) const {
    for (std::size_t i = 0; i < group.size(); ++i)
        if (group[i] == p) return static_cast<int>(i);
    return -1;
}

std::vector<long long> LatticeRestriction::coords(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != d) throw std::invalid_argument("coords: dimension mismatch");
    std::vector<long long> res = v;
    std::vector<long long> x(static_cast<std::size_t>(d), 0);
    // basis rows are upper triangular with positive diagonal
    for (int i = 0; i < d; ++i) {
        long long piv = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        long long r = res[static_cast<std::size_t>(i)];
        if (r % piv != 0) throw std::invalid_argument("vector not in the restricted lattice");
        long long q = r / piv;
        x[static_cast<std::size_t>(i)] = q;
        for (int j = i; j < d; ++j)
            res[static_cast<std::size_t>(j)] -= q * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (long long r : res)
        if (r != 0) throw std::invalid_argument("vector not in the restricted lattice");
    return x;
}

std::vector<Rat> LatticeRestriction::reweight(const CohomClass& phi) const {
    if (phi.dim() != d) throw std::invalid_argument("cohomology class dimension mismatch");
    std::vector<Rat> w(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Rat acc;
        for (int j = 0; j < d; ++j)
            acc += phi.weights[static_cast<std::size_t>(j)] *
                   Rat(basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        w[static_cast<std::size_t>(i)] = acc;
    }
    return w;
}

LatticeRestriction build_restriction(const QuotientHom& h, long long max_fiber,
                                     const std::vector<std::vector<long long>>* extra_offsets) {
    LatticeRestriction r;
    r.d = h.abelian_rank();
    r.num_gens = h.presentation ? h.presentation->num_generators() : static_cast<int>(h.weights.size());
    const int deg = h.finite_part ? h.finite_part->degree : 1;

    // enumerate the finite image group H' by breadth first search, recording
    // transversal representatives along the way
    std::map<Perm, int> idx;
    Perm id = Perm::identity(deg);
    r.group.push_back(id);
    r.rep_offset.push_back(std::vector<long long>(static_cast<std::size_t>(r.d), 0));
    idx[id] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    std::vector<std::pair<int, int>> edges;  // discovery order irrelevant; fill targets later
    while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop();
        for (int k = 0; k < r.num_gens; ++k) {
            Perm p = h.finite_part ? h.finite_part->gen_images[static_cast<std::size_t>(k)] : id;
            Perm q = r.group[static_cast<std::size_t>(a)] * p;
            if (idx.find(q) == idx.end()) {
                if (static_cast<long long>(r.group.size()) >= max_fiber)
                    throw std::runtime_error("finite image group exceeds the size bound");
                int b = static_cast<int>(r.group.size());
                idx[q] = b;
                r.group.push_back(q);
                std::vector<long long> off = r.rep_offset[static_cast<std::size_t>(a)];
                const auto& gw = h.weights[static_cast<std::size_t>(k)];
                for (int i = 0; i < r.d; ++i) off[static_cast<std::size_t>(i)] += gw[static_cast<std::size_t>(i)];
                r.rep_offset.push_back(off);
                bfs.push(b);
            }
        }
    }
    r.index = static_cast<long long>(r.group.size());

    // cache coset targets a -> a * g_k
    r.gen_target.assign(r.group.size() * static_cast<std::size_t>(r.num_gens), 0);
    for (std::size_t a = 0; a < r.group.size(); ++a)
        for (int k = 0; k < r.num_gens; ++k) {
            Perm p = h.finite_part ? h.finite_part->gen_images[static_cast<std::size_t>(k)] : id;
            r.gen_target[a * static_cast<std::size_t>(r.num_gens) + static_cast<std::size_t>(k)] =
                idx.at(r.group[a] * p);
        }

    // Schreier generators r_a + v_k - r_b generate Lambda = Q cap ({1} x Z^d)
    std::vector<std::vector<long long>> schreier;
    for (std::size_t a = 0; a < r.group.size(); ++a)
        for (int k = 0; k < r.num_gens; ++k) {
            int b = r.target(static_cast<int>(a), k);
            std::vector<long long> v = r.rep_offset[a];
            const auto& gw = h.weights[static_cast<std::size_t>(k)];
            for (int i = 0; i < r.d; ++i)
                v[static_cast<std::size_t>(i)] +=
                    gw[static_cast<std::size_t>(i)] - r.rep_offset[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
            schreier.push_back(std::move(v));
        }
    if (r.d > 0) {
        if (schreier.empty()) throw std::runtime_error("restricted lattice is empty");
        r.basis = hnf_rows(std::move(schreier));
        if (static_cast<int>(r.basis.size()) != r.d)
            throw std::runtime_error("restricted lattice has rank below the abelian rank");
    }

    if (extra_offsets) {
        if (extra_offsets->size() != r.group.size())
            throw std::invalid_argument("one offset per group element expected");
        for (std::size_t a = 0; a < r.group.size(); ++a) {
            // offsets must lie in Lambda so the restricted matrix stays defined
            r.coords((*extra_offsets)[a]);
            for (int i = 0; i < r.d; ++i)
                r.rep_offset[a][static_cast<std::size_t>(i)] += (*extra_offsets)[a][static_cast<std::size_t>(i)];
        }
    }
    return r;
}

LaurentMatrix restrict_matrix(const CxGRMatrix& a, const QuotientHom& h, const LatticeRestriction& r) {
    if (a.rows != a.cols) throw std::invalid_argument("restricted matrix must be square");
    const int n = a.rows;
    const int f = static_cast<int>(r.index);
    LaurentMatrix b(n * f, r.d);
    Exponent e(static_cast<std::size_t>(r.d));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [w, c] : a.at(i, j).terms()) {
                Perm p = h.perm_of(w);
                std::vector<long long> vw = h.weight_of(w);
                for (int ai = 0; ai < f; ++ai) {
                    int bi = r.find(r.group[static_cast<std::size_t>(ai)] * p);
                    if (bi < 0) throw std::runtime_error("word leaves the enumerated image group");
                    std::vector<long long> v = r.rep_offset[static_cast<std::size_t>(ai)];
                    for (int t = 0; t < r.d; ++t)
                        v[static_cast<std::size_t>(t)] +=
                            vw[static_cast<std::size_t>(t)] - r.rep_offset[static_cast<std::size_t>(bi)][static_cast<std::size_t>(t)];
                    std::vector<long long> x = r.coords(v);
                    for (int t = 0; t < r.d; ++t) {
                        if (x[static_cast<std::size_t>(t)] > 1000000 || x[static_cast<std::size_t>(t)] < -1000000)
                            throw std::runtime_error("restricted exponent out of range");
                        e[static_cast<std::size_t>(t)] = static_cast<int>(x[static_cast<std::size_t>(t)]);
                    }
                    b.at(i * f + ai, j * f + bi).add_term(e, c);
                }
            }
    return b;
}

LaurentMatrix restrict_univariate_power(const MultiLaurent& p, int k) {
    if (p.nvars() != 1) throw std::invalid_argument("one-variable polynomial expected");
    if (k <= 0) throw std::invalid_argument("positive index expected");
    LaurentMatrix b(k, 1);
    for (const auto& [e, c] : p.terms()) {
        int deg = e[0];
        for (int a = 0; a < k; ++a) {
            int s = a + deg;
            int bi = ((s % k) + k) % k;
            b.at(a, bi).add_term({(s - bi) / k}, c);
        }
    }
    return b;
}

}  // namespace l2t
