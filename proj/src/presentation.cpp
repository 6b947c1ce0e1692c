#include "l2t/presentation.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace l2t {

using boost::multiprecision::cpp_int;

void Presentation::validate() const {
    for (const Word& r : relators)
        for (const Letter& l : r.letters())
            if (l.gen < 0 || l.gen >= num_generators())
                throw std::invalid_argument("relator uses undeclared generator index " +
                                            std::to_string(l.gen));
}

Presentation Presentation::from_strings(std::vector<std::string> gens,
                                        const std::vector<std::string>& relator_texts) {
    Presentation p;
    p.generator_names = std::move(gens);
    for (const std::string& t : relator_texts) p.relators.push_back(Word::parse(t, p.generator_names));
    p.validate();
    return p;
}

std::vector<long long> AbelianizationData::weight_of(const Word& w) const {
    std::vector<long long> v(static_cast<std::size_t>(free_rank), 0);
    for (const Letter& l : w.letters()) {
        const auto& gw = gen_weights.at(static_cast<std::size_t>(l.gen));
        for (int i = 0; i < free_rank; ++i) v[static_cast<std::size_t>(i)] += l.exp * gw[static_cast<std::size_t>(i)];
    }
    return v;
}

namespace {

using Mat = std::vector<std::vector<cpp_int>>;

// Smith normal form by elementary operations; arbitrary-precision entries so
// long relators cannot overflow. Tracks only the left transform U.
struct SnfWorker {
    Mat m;     // rows x cols
    Mat u;     // rows x rows, starts as identity
    std::size_t rows, cols;

    explicit SnfWorker(const std::vector<std::vector<long long>>& in) {
        rows = in.size();
        cols = rows ? in[0].size() : 0;
        m.assign(rows, std::vector<cpp_int>(cols, 0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = in[i][j];
        u.assign(rows, std::vector<cpp_int>(rows, 0));
        for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    }
    void add_row(std::size_t dst, std::size_t src, const cpp_int& f) {
        for (std::size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const cpp_int& f) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (std::size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    }

    void run() {
        std::size_t k = 0;
        while (k < rows && k < cols) {
            // find a pivot
            std::size_t pi = rows, pj = cols;
            cpp_int best = 0;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                        best = abs(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;  // all zero
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = k + 1; i < rows; ++i)
                    if (m[i][k] != 0) {
                        cpp_int q = m[i][k] / m[k][k];
                        add_row(i, k, -q);
                        if (m[i][k] != 0) { swap_rows(i, k); dirty = true; }
                    }
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (m[k][j] != 0) {
                        cpp_int q = m[k][j] / m[k][k];
                        add_col(j, k, -q);
                        if (m[k][j] != 0) { swap_cols(j, k); dirty = true; }
                    }
            }
            if (m[k][k] < 0) negate_row(k);
            ++k;
        }
        // enforce divisibility chain
        std::size_t r = k;
        for (bool again = true; again;) {
            again = false;
            for (std::size_t i = 0; i + 1 < r; ++i) {
                if (m[i + 1][i + 1] % m[i][i] != 0) {
                    // fold entry (i+1,i+1) into column i, then re-reduce 2x2 block
                    add_col(i, i + 1, 1);
                    cpp_int a = m[i][i], b = m[i + 1][i];
                    // row-reduce the pair (a; b) to (gcd; 0)
                    while (b != 0) {
                        cpp_int q = a / b;
                        add_row(i, i + 1, -q);
                        std::swap(a, b);
                        swap_rows(i, i + 1);
                        a = m[i][i];
                        b = m[i + 1][i];
                    }
                    // clear the off-diagonal entry in column i+1
                    if (m[i][i + 1] != 0) {
                        cpp_int q = m[i][i + 1] / m[i][i];
                        add_col(i + 1, i, -q);
                    }
                    if (m[i + 1][i + 1] < 0) negate_row(i + 1);
                    if (m[i][i] < 0) negate_row(i);
                    again = true;
                }
            }
        }
    }
};

long long to_ll(const cpp_int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("smith normal form entry exceeds 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

SmithForm smith_normal_form(const std::vector<std::vector<long long>>& in) {
    SnfWorker w(in);
    w.run();
    SmithForm out;
    std::size_t n = std::min(w.rows, w.cols);
    for (std::size_t i = 0; i < n; ++i)
        if (w.m[i][i] != 0) out.divisors.push_back(to_ll(w.m[i][i]));
    out.left.assign(w.rows, std::vector<long long>(w.rows, 0));
    for (std::size_t i = 0; i < w.rows; ++i)
        for (std::size_t j = 0; j < w.rows; ++j) out.left[i][j] = to_ll(w.u[i][j]);
    return out;
}

AbelianizationData abelianize(const Presentation& p) {
    p.validate();
    const std::size_t g = static_cast<std::size_t>(p.num_generators());
    const std::size_t r = p.relators.size();

    // M = transpose of the exponent-sum relation matrix: columns are relator
    // images in Z^g, so H1 = coker(M).
    std::vector<std::vector<long long>> m(g, std::vector<long long>(std::max<std::size_t>(r, 1), 0));
    for (std::size_t j = 0; j < r; ++j)
        for (const Letter& l : p.relators[j].letters())
            m[static_cast<std::size_t>(l.gen)][j] += l.exp;

    SmithForm snf = smith_normal_form(m);
    const std::size_t rank = snf.divisors.size();

    AbelianizationData out;
    out.free_rank = static_cast<int>(g - rank);
    std::vector<std::size_t> torsion_rows;
    for (std::size_t i = 0; i < rank; ++i)
        if (snf.divisors[i] >= 2) {
            out.torsion_invariants.push_back(snf.divisors[i]);
            torsion_rows.push_back(i);
        }

    // In the U-basis, coker = (sum of Z/d_i over diagonal rows) + Z^(g-rank);
    // generator e_i maps to column i of U.
    out.gen_weights.assign(g, std::vector<long long>(static_cast<std::size_t>(out.free_rank), 0));
    out.gen_torsion.assign(g, std::vector<long long>(torsion_rows.size(), 0));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(out.free_rank); ++k)
            out.gen_weights[i][k] = snf.left[rank + k][i];
        for (std::size_t k = 0; k < torsion_rows.size(); ++k) {
            long long d = snf.divisors[torsion_rows[k]];
            long long v = snf.left[torsion_rows[k]][i] % d;
            out.gen_torsion[i][k] = v < 0 ? v + d : v;
        }
    }
    return out;
}

}  // namespace l2t
