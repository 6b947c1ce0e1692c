#include "l2t/foxcalc.hpp"

#include <json.hpp>
#include <stdexcept>

namespace l2t {

IntGroupRing fox_derivative(const Word& w, int gen) {
    // d(uv) = du + u dv; d(x^n)/dx = 1 + x + ... + x^(n-1) for n > 0 and
    // -(x^-1 + ... + x^n) for n < 0; derivatives of other generators vanish.
    IntGroupRing out;
    Word prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen == gen) {
            if (l.exp > 0) {
                for (long long k = 0; k < l.exp; ++k)
                    out.add_term(prefix * Word::generator(gen, k), 1);
            } else {
                for (long long k = 1; k <= -l.exp; ++k)
                    out.add_term(prefix * Word::generator(gen, -k), -1);
            }
        }
        prefix = prefix * Word::generator(l.gen, l.exp);
    }
    return out;
}

IntGRMatrix fox_matrix(const Presentation& p) {
    IntGRMatrix m(static_cast<int>(p.relators.size()), p.num_generators());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = fox_derivative(p.relators[static_cast<std::size_t>(i)], j);
    return m;
}

SquareMatrixData square_matrix_boundary(const Presentation& p, const AbelianizationData& abel,
                                        std::optional<int> chosen_gen) {
    if (p.deficiency() != 1)
        throw std::invalid_argument("boundary square matrix needs deficiency one");
    int col = -1;
    if (chosen_gen) {
        col = *chosen_gen;
        bool nz = false;
        for (long long v : abel.gen_weights.at(static_cast<std::size_t>(col))) nz = nz || v != 0;
        if (!nz) throw std::invalid_argument("chosen generator has trivial image in H1_f");
    } else {
        for (int j = 0; j < p.num_generators() && col < 0; ++j)
            for (long long v : abel.gen_weights[static_cast<std::size_t>(j)])
                if (v != 0) { col = j; break; }
        if (col < 0) throw std::invalid_argument("no generator with nonzero image in H1_f");
    }

    IntGRMatrix f = fox_matrix(p);
    SquareMatrixData sq;
    sq.boundary_case = true;
    sq.deleted_col = col;
    sq.s = Word::generator(col);
    sq.A = IntGRMatrix(f.rows, f.cols - 1);
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0, jj = 0; j < f.cols; ++j) {
            if (j == col) continue;
            sq.A.at(i, jj++) = f.at(i, j);
        }
    return sq;
}

SquareMatrixData square_matrix_closed(const Presentation& p, int row, int col, const Word& s_prime) {
    if (p.deficiency() != 0)
        throw std::invalid_argument("closed square matrix needs deficiency zero");
    IntGRMatrix f = fox_matrix(p);
    if (row < 0 || row >= f.rows || col < 0 || col >= f.cols)
        throw std::invalid_argument("deleted row or column out of range");
    SquareMatrixData sq;
    sq.boundary_case = false;
    sq.deleted_row = row;
    sq.deleted_col = col;
    sq.s = Word::generator(col);
    sq.s_prime = s_prime;
    sq.A = IntGRMatrix(f.rows - 1, f.cols - 1);
    for (int i = 0, ii = 0; i < f.rows; ++i) {
        if (i == row) continue;
        for (int j = 0, jj = 0; j < f.cols; ++j) {
            if (j == col) continue;
            sq.A.at(ii, jj++) = f.at(i, j);
        }
        ++ii;
    }
    return sq;
}

void spinc_shift(SquareMatrixData& sq, const Word& h) {
    if (sq.A.cols == 0)
        throw std::invalid_argument("spin-c shift needs a nonempty matrix");
    Word hinv = h.inverse();
    for (int i = 0; i < sq.A.rows; ++i) sq.A.at(i, 0) = sq.A.at(i, 0).times_word(hinv);
    sq.spinc_word = sq.spinc_word * h;
}

std::string square_matrix_to_json(const SquareMatrixData& sq, const std::vector<std::string>& names) {
    nlohmann::json j;
    j["rows"] = sq.A.rows;
    j["cols"] = sq.A.cols;
    j["boundary"] = sq.boundary_case;
    j["deleted_col"] = sq.deleted_col;
    j["deleted_row"] = sq.deleted_row;
    j["s"] = sq.s.str(names);
    if (sq.s_prime) j["s_prime"] = sq.s_prime->str(names);
    j["spinc"] = sq.spinc_word.str(names);
    auto& entries = j["entries"] = nlohmann::json::array();
    for (int i = 0; i < sq.A.rows; ++i)
        for (int jj = 0; jj < sq.A.cols; ++jj) {
            const auto& e = sq.A.at(i, jj);
            if (e.is_zero()) continue;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [w, c] : e.terms()) terms.push_back({w.str(names), c});
            entries.push_back({i, jj, terms});
        }
    return j.dump(2);
}

SquareMatrixData square_matrix_from_json(const std::string& text, const std::vector<std::string>& names) {
    nlohmann::json j = nlohmann::json::parse(text);
    SquareMatrixData sq;
    sq.boundary_case = j.at("boundary").get<bool>();
    sq.deleted_col = j.at("deleted_col").get<int>();
    sq.deleted_row = j.at("deleted_row").get<int>();
    sq.s = Word::parse(j.at("s").get<std::string>(), names);
    if (j.contains("s_prime")) sq.s_prime = Word::parse(j["s_prime"].get<std::string>(), names);
    sq.spinc_word = Word::parse(j.at("spinc").get<std::string>(), names);
    sq.A = IntGRMatrix(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& ent : j.at("entries")) {
        int i = ent.at(0).get<int>(), jj = ent.at(1).get<int>();
        IntGroupRing e;
        for (const auto& term : ent.at(2))
            e.add_term(Word::parse(term.at(0).get<std::string>(), names), term.at(1).get<long long>());
        sq.A.at(i, jj) = e;
    }
    return sq;
}

}  // namespace l2t
