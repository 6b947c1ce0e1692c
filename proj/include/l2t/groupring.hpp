#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "l2t/homomorphism.hpp"
#include "l2t/presentation.hpp"
#include "l2t/word.hpp"

namespace l2t {

namespace detail {
inline double coeff_abs(long long v) { return static_cast<double>(v < 0 ? -v : v); }
inline double coeff_abs(const std::complex<double>& v) { return std::abs(v); }
inline bool coeff_is_zero(long long v) { return v == 0; }
inline bool coeff_is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0, 0.0); }
}  // namespace detail

/// An element of the group ring over a free group: a finite map word -> coefficient.
template <class T>
class GroupRingElt {
public:
    GroupRingElt() = default;
    GroupRingElt(T scalar) { add_term(Word(), scalar); }
    GroupRingElt(const Word& w, T coeff = T(1)) { add_term(w, coeff); }

    const std::map<Word, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, T coeff) {
        if (detail::coeff_is_zero(coeff)) return;
        auto [it, inserted] = terms_.emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    GroupRingElt operator+(const GroupRingElt& o) const {
        GroupRingElt r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    GroupRingElt operator-() const {
        GroupRingElt r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    GroupRingElt operator-(const GroupRingElt& o) const { return *this + (-o); }
    GroupRingElt operator*(const GroupRingElt& o) const {
        GroupRingElt r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
        return r;
    }
    GroupRingElt scaled(T s) const {
        GroupRingElt r;
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }
    /// Right-multiplies every term by g.
    GroupRingElt times_word(const Word& g) const {
        GroupRingElt r;
        for (const auto& [w, c] : terms_) r.add_term(w * g, c);
        return r;
    }

    bool operator==(const GroupRingElt& o) const { return terms_ == o.terms_; }

    /// l1 norm of the coefficient vector.
    double norm1() const {
        double s = 0;
        for (const auto& [w, c] : terms_) s += detail::coeff_abs(c);
        return s;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::ostringstream os;
            os << c;
            out += os.str() + "*" + w.str(names);
        }
        return out;
    }

private:
    std::map<Word, T> terms_;
};

using IntGroupRing = GroupRingElt<long long>;
using CxGroupRing = GroupRingElt<std::complex<double>>;

inline CxGroupRing to_complex(const IntGroupRing& e) {
    CxGroupRing r;
    for (const auto& [w, c] : e.terms()) r.add_term(w, std::complex<double>(static_cast<double>(c), 0.0));
    return r;
}

/// A rectangular matrix over a group ring.
template <class T>
struct GRMatrix {
    int rows = 0, cols = 0;
    std::vector<GroupRingElt<T>> entries;  // row-major

    GRMatrix() = default;
    GRMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    GroupRingElt<T>& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }
    const GroupRingElt<T>& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }

    GRMatrix operator*(const GRMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
        GRMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < o.cols; ++j) {
                GroupRingElt<T> acc;
                for (int k = 0; k < cols; ++k) acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }
};

using IntGRMatrix = GRMatrix<long long>;
using CxGRMatrix = GRMatrix<std::complex<double>>;

/// r*s times the max entry l1 norm; an upper bound for the operator norm of
/// right multiplication.
template <class T>
double norm1(const GRMatrix<T>& a) {
    double mx = 0;
    for (const auto& e : a.entries) mx = std::max(mx, e.norm1());
    return static_cast<double>(a.rows) * static_cast<double>(a.cols) * mx;
}

inline CxGRMatrix to_complex(const IntGRMatrix& a) {
    CxGRMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = to_complex(a.entries[i]);
    return r;
}

/// The twist at parameter t: each term lambda*g becomes lambda*t^phi(g)*g.
CxGRMatrix twist(const CxGRMatrix& a, const CohomClass& phi, double t, const AbelianizationData& abel);
inline CxGRMatrix twist(const IntGRMatrix& a, const CohomClass& phi, double t, const AbelianizationData& abel) {
    return twist(to_complex(a), phi, t, abel);
}

}  // namespace l2t
