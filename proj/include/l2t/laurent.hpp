#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace l2t {

using Cx = std::complex<double>;
using Exponent = std::vector<int>;

/// A Laurent polynomial in nvars commuting variables with complex coefficients.
class MultiLaurent {
public:
    MultiLaurent() = default;
    explicit MultiLaurent(int nvars) : nvars_(nvars) {}

    static MultiLaurent constant(int nvars, Cx c) {
        MultiLaurent p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static MultiLaurent monomial(int nvars, const Exponent& e, Cx c = Cx(1, 0)) {
        MultiLaurent p(nvars);
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exponent, Cx>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, Cx c, double drop_tol = 0.0);

    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    MultiLaurent scaled(Cx s) const;
    MultiLaurent shifted(const Exponent& e) const;  // multiply by z^e

    Cx eval(const std::vector<Cx>& point) const;

    /// Substitutes z_i -> u^{w_i} z_i. Used to turn the twisted determinant at
    /// parameter u into an untwisted Mahler measure.
    MultiLaurent scale_weights(const std::vector<double>& w, double u) const;

    /// Drops terms with |coeff| <= tol relative to the largest coefficient.
    MultiLaurent pruned(double rel_tol) const;

    /// Rounds every coefficient to the nearest integer; fails if any coefficient
    /// is farther than tol from an integer or has imaginary part above tol.
    std::optional<MultiLaurent> rounded_to_int(double tol) const;

    double max_abs_coeff() const;
    double norm1() const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_ = 0;
    std::map<Exponent, Cx> terms_;
};

/// Univariate view of a Laurent polynomial whose support lies on a line:
/// p(z) = z^offset * poly(z^step-direction), as coefficients of the reduced
/// single-variable polynomial q with q(0) != 0 implied by low_order handling.
struct UnivariateReduction {
    Exponent base;              // exponent of the lowest term along the line
    Exponent direction;         // primitive step vector in Z^d
    std::vector<Cx> coeffs;     // q_0..q_n with p = z^base * sum q_k z^(k*direction)
};

/// Succeeds iff the support of p is contained in a line in Z^d. Always succeeds
/// for 0 or 1 terms and for nvars == 1.
std::optional<UnivariateReduction> to_univariate(const MultiLaurent& p);

/// A matrix of Laurent polynomials.
struct LaurentMatrix {
    int n = 0;  // square
    int nvars = 0;
    std::vector<MultiLaurent> entries;  // row-major

    LaurentMatrix() = default;
    LaurentMatrix(int n_, int nvars_)
        : n(n_), nvars(nvars_),
          entries(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), MultiLaurent(nvars_)) {}

    MultiLaurent& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
    const MultiLaurent& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
};

}  // namespace l2t
