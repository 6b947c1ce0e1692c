#include "l2t/laurent.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace l2t {

void MultiLaurent::add_term(const Exponent& e, Cx c, double drop_tol) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (std::abs(c) <= drop_tol) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Cx(0, 0)) terms_.erase(it);
    }
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
    MultiLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
    MultiLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("arity mismatch");
    MultiLaurent r(nvars_);
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i)
                e[static_cast<std::size_t>(i)] = e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiLaurent MultiLaurent::scaled(Cx s) const {
    MultiLaurent r(nvars_);
    if (s == Cx(0, 0)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiLaurent MultiLaurent::shifted(const Exponent& sh) const {
    if (static_cast<int>(sh.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    MultiLaurent r(nvars_);
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [e1, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            e[static_cast<std::size_t>(i)] = e1[static_cast<std::size_t>(i)] + sh[static_cast<std::size_t>(i)];
        r.terms_.emplace(e, c);
    }
    return r;
}

Cx MultiLaurent::eval(const std::vector<Cx>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity mismatch");
    Cx acc(0, 0);
    for (const auto& [e, c] : terms_) {
        Cx m = c;
        for (int i = 0; i < nvars_; ++i) {
            int k = e[static_cast<std::size_t>(i)];
            m *= std::pow(point[static_cast<std::size_t>(i)], Cx(static_cast<double>(k), 0));
        }
        acc += m;
    }
    return acc;
}

MultiLaurent MultiLaurent::scale_weights(const std::vector<double>& w, double u) const {
    if (static_cast<int>(w.size()) != nvars_) throw std::invalid_argument("weight arity mismatch");
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        double dot = 0;
        for (int i = 0; i < nvars_; ++i) dot += w[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
        r.terms_.emplace(e, c * std::pow(u, dot));
    }
    return r;
}

MultiLaurent MultiLaurent::pruned(double rel_tol) const {
    double mx = max_abs_coeff();
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::abs(c) > rel_tol * mx) r.terms_.emplace(e, c);
    return r;
}

std::optional<MultiLaurent> MultiLaurent::rounded_to_int(double tol) const {
    MultiLaurent r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (std::abs(c.imag()) > tol) return std::nullopt;
        double n = std::round(c.real());
        if (std::abs(c.real() - n) > tol) return std::nullopt;
        if (n != 0.0) r.terms_.emplace(e, Cx(n, 0));
    }
    return r;
}

double MultiLaurent::max_abs_coeff() const {
    double mx = 0;
    for (const auto& [e, c] : terms_) mx = std::max(mx, std::abs(c));
    return mx;
}

double MultiLaurent::norm1() const {
    double s = 0;
    for (const auto& [e, c] : terms_) s += std::abs(c);
    return s;
}

std::string MultiLaurent::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real();
        if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
        os << ")";
        for (int i = 0; i < nvars_; ++i) {
            int k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            std::string name = static_cast<std::size_t>(i) < var_names.size()
                                   ? var_names[static_cast<std::size_t>(i)]
                                   : "z" + std::to_string(i);
            os << "*" << name;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::optional<UnivariateReduction> to_univariate(const MultiLaurent& p) {
    const int d = p.nvars();
    UnivariateReduction out;
    out.base.assign(static_cast<std::size_t>(d), 0);
    out.direction.assign(static_cast<std::size_t>(d), 0);
    if (p.is_zero()) return out;
    if (p.size() == 1) {
        out.base = p.terms().begin()->first;
        out.coeffs = {p.terms().begin()->second};
        return out;
    }

    const Exponent& e0 = p.terms().begin()->first;
    // candidate direction: gcd-reduced difference of the first two exponents
    Exponent dir(static_cast<std::size_t>(d), 0);
    {
        auto it = std::next(p.terms().begin());
        long long g = 0;
        for (int i = 0; i < d; ++i) {
            dir[static_cast<std::size_t>(i)] = it->first[static_cast<std::size_t>(i)] - e0[static_cast<std::size_t>(i)];
            g = std::gcd(g, static_cast<long long>(std::abs(dir[static_cast<std::size_t>(i)])));
        }
        for (int i = 0; i < d; ++i) dir[static_cast<std::size_t>(i)] = static_cast<int>(dir[static_cast<std::size_t>(i)] / g);
    }

    // every exponent must be e0 + k*dir for an integer k
    long long kmin = 0, kmax = 0;
    std::map<long long, Cx> along;
    for (const auto& [e, c] : p.terms()) {
        long long k = 0;
        bool have_k = false;
        for (int i = 0; i < d; ++i) {
            long long diff = e[static_cast<std::size_t>(i)] - e0[static_cast<std::size_t>(i)];
            int s = dir[static_cast<std::size_t>(i)];
            if (s == 0) {
                if (diff != 0) return std::nullopt;
            } else {
                if (diff % s != 0) return std::nullopt;
                long long kk = diff / s;
                if (have_k && kk != k) return std::nullopt;
                k = kk;
                have_k = true;
            }
        }
        along[k] = c;
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }

    for (int i = 0; i < d; ++i)
        out.base[static_cast<std::size_t>(i)] =
            e0[static_cast<std::size_t>(i)] + static_cast<int>(kmin) * dir[static_cast<std::size_t>(i)];
    out.direction = dir;
    out.coeffs.assign(static_cast<std::size_t>(kmax - kmin + 1), Cx(0, 0));
    for (const auto& [k, c] : along) out.coeffs[static_cast<std::size_t>(k - kmin)] = c;
    return out;
}

}  // namespace l2t
