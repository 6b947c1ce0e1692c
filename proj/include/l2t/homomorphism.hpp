#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2t/presentation.hpp"
#include "l2t/rational.hpp"
#include "l2t/word.hpp"

namespace l2t {

/// A permutation of {0..n-1}. Composition is left-to-right: (p*q)(x) = q(p(x)).
struct Perm {
    std::vector<int> img;

    static Perm identity(int n) {
        Perm p;
        p.img.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.img[static_cast<std::size_t>(i)] = i;
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }
    bool is_identity() const {
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != static_cast<int>(i)) return false;
        return true;
    }

    Perm operator*(const Perm& o) const {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i)
            r.img[i] = o.img[static_cast<std::size_t>(img[i])];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i)
            r.img[static_cast<std::size_t>(img[i])] = static_cast<int>(i);
        return r;
    }

    Perm pow(long long e) const {
        Perm base = e < 0 ? inverse() : *this;
        long long n = e < 0 ? -e : e;
        Perm acc = identity(degree());
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    auto operator<=>(const Perm&) const = default;
};

/// Concrete carrier for a finite quotient: each generator maps to a
/// permutation and every relator must evaluate to the identity.
struct FiniteGroupRep {
    int degree = 0;
    std::vector<Perm> gen_images;

    Perm image(const Word& w) const {
        Perm p = Perm::identity(degree);
        for (const Letter& l : w.letters())
            p = p * gen_images.at(static_cast<std::size_t>(l.gen)).pow(l.exp);
        return p;
    }

    void validate(const Presentation& p) const;
};

/// A homomorphism pi -> Q inside H x Z^d: optional finite (permutation) part
/// together with an abelian weight map.
struct QuotientHom {
    const Presentation* presentation = nullptr;
    std::optional<FiniteGroupRep> finite_part;
    std::vector<std::vector<long long>> weights;  // per generator, vector in Z^d
    bool is_large = false;

    int abelian_rank() const { return weights.empty() ? 0 : static_cast<int>(weights[0].size()); }

    std::vector<long long> weight_of(const Word& w) const {
        std::vector<long long> v(static_cast<std::size_t>(abelian_rank()), 0);
        for (const Letter& l : w.letters()) {
            const auto& gw = weights.at(static_cast<std::size_t>(l.gen));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += l.exp * gw[i];
        }
        return v;
    }

    Perm perm_of(const Word& w) const {
        if (!finite_part) return Perm::identity(1);
        return finite_part->image(w);
    }

    /// Throws unless every relator maps to (identity, 0).
    void validate() const;

    /// The abelianization itself, as a quotient hom (trivial finite part).
    static QuotientHom abelian(const Presentation& p, const AbelianizationData& a);
};

enum class LargeFailure { None, RankMismatch, WeightMismatch };

struct LargeCheck {
    bool ok = false;
    LargeFailure failure = LargeFailure::None;
    std::string detail;
};

/// True iff the Z^d weights of h reproduce the projection to H1_f up to a
/// unimodular change of basis.
LargeCheck check_large(QuotientHom& h, const AbelianizationData& abel);

/// An element of H^1 with rational coefficients, in the basis of H1_f.
struct CohomClass {
    std::vector<Rat> weights;

    int dim() const { return static_cast<int>(weights.size()); }

    Rat pair_weights(const std::vector<long long>& v) const {
        if (v.size() != weights.size()) throw std::invalid_argument("cohomology class dimension mismatch");
        Rat r;
        for (std::size_t i = 0; i < v.size(); ++i) r += weights[i] * Rat(v[i]);
        return r;
    }
};

/// phi(w) through the abelianization.
Rat pair(const CohomClass& phi, const Word& w, const AbelianizationData& a);

/// Determinant of a small integer matrix (Bareiss).
long long int_det(std::vector<std::vector<long long>> m);

/// Canonical row Hermite normal form: echelon with positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
std::vector<std::vector<long long>> hnf_rows(std::vector<std::vector<long long>> m);

}  // namespace l2t
