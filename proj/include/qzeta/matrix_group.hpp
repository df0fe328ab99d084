#pragma once

#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "qzeta/bihom.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/linalg.hpp"
#include "qzeta/poly.hpp"
#include "qzeta/power_series.hpp"

namespace qzeta {

/// Finite closure of 2x2 generators: contains the identity, closed under
/// products and inverses, duplicate-free, in BFS discovery order.
struct MatrixGroup {
    std::vector<Matrix2> elements;
    std::vector<Matrix2> generators;
    size_t order() const { return elements.size(); }
};

namespace detail {
struct Matrix2Less {
    bool operator()(const Matrix2& x, const Matrix2& y) const { return order_cmp(x, y) < 0; }
};
}  // namespace detail

inline MatrixGroup generate_closure(std::vector<Matrix2> generators, size_t cap = 10000) {
    if (generators.empty()) throw error("need at least one generator");
    for (const auto& g : generators)
        if (g.det().is_zero()) throw singular_generator("generator is singular");

    const FieldContext ctx = generators.front().a().context();
    std::map<Matrix2, bool, detail::Matrix2Less> seen;
    std::deque<Matrix2> frontier;
    std::vector<Matrix2> elements;
    auto visit = [&](const Matrix2& m) {
        if (seen.emplace(m, true).second) {
            if (elements.size() + 1 > cap)
                throw group_too_large("closure exceeded cap of " + std::to_string(cap));
            elements.push_back(m);
            frontier.push_back(m);
        }
    };
    visit(Matrix2::identity(ctx));
    for (const auto& g : generators) visit(g);
    while (!frontier.empty()) {
        const Matrix2 m = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) visit(m * g);
    }
    return {std::move(elements), std::move(generators)};
}

/// Rational function num/den in lowest terms with a monic denominator.
/// Holds Molien series and the per-element terms they are summed from.
struct MolienSeries {
    UniPoly num, den;

    MolienSeries(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    friend MolienSeries operator+(const MolienSeries& x, const MolienSeries& y) {
        return MolienSeries(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend MolienSeries operator*(const QuadElem& s, const MolienSeries& x) {
        return MolienSeries(s * x.num, x.den);
    }
    friend bool operator==(const MolienSeries& x, const MolienSeries& y) {
        return x.num * y.den == y.num * x.den;
    }

    /// Taylor coefficients at 0 up to (excluding) `order`.
    std::vector<QuadElem> taylor(size_t order) const {
        const QuadElem like = den.coeff(0);
        auto ds = PowerSeries<QuadElem>::from_poly(den, order, like);
        auto ns = PowerSeries<QuadElem>::from_poly(num, order, like);
        return ns.mul(ds.reciprocal()).coeffs();
    }

private:
    void normalize() {
        if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
        UniPoly g = UniPoly::gcd(num, den);
        if (!num.is_zero() && g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        const QuadElem lead = den.leading();
        num = num.scaled_by_inverse(lead);
        den = den.scaled_by_inverse(lead);
    }
};

/// 1 / det(I - lambda * A), the one-element Molien contribution.
inline MolienSeries molien_term(const Matrix2& m) {
    const QuadElem one = from_int(1, m.a());
    const UniPoly den(std::vector<QuadElem>{one, -m.trace(), m.det()});
    return MolienSeries(UniPoly::constant(one), den);
}

inline MolienSeries molien_sum(const std::vector<Matrix2>& elements) {
    if (elements.empty()) throw error("empty element list");
    MolienSeries acc = molien_term(elements.front());
    for (size_t i = 1; i < elements.size(); ++i) acc = acc + molien_term(elements[i]);
    return acc;
}

/// Phi(lambda) = (1/|G|) sum over G of 1/det(I - lambda A).
inline MolienSeries molien(const MatrixGroup& group) {
    MolienSeries sum = molien_sum(group.elements);
    const QuadElem inv_order =
        QuadElem::from_rational(Rational(1, static_cast<unsigned long>(group.order())),
                                group.elements.front().a().context());
    return inv_order * sum;
}

/// Group average of f; projects onto the invariant subspace.
inline BiHomPoly reynolds(const MatrixGroup& group, const BiHomPoly& f) {
    BiHomPoly acc = f.acted_by(group.elements.front());
    for (size_t i = 1; i < group.elements.size(); ++i) acc = acc + f.acted_by(group.elements[i]);
    const QuadElem inv_order = QuadElem::from_rational(
        Rational(1, static_cast<unsigned long>(group.order())), f.coeffs().front().context());
    return inv_order * acc;
}

/// Basis of the degree-d invariant subspace: Reynolds averages of the
/// monomials, reduced to canonical (RREF) rows.
inline std::vector<BiHomPoly> invariant_basis(const MatrixGroup& group, int degree) {
    if (degree < 0) throw error("negative degree");
    const FieldContext ctx = group.elements.front().a().context();
    const QuadElem one = QuadElem::from_rational(Rational(1), ctx);
    Matrix<QuadElem> rows;
    for (int i = 0; i <= degree; ++i) {
        const BiHomPoly avg = reynolds(group, BiHomPoly::monomial(degree, i, one));
        if (!avg.is_zero()) rows.push_back(avg.coeffs());
    }
    if (rows.empty()) return {};
    const auto pivots = rref(rows);
    std::vector<BiHomPoly> basis;
    for (size_t r = 0; r < pivots.size(); ++r) basis.emplace_back(degree, rows[r]);
    return basis;
}

}  // namespace qzeta
