#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "qzeta/bihom.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/linalg.hpp"
#include "qzeta/poly.hpp"

namespace qzeta {

/// The parameter q > 0, q != 1 together with its exact square root t.
/// Half-integral powers of q are always evaluated through t.
class QParameter {
public:
    static QParameter from_t(QuadElem t) {
        if (t.sign() <= 0) throw error("t = sqrt(q) must be positive");
        if (t.is_one()) throw error("q = 1 is excluded");
        QuadElem q = t * t;
        return QParameter(std::move(t), std::move(q));
    }
    /// Fails when q is not a square in its field.
    static QParameter from_q(const QuadElem& q) {
        if (q.sign() <= 0) throw error("q must be positive");
        if (q.is_one()) throw error("q = 1 is excluded");
        auto t = sqrt_in_field(q);
        if (!t) throw error("q has no square root in Q(sqrt(" + std::to_string(q.radicand()) + "))");
        return QParameter(std::move(*t), q);
    }

    const QuadElem& t() const { return t_; }
    const QuadElem& q() const { return q_; }

    /// q^(e/2) = t^e, for any integer e (possibly negative or odd).
    QuadElem q_half_pow(long e) const { return t_.pow(e); }

    /// The MacWilliams transform (1/t) [[1, q-1], [1, -1]].
    Matrix2 sigma() const {
        const QuadElem one = from_int(1, t_);
        const QuadElem inv_t = one / t_;
        return Matrix2(inv_t, (q_ - one) / t_, inv_t, -inv_t);
    }

private:
    QParameter(QuadElem t, QuadElem q) : t_(std::move(t)), q_(std::move(q)) {}
    QuadElem t_, q_;
};

struct DualResult {
    BiHomPoly dual;        ///< W^{sigma_q}
    int d_perp;            ///< smallest positive y-power in the dual
    QuadElem leading;      ///< x^n coefficient of the dual
};

/// Applies sigma_q and reads off d_perp. The leading coefficient is
/// surfaced so callers can recognize the +-x^n cases.
inline DualResult dual_transform(const BiHomPoly& w, const QParameter& qp) {
    BiHomPoly dual = w.acted_by(qp.sigma());
    const QuadElem leading = dual.coeff(0);
    const int d_perp = dual.min_y_power();
    return DualResult{std::move(dual), d_perp, leading};
}

struct ZetaResult {
    UniPoly P;                 ///< the zeta polynomial, degree <= n - d
    int d = 0;
    int d_perp = 0;
    int two_g = 0;             ///< 2g = n - d - d_perp + 2, stored integrally
    bool functional_eq_holds = false;
};

/// Coefficient form of P(T) = P(1/(qT)) q^g T^{2g}: p_k t^{2k} = p_{2g-k} t^{2g}
/// for all k, checked exactly through powers of t.
inline bool functional_eq_check(const UniPoly& p, const QParameter& qp, int two_g) {
    if (two_g < 0) throw error("2g must be nonnegative");
    if (p.degree() > two_g) throw degree_mismatch("deg P exceeds 2g");
    for (int k = 0; 2 * k <= two_g; ++k) {
        const QuadElem lhs = p.coeff(static_cast<size_t>(k)) * qp.q_half_pow(two_g - 2 * k);
        const QuadElem rhs = p.coeff(static_cast<size_t>(two_g - k));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

/// The zeta polynomial of W: the unique P with deg P <= n - d whose
/// generating-function product matches (W - x^n)/(q - 1) at order T^(n-d).
/// Solved as an exact linear system; an optional row permutation exercises
/// the uniqueness of the solution.
inline ZetaResult zeta_poly(const BiHomPoly& w, const QParameter& qp,
                            const std::vector<size_t>* row_order = nullptr) {
    const int n = w.degree();
    const QuadElem one = from_int(1, qp.t());
    if (!(w.coeff(0) == one)) throw precondition_d("input must have leading coefficient 1");
    const int d = w.min_y_power();
    const DualResult dual = dual_transform(w, qp);
    if (!(dual.leading == one)) {
        if (dual.leading == -one)
            throw unsupported_dual_form("dual leading coefficient is -1 (formal weight enumerator)");
        throw unsupported_dual_form("dual is not of the required +-x^n form");
    }
    if (d < 2 || dual.d_perp < 2) throw precondition_d("d and d_perp must both be >= 2");

    // Coefficient of x^(n-i) y^i T^(n-d) on the left is
    //   C(n,i) [T^(i-d)] { (1-T)^(i-1) P(T) / (1-qT) },
    // equated with A_i/(q-1) for i = d..n. The i-th row only touches
    // p_0..p_{i-d}, so the system is square of size n-d+1.
    const size_t k = static_cast<size_t>(n - d) + 1;
    const QuadElem zero = zero_like(one);
    // geom[j] = q^j, the series 1/(1-qT)
    std::vector<QuadElem> geom(k, one);
    for (size_t j = 1; j < k; ++j) geom[j] = geom[j - 1] * qp.q();
    Matrix<QuadElem> rows(k, std::vector<QuadElem>(k, zero));
    std::vector<QuadElem> rhs(k, zero);
    const QuadElem q_minus_1 = qp.q() - one;
    for (size_t r = 0; r < k; ++r) {
        const int i = d + static_cast<int>(r);
        // b[m] = [T^m] (1-T)^(i-1) / (1-qT)
        std::vector<QuadElem> b(r + 1, zero);
        for (size_t m = 0; m <= r; ++m) {
            QuadElem acc = zero;
            for (size_t j = 0; j <= m; ++j) {
                const Integer sign_binom = (j % 2 == 0 ? 1 : -1) * binomial(i - 1, static_cast<long>(j));
                acc = acc + QuadElem::from_rational(Rational(sign_binom), one.context()) * geom[m - j];
            }
            b[m] = acc;
        }
        const QuadElem cni = QuadElem::from_rational(Rational(binomial(n, i)), one.context());
        for (size_t j = 0; j <= r; ++j) rows[r][j] = cni * b[r - j];
        rhs[r] = w.coeff(i) / q_minus_1;
    }
    if (row_order) {
        if (row_order->size() != k) throw error("row permutation has wrong size");
        Matrix<QuadElem> prows(k);
        std::vector<QuadElem> prhs;
        prhs.reserve(k);
        for (size_t r = 0; r < k; ++r) {
            prows[r] = std::move(rows[(*row_order)[r]]);
            prhs.push_back(std::move(rhs[(*row_order)[r]]));
        }
        rows = std::move(prows);
        rhs = std::move(prhs);
    }
    UniPoly p(solve_linear(std::move(rows), std::move(rhs)));

    ZetaResult res;
    res.d = d;
    res.d_perp = dual.d_perp;
    res.two_g = n - d - dual.d_perp + 2;
    if (!(p.eval(one) == one))
        throw consistency_error("zeta polynomial violates P(1) = 1");
    res.functional_eq_holds =
        p.degree() <= res.two_g && functional_eq_check(p, qp, res.two_g);
    res.P = std::move(p);
    return res;
}

/// The n+1 binomial-moment identities
///   sum_{i<=n-v} C(n-i, v) A_i = q^(n/2 - v) sum_{i<=v} C(n-i, n-v) A_i,
/// checked exactly by cross-multiplying powers of t.
inline bool moment_identity_check(const BiHomPoly& w, const QParameter& qp) {
    const int n = w.degree();
    const FieldContext ctx = qp.t().context();
    for (int v = 0; v <= n; ++v) {
        QuadElem lhs = QuadElem::from_rational(Rational(0), ctx);
        for (int i = 0; i <= n - v; ++i)
            lhs = lhs + QuadElem::from_rational(Rational(binomial(n - i, v)), ctx) * w.coeff(i);
        QuadElem rhs = QuadElem::from_rational(Rational(0), ctx);
        for (int i = 0; i <= v; ++i)
            rhs = rhs + QuadElem::from_rational(Rational(binomial(n - i, n - v)), ctx) * w.coeff(i);
        const long e = n - 2 * v;  // q^(n/2 - v) = t^(n - 2v)
        const QuadElem left = e >= 0 ? lhs : lhs * qp.q_half_pow(-e);
        const QuadElem right = e >= 0 ? rhs * qp.q_half_pow(e) : rhs;
        if (!(left == right)) return false;
    }
    return true;
}

}  // namespace qzeta
