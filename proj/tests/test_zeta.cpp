#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qzeta/matrix_group.hpp"
#include "qzeta/power_series.hpp"
#include "qzeta/zeta.hpp"

using namespace qzeta;

namespace {

const FieldContext k5(5);
const FieldContext k2(2);

QuadElem qe(long a, long b = 0) { return QuadElem(Rational(a), Rational(b), k5); }
QuadElem qr(const std::string& a, const std::string& b) {
    return QuadElem(parse_rational(a), parse_rational(b), k5);
}

QParameter golden_q() { return QParameter::from_t(qe(1, 1)); }

BiHomPoly w2() { return BiHomPoly(2, {qe(1), qe(0), qe(5, 2)}); }
BiHomPoly psi5() { return BiHomPoly(5, {qe(1), qe(0), qe(-50, -20), qe(0), qe(225, 100), qe(0)}); }
BiHomPoly w10e() {
    const QuadElem f45 = qr("4/5", "0");
    const QuadElem f15 = qr("1/5", "0");
    return f45 * w2().pow(5) + f15 * psi5().pow(2);
}

BiHomPoly w2q(const QParameter& qp) {
    const QuadElem one = from_int(1, qp.t());
    return BiHomPoly(2, {one, zero_like(one), qp.q() - one});
}

/// Independent route: expand P(T) T^(n-i) (1-T)^(i-1) / (1-qT) as a series
/// and compare its T^(n-d) coefficient with A_i/(q-1) for every i.
bool series_route_confirms(const BiHomPoly& w, const QParameter& qp, const UniPoly& p) {
    const int n = w.degree();
    const int d = w.min_y_power();
    const QuadElem one = from_int(1, qp.t());
    const size_t order = static_cast<size_t>(n) + 2;
    const auto inv_1qt =
        PowerSeries<QuadElem>::from_poly(UniPoly({one, -qp.q()}), order, one).reciprocal();
    const auto inv_1t =
        PowerSeries<QuadElem>::from_poly(UniPoly({one, -one}), order, one).reciprocal();
    const auto ps = PowerSeries<QuadElem>::from_poly(p, order, one);
    for (int i = 0; i <= n; ++i) {
        // C(n,i) T^(n-i) (1-T)^i  * P/((1-T)(1-qT)); we need [T^(n-d)]
        auto acc = ps.mul(inv_1qt).mul(inv_1t);
        const UniPoly one_minus_t({one, -one});
        for (int j = 0; j < i; ++j)
            acc = acc.mul(PowerSeries<QuadElem>::from_poly(one_minus_t, order, one));
        const int target = n - d - (n - i);
        QuadElem lhs = zero_like(one);
        if (target >= 0)
            lhs = QuadElem::from_rational(Rational(binomial(n, i)), one.context()) *
                  acc.coeff_at(static_cast<size_t>(target));
        const QuadElem rhs =
            (i == 0 ? zero_like(one) : w.coeff(i)) / (qp.q() - one);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("qparameter construction") {
    const QParameter qp = golden_q();
    CHECK(qp.q() == qe(6, 2));
    CHECK(QParameter::from_q(qe(6, 2)).t() == qe(1, 1));
    CHECK_THROWS(QParameter::from_t(qe(1)));
    CHECK_THROWS(QParameter::from_t(qe(-2)));
    CHECK_THROWS(QParameter::from_q(qe(2)));  // sqrt 2 not in Q(sqrt 5)
    CHECK(QParameter::from_q(qe(5)).t() == qe(0, 1));
}

TEST_CASE("dual transform fixes the invariants") {
    const QParameter qp = golden_q();
    for (const BiHomPoly& f : {w2(), psi5(), w10e()}) {
        const DualResult dual = dual_transform(f, qp);
        CHECK(dual.dual == f);
        CHECK(dual.leading == qe(1));
    }
    CHECK(dual_transform(w10e(), qp).d_perp == 4);
    CHECK(dual_transform(w2(), qp).d_perp == 2);

    // W_{2,q} is sigma_q-invariant for any q
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(1, 30);
    for (int i = 0; i < 40; ++i) {
        QuadElem t = QuadElem(Rational(num(rng), 7), Rational(num(rng), 11), k5);
        if (t.sign() < 0) t = -t;
        if (t.sign() == 0 || t.is_one() || (t * t).is_one()) continue;
        const QParameter qp2 = QParameter::from_t(t);
        CHECK(dual_transform(w2q(qp2), qp2).dual == w2q(qp2));
    }

    // the classical e8-shape enumerator at q = 2 is self-dual
    const QuadElem one2 = QuadElem::from_rational(Rational(1), k2);
    const QuadElem zero2 = zero_like(one2);
    const BiHomPoly e8(8, {one2, zero2, zero2, zero2, QuadElem::from_rational(Rational(14), k2),
                           zero2, zero2, zero2, one2});
    const QParameter q2 = QParameter::from_t(QuadElem::sqrt_d(k2));
    CHECK(dual_transform(e8, q2).dual == e8);
}

TEST_CASE("zeta polynomial of the degree-10 extremal invariant") {
    const ZetaResult z = zeta_poly(w10e(), golden_q());
    const QuadElem seventh = qr("1/7", "0");
    const UniPoly expected(std::vector<QuadElem>{
        seventh * qe(5, 2), seventh * qe(-30, -14), seventh * qe(-168, -76),
        seventh * qe(-320, -144), seventh * qe(520, 232)});
    CHECK(z.P == expected);
    CHECK(z.d == 4);
    CHECK(z.d_perp == 4);
    CHECK(z.two_g == 4);
    CHECK(z.functional_eq_holds);
    CHECK(z.P.eval(qe(1)) == qe(1));
    // exact evaluation at 99/100
    const QuadElem v = z.P.eval(qr("99/100", "0"));
    CHECK(v == QuadElem(parse_rational("-122341/2500000"), parse_rational("-40154771/87500000"), k5));
    CHECK(v.sign() == -1);
    CHECK(series_route_confirms(w10e(), golden_q(), z.P));
}

TEST_CASE("zeta polynomial of psi5 equals the factored product") {
    const ZetaResult z = zeta_poly(psi5(), golden_q());
    // -((2+sqrt5)/4) (4T - 1 + sqrt5)(8T^2 - 4 sqrt5 T + 3 - sqrt5)
    const UniPoly lin({qe(-1, 1), qe(4)});
    const UniPoly quad({qe(3, -1), qe(0, -4), qe(8)});
    const QuadElem scale = -(qe(2, 1)) / qe(4);
    const UniPoly expected = scale * (lin * quad);
    CHECK(z.P == expected);
    CHECK(z.d == 2);
    CHECK(z.two_g == 3);  // g = 3/2, exercised through t^3
    CHECK(z.functional_eq_holds);
    CHECK(series_route_confirms(psi5(), golden_q(), z.P));
}

TEST_CASE("constant zeta polynomial for W_{2,q}") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> num(2, 20);
    for (int i = 0; i < 30; ++i) {
        QuadElem t(Rational(num(rng), 3), Rational(num(rng), 5), k5);
        const QParameter qp = QParameter::from_t(t);
        const ZetaResult z = zeta_poly(w2q(qp), qp);
        CHECK(z.P == UniPoly::constant(from_int(1, t)));
        CHECK(z.two_g == 0);
        CHECK(z.functional_eq_holds);
    }
}

TEST_CASE("hand-solved control: x^8 + 14 x^4 y^4 + y^8 at q = 2") {
    const QuadElem one = QuadElem::from_rational(Rational(1), k2);
    const QuadElem zero = zero_like(one);
    const BiHomPoly e8(8, {one, zero, zero, zero, QuadElem::from_rational(Rational(14), k2), zero,
                           zero, zero, one});
    const QParameter q2 = QParameter::from_t(QuadElem::sqrt_d(k2));
    const ZetaResult z = zeta_poly(e8, q2);
    const Rational fifth(1, 5);
    const UniPoly expected(std::vector<QuadElem>{
        QuadElem::from_rational(fifth, k2), QuadElem::from_rational(2 * fifth, k2),
        QuadElem::from_rational(2 * fifth, k2)});
    CHECK(z.P == expected);
    CHECK(z.d == 4);
    CHECK(z.two_g == 2);
    CHECK(z.functional_eq_holds);
    CHECK(series_route_confirms(e8, q2, z.P));
}

TEST_CASE("precondition d >= 2") {
    const QParameter qp = golden_q();
    // x^2 + x y + y^2 has d = 1
    const BiHomPoly bad(2, {qe(1), qe(1), qe(1)});
    CHECK_THROWS_AS(zeta_poly(bad, qp), precondition_d);
    // x^4 + y^4 at q = 3: d = 4 but d_perp = 1
    const QParameter q9 = QParameter::from_t(qe(3));
    const BiHomPoly x4y4(4, {qe(1), qe(0), qe(0), qe(0), qe(1)});
    CHECK_THROWS_AS(zeta_poly(x4y4, q9), precondition_d);
}

TEST_CASE("functional equation checker") {
    const QParameter qp = golden_q();
    const ZetaResult z10 = zeta_poly(w10e(), qp);
    CHECK(functional_eq_check(z10.P, qp, 4));
    const ZetaResult z5 = zeta_poly(psi5(), qp);
    CHECK(functional_eq_check(z5.P, qp, 3));
    // T + 3 at q = 4 with 2g = 1 fails: 3 != 2
    const QParameter q4 = QParameter::from_t(qe(2));
    CHECK(!functional_eq_check(UniPoly({qe(3), qe(1)}), q4, 1));
    // T + 2 at q = 4 with 2g = 1 holds: p_0 = t p_1
    CHECK(functional_eq_check(UniPoly({qe(2), qe(1)}), q4, 1));
    CHECK_THROWS_AS(functional_eq_check(UniPoly({qe(1), qe(1), qe(1)}), q4, 1), degree_mismatch);
}

TEST_CASE("property: uniqueness under row permutations") {
    const QParameter qp = golden_q();
    std::mt19937_64 rng(23);
    const ZetaResult base = zeta_poly(w10e(), qp);
    std::vector<size_t> order(static_cast<size_t>(w10e().degree() - base.d) + 1);
    std::iota(order.begin(), order.end(), size_t{0});
    for (int i = 0; i < 200; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(zeta_poly(w10e(), qp, &order).P == base.P);
    }
}

TEST_CASE("moment identities") {
    const QParameter qp = golden_q();
    CHECK(moment_identity_check(w10e(), qp));
    CHECK(moment_identity_check(psi5(), qp));
    CHECK(moment_identity_check(w2(), qp));
    const BiHomPoly not_inv(2, {qe(1), qe(0), qe(1)});  // x^2 + y^2
    CHECK(!moment_identity_check(not_inv, qp));
}

TEST_CASE("property: moment identities characterize sigma-invariance") {
    const QParameter qp = golden_q();
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> le(0, 3);
    std::uniform_int_distribution<long> noise(1, 9);
    for (int i = 0; i < 60; ++i) {
        // random invariant: same-degree mix of W2^a psi5^b with unit leading term
        const int b2 = le(rng) % 2;
        const int a = le(rng) + (b2 == 0 ? 1 : 0);
        const int deg = 2 * a + 5 * b2;
        BiHomPoly w = w2().pow(a) * psi5().pow(b2);
        if (deg % 10 == 0 && deg > 0) {
            // two basis elements available: blend them, keep leading 1
            const BiHomPoly other = (deg == 10) ? psi5().pow(2) : w2().pow(deg / 2);
            const QuadElem lam = qr("1/3", "0");
            w = lam * w + (qe(1) - lam) * other;
        }
        CHECK(moment_identity_check(w, qp) == (dual_transform(w, qp).dual == w));
        CHECK(moment_identity_check(w, qp));
        // perturb one even coefficient: invariance and moments break together
        std::vector<QuadElem> c = w.coeffs();
        c[2] = c[2] + qe(noise(rng));
        const BiHomPoly wp(w.degree(), c);
        CHECK(moment_identity_check(wp, qp) == (dual_transform(wp, qp).dual == wp));
    }
}
