#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "qzeta/matrix_group.hpp"
#include "qzeta/zeta.hpp"

using namespace qzeta;

namespace {

const FieldContext k5(5);

QuadElem qe(long a, long b = 0) { return QuadElem(Rational(a), Rational(b), k5); }

QParameter golden_q() { return QParameter::from_t(qe(1, 1)); }

Matrix2 tau() { return Matrix2(qe(1), qe(0), qe(0), qe(-1)); }

MatrixGroup preset_group() { return generate_closure({golden_q().sigma(), tau()}); }

UniPoly up(std::initializer_list<long> cs) {
    std::vector<QuadElem> v;
    for (long c : cs) v.push_back(qe(c));
    return UniPoly(std::move(v));
}

bool contains(const std::vector<Matrix2>& elems, const Matrix2& m) {
    return std::any_of(elems.begin(), elems.end(), [&](const Matrix2& e) { return e == m; });
}

}  // namespace

TEST_CASE("closure of the preset generators has order 10") {
    const MatrixGroup g = preset_group();
    CHECK(g.order() == 10);

    // the elements are exactly (tau sigma)^i tau^j
    const Matrix2 ts = tau() * golden_q().sigma();
    std::vector<Matrix2> expected;
    Matrix2 power = Matrix2::identity(k5);
    for (int i = 0; i < 5; ++i) {
        expected.push_back(power);
        expected.push_back(power * tau());
        power = power * ts;
    }
    CHECK(power == Matrix2::identity(k5));  // (tau sigma)^5 = I
    for (const auto& m : expected) CHECK(contains(g.elements, m));
}

TEST_CASE("small closures") {
    CHECK(generate_closure({Matrix2::identity(k5)}, 10).order() == 1);
    CHECK(generate_closure({tau()}, 10).order() == 2);
    const Matrix2 singular(qe(1), qe(1), qe(1), qe(1));
    CHECK_THROWS_AS(generate_closure({singular}), singular_generator);
    // an infinite (parabolic) group runs into the cap
    const Matrix2 shear(qe(1), qe(1), qe(0), qe(1));
    CHECK_THROWS_AS(generate_closure({shear}, 50), group_too_large);
}

TEST_CASE("property: groups are closed under inverse") {
    const MatrixGroup g = preset_group();
    for (const auto& m : g.elements) {
        CHECK(m * m.inverse() == Matrix2::identity(k5));
        CHECK(contains(g.elements, m.inverse()));
    }
}

TEST_CASE("molien series of the preset group") {
    const MatrixGroup g = preset_group();
    const MolienSeries phi = molien(g);
    // 1 / ((1 - x^2)(1 - x^5))
    const MolienSeries expected(up({1}), up({1, 0, -1}) * up({1, 0, 0, 0, 0, -1}));
    CHECK(phi == expected);
    CHECK(phi.num == expected.num);
    CHECK(phi.den == expected.den);
    CHECK(phi.num.eval(qe(0)) / phi.den.eval(qe(0)) == qe(1));
}

TEST_CASE("per-element molien contributions match the known partial sums") {
    const Matrix2 ts = tau() * golden_q().sigma();
    const Matrix2 ts2 = ts * ts;
    const Matrix2 ts3 = ts2 * ts;
    const Matrix2 ts4 = ts3 * ts;

    // tau sigma and (tau sigma)^4 together: 4 / (2x^2 + (1 - sqrt5) x + 2)
    const MolienSeries c14 = molien_sum({ts, ts4});
    CHECK(c14 == MolienSeries(up({4}), UniPoly({qe(2), qe(1, -1), qe(2)})));
    // (tau sigma)^2 and (tau sigma)^3: 4 / (2x^2 + (1 + sqrt5) x + 2)
    const MolienSeries c23 = molien_sum({ts2, ts3});
    CHECK(c23 == MolienSeries(up({4}), UniPoly({qe(2), qe(1, 1), qe(2)})));
    // identity: 1 / (1 - x)^2
    CHECK(molien_term(Matrix2::identity(k5)) == MolienSeries(up({1}), up({1, -1}) * up({1, -1})));
    // the five reflections (tau sigma)^i tau: 5 / (1 - x^2)
    std::vector<Matrix2> refl;
    Matrix2 power = Matrix2::identity(k5);
    for (int i = 0; i < 5; ++i) {
        refl.push_back(power * tau());
        power = power * ts;
    }
    CHECK(molien_sum(refl) == MolienSeries(up({5}), up({1, 0, -1})));

    const MolienSeries trivial = molien(generate_closure({Matrix2::identity(k5)}));
    CHECK(trivial == MolienSeries(up({1}), up({1, -1}) * up({1, -1})));
}

TEST_CASE("invariant bases match molien dimensions and the known generators") {
    const MatrixGroup g = preset_group();
    const auto dims = molien(g).taylor(21);
    for (int k = 0; k <= 20; ++k) {
        const auto basis = invariant_basis(g, k);
        CHECK(qe(static_cast<long>(basis.size())) == dims[static_cast<size_t>(k)]);
        for (const auto& f : basis)
            for (const auto& m : g.elements) CHECK(f.acted_by(m) == f);
    }
    const auto deg2 = invariant_basis(g, 2);
    REQUIRE(deg2.size() == 1);
    CHECK(deg2[0] == BiHomPoly(2, {qe(1), qe(0), qe(5, 2)}));
    const auto deg5 = invariant_basis(g, 5);
    REQUIRE(deg5.size() == 1);
    CHECK(deg5[0] == BiHomPoly(5, {qe(1), qe(0), qe(-50, -20), qe(0), qe(225, 100), qe(0)}));
    CHECK(invariant_basis(g, 3).empty());
}
