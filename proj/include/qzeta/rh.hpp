#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/poly.hpp"
#include "qzeta/zeta.hpp"

namespace qzeta {

/// R(u) = t^deg(P) P(u/t): maps the circle |T| = 1/sqrt(q) to |u| = 1.
inline UniPoly rescale_to_unit_circle(const UniPoly& p, const QParameter& qp) {
    if (p.is_zero()) throw zero_polynomial("cannot rescale the zero polynomial");
    const int m = p.degree();
    std::vector<QuadElem> out(static_cast<size_t>(m) + 1, zero_like(qp.t()));
    for (int k = 0; k <= m; ++k) out[static_cast<size_t>(k)] = p.coeff(static_cast<size_t>(k)) * qp.t().pow(m - k);
    return UniPoly(std::move(out));
}

/// Signed remainder sequence; the last element of a square-free input is a
/// nonzero constant.
struct SturmChain {
    std::vector<UniPoly> polys;

    explicit SturmChain(const UniPoly& p) {
        polys.push_back(p);
        UniPoly d = p.derivative();
        if (!d.is_zero()) polys.push_back(std::move(d));
        while (polys.back().degree() >= 1) {
            UniPoly r = -(polys[polys.size() - 2] % polys.back());
            if (r.is_zero()) break;
            polys.push_back(std::move(r));
        }
    }

    int variations_at(const QuadElem& x) const {
        int count = 0, prev = 0;
        for (const auto& p : polys) {
            const int s = p.eval(x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
};

/// Distinct real roots of a square-free p in the given interval.
inline int sturm_count(const UniPoly& p, const QuadElem& lo, const QuadElem& hi, bool open_interval) {
    if (p.is_zero()) throw zero_polynomial("root counting on the zero polynomial");
    if ((hi - lo).sign() <= 0) throw error("interval endpoints out of order");
    SturmChain chain(p);
    if (chain.polys.back().degree() >= 1)
        throw not_square_free("input has a repeated root");
    if (p.degree() < 1) return 0;
    // V(lo) - V(hi) counts roots in (lo, hi]
    int count = chain.variations_at(lo) - chain.variations_at(hi);
    const bool root_at_hi = p.eval(hi).is_zero();
    const bool root_at_lo = p.eval(lo).is_zero();
    if (open_interval && root_at_hi) --count;
    if (!open_interval && root_at_lo) ++count;
    return count;
}

enum class RHReason { AllOnCircle, NotSelfInversive, SturmDeficit, UnitRootResidual };

inline const char* to_string(RHReason r) {
    switch (r) {
        case RHReason::AllOnCircle: return "AllOnCircle";
        case RHReason::NotSelfInversive: return "NotSelfInversive";
        case RHReason::SturmDeficit: return "SturmDeficit";
        case RHReason::UnitRootResidual: return "UnitRootResidual";
    }
    return "?";
}

struct RHVerdict {
    bool holds = false;
    int degree = 0;                           ///< degree of the input P
    int on_circle_count = 0;                  ///< distinct roots certified on the circle
    RHReason reason = RHReason::AllOnCircle;
    bool had_repeated_roots = false;          ///< gcd(R, R') != 1 before reduction
    std::vector<std::string> numeric_moduli;  ///< report only, never part of the verdict
};

struct NumericRoots {
    std::vector<std::complex<double>> roots;
    std::vector<double> deviations;  ///< | |root| * t - 1 | per root
    bool converged = true;
    int iterations = 0;
};

/// Simultaneous-iteration roots in double precision; a cross-check oracle
/// for reports. Accepts a decimal t so it also runs for q whose square root
/// lives outside the working field.
inline NumericRoots numeric_roots(const UniPoly& p, double t, int max_iterations = 500) {
    if (p.degree() < 1) throw zero_polynomial("numeric roots need degree >= 1");
    const int m = p.degree();
    std::vector<double> c(static_cast<size_t>(m) + 1);
    double max_abs = 0.0;
    for (int i = 0; i <= m; ++i) {
        c[static_cast<size_t>(i)] = p.coeff(static_cast<size_t>(i)).to_double();
        max_abs = std::max(max_abs, std::fabs(c[static_cast<size_t>(i)]));
    }
    for (auto& v : c) v /= max_abs;
    const double lead = c[static_cast<size_t>(m)];
    for (auto& v : c) v /= lead;

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (int i = m; i >= 0; --i) acc = acc * z + c[static_cast<size_t>(i)];
        return acc;
    };

    NumericRoots out;
    out.roots.resize(static_cast<size_t>(m));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> z(1.0, 0.0);
    for (auto& r : out.roots) {
        z *= seed;
        r = z;
    }
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        double shift = 0.0;
        for (size_t i = 0; i < out.roots.size(); ++i) {
            std::complex<double> denom = 1.0;
            for (size_t j = 0; j < out.roots.size(); ++j)
                if (j != i) denom *= out.roots[i] - out.roots[j];
            const std::complex<double> delta = eval(out.roots[i]) / denom;
            out.roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    out.iterations = iter;
    out.converged = iter < max_iterations;
    out.deviations.reserve(out.roots.size());
    for (const auto& r : out.roots) out.deviations.push_back(std::fabs(std::abs(r) * t - 1.0));
    return out;
}

inline NumericRoots numeric_roots(const UniPoly& p, const QParameter& qp, int max_iterations = 500) {
    return numeric_roots(p, qp.t().to_double(), max_iterations);
}

namespace detail {

/// S(u) = u^g C(u + 1/u) for palindromic S of even degree 2g, using the
/// basis u^j + u^-j = V_j(s): V_0 = 2, V_1 = s, V_j = s V_{j-1} - V_{j-2}.
inline UniPoly palindrome_compress(const UniPoly& s) {
    const int m = s.degree();
    const int g = m / 2;
    const QuadElem one = from_int(1, s.leading());
    UniPoly v_prev = UniPoly::constant(one + one);            // V_0
    UniPoly v_cur = UniPoly::monomial(one, 1);                // V_1
    UniPoly c = UniPoly::constant(s.coeff(static_cast<size_t>(g)));
    const UniPoly var = UniPoly::monomial(one, 1);
    for (int j = 1; j <= g; ++j) {
        c = c + s.coeff(static_cast<size_t>(g + j)) * v_cur;
        UniPoly v_next = var * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }
    return c;
}

}  // namespace detail

/// Decides exactly whether all roots of P lie on |T| = 1/sqrt(q).
/// Every sign decision is exact; the numeric moduli are attached only as a
/// report. Repeated roots never affect the verdict (square-free reduction).
inline RHVerdict rh_check_exact(const UniPoly& p, const QParameter& qp) {
    if (p.is_zero()) throw zero_polynomial("RH verdict on the zero polynomial");
    RHVerdict verdict;
    verdict.degree = p.degree();
    {
        char buf[64];
        NumericRoots nr = p.degree() >= 1 ? numeric_roots(p, qp) : NumericRoots{};
        for (const auto& r : nr.roots) {
            std::snprintf(buf, sizeof(buf), "%.12f", std::abs(r));
            verdict.numeric_moduli.emplace_back(buf);
        }
    }
    if (p.degree() == 0) {  // no roots at all
        verdict.holds = true;
        return verdict;
    }

    const UniPoly r = rescale_to_unit_circle(p, qp);
    UniPoly s = r.square_free_part();
    verdict.had_repeated_roots = s.degree() != r.degree();
    const int reduced_degree = s.degree();

    const QuadElem one = from_int(1, qp.t());
    int stripped = 0;
    for (const QuadElem& u : {one, -one}) {
        if (s.eval(u).is_zero()) {
            s = s / UniPoly(std::vector<QuadElem>{-u, one});
            ++stripped;
        }
    }
    const int m = s.degree();
    if (m == 0) {
        verdict.holds = true;
        verdict.on_circle_count = stripped;
        return verdict;
    }

    // real roots on the unit circle come in inversion-closed sets, so a
    // non-self-inversive survivor certifies an off-circle root
    const UniPoly rev = s.reversed();
    const bool proportional =
        rev.degree() == m && rev == (rev.leading() / s.leading()) * s;
    if (!proportional) {
        verdict.holds = false;
        verdict.on_circle_count = stripped;
        verdict.reason = RHReason::NotSelfInversive;
        return verdict;
    }
    if (m % 2 == 1 || !(rev.leading() == s.leading())) {
        // odd palindromic or anti-palindromic would re-admit u = +-1,
        // contradicting square-freeness after the stripping step
        verdict.holds = false;
        verdict.on_circle_count = stripped;
        verdict.reason = RHReason::UnitRootResidual;
        return verdict;
    }

    const UniPoly c = detail::palindrome_compress(s).square_free_part();
    const QuadElem two = one + one;
    const int count = sturm_count(c, -two, two, /*open_interval=*/true);
    verdict.on_circle_count = stripped + 2 * count;
    verdict.holds = verdict.on_circle_count == reduced_degree;
    verdict.reason = verdict.holds ? RHReason::AllOnCircle : RHReason::SturmDeficit;
    return verdict;
}

}  // namespace qzeta
