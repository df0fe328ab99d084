#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/quad_field.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

/// Dense univariate polynomial over an exact field K (QuadElem or Rational).
/// Coefficients ascend by power; trailing zeros are trimmed; the zero
/// polynomial has an empty coefficient list and degree() == -1.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly monomial(K v, size_t k) {
        std::vector<K> c(k + 1, zero_like(v));
        c[k] = std::move(v);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K{}; }
    const K& leading() const {
        if (c_.empty()) throw zero_polynomial("leading coefficient of zero polynomial");
        return c_.back();
    }

    K eval(const K& x) const {
        if (c_.empty()) return zero_like(x);
        K acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<K> out(std::max(p.c_.size(), q.c_.size()), K{});
        for (size_t i = 0; i < out.size(); ++i) {
            if (i < p.c_.size() && i < q.c_.size()) out[i] = p.c_[i] + q.c_[i];
            else if (i < p.c_.size()) out[i] = p.c_[i];
            else out[i] = q.c_[i];
        }
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& p) {
        std::vector<K> out = p.c_;
        for (auto& v : out) v = -v;
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<K> out(p.c_.size() + q.c_.size() - 1, zero_like(p.c_[0]));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) out[i + j] = out[i + j] + p.c_[i] * q.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> out = p.c_;
        for (auto& v : out) v = s * v;
        return Poly(std::move(out));
    }
    Poly scaled_by_inverse(const K& s) const {
        std::vector<K> out = c_;
        for (auto& v : out) v = v / s;
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& p, const Poly& q) {
        if (p.c_.size() != q.c_.size()) return false;
        for (size_t i = 0; i < p.c_.size(); ++i)
            if (!(p.c_[i] == q.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> out(c_.size() - 1, K{});
        for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = from_int(static_cast<long>(i), c_[i]) * c_[i];
        return Poly(std::move(out));
    }

    struct DivMod {
        Poly quotient, remainder;
    };
    DivMod divmod(const Poly& divisor) const {
        if (divisor.is_zero()) throw division_by_zero("polynomial division by zero");
        Poly rem = *this;
        if (rem.degree() < divisor.degree()) return {Poly(), rem};
        std::vector<K> q(static_cast<size_t>(rem.degree() - divisor.degree()) + 1, zero_like(divisor.leading()));
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            const size_t shift = static_cast<size_t>(rem.degree() - divisor.degree());
            const K factor = rem.leading() / divisor.leading();
            q[shift] = factor;
            std::vector<K> next = rem.c_;
            for (size_t j = 0; j < divisor.c_.size(); ++j)
                next[shift + j] = next[shift + j] - factor * divisor.c_[j];
            next.resize(next.size() - 1);  // leading term cancels exactly
            rem = Poly(std::move(next));
        }
        return {Poly(std::move(q)), rem};
    }
    Poly operator/(const Poly& d) const { return divmod(d).quotient; }
    Poly operator%(const Poly& d) const { return divmod(d).remainder; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled_by_inverse(leading());
    }

    /// Monic gcd (zero if both inputs are zero).
    static Poly gcd(Poly p, Poly q) {
        while (!q.is_zero()) {
            Poly r = p % q;
            p = std::move(q);
            q = std::move(r);
        }
        return p.monic();
    }

    /// p / gcd(p, p'), monic: same roots, all simple.
    Poly square_free_part() const {
        if (is_zero()) throw zero_polynomial("square-free part of zero polynomial");
        if (degree() == 0) return Poly::constant(from_int(1, c_[0]));
        Poly g = gcd(*this, derivative());
        return (*this / g).monic();
    }

    Poly pow(unsigned long e) const {
        if (e == 0) {
            if (is_zero()) throw zero_polynomial("0^0 polynomial power");
            return Poly::constant(from_int(1, c_[0]));
        }
        Poly result = *this;
        for (unsigned long i = 1; i < e; ++i) result = result * *this;
        return result;
    }

    /// Coefficient reversal: u^deg * p(1/u).
    Poly reversed() const {
        std::vector<K> out(c_.rbegin(), c_.rend());
        return Poly(std::move(out));
    }

    std::string str(const std::string& var = "T") const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (is_zero_value(c_[i]) && c_.size() > 1) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeff_str(c_[i]) + ")";
            if (i > 0) out += "*" + var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

using UniPoly = Poly<QuadElem>;
using TPoly = Poly<Rational>;

/// Maps a polynomial in Q[t] into Q(sqrt(D)) coefficients evaluated at t.
inline QuadElem eval_tpoly(const TPoly& p, const QuadElem& t) {
    QuadElem acc = zero_like(t);
    for (size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * t + QuadElem::from_rational(p.coeffs()[i], t.context());
    return acc;
}

/// Lifts a rational polynomial into Q(sqrt(D))[T].
inline UniPoly lift_tpoly(const TPoly& p, const FieldContext& ctx) {
    std::vector<QuadElem> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.push_back(QuadElem::from_rational(r, ctx));
    return UniPoly(std::move(c));
}

}  // namespace qzeta
