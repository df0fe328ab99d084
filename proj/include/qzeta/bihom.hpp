#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/quad_field.hpp"

namespace qzeta {

/// 2x2 matrix over a quadratic field.
class Matrix2 {
public:
    Matrix2(QuadElem a, QuadElem b, QuadElem c, QuadElem d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    static Matrix2 identity(const FieldContext& ctx) {
        const QuadElem one = QuadElem::from_rational(Rational(1), ctx);
        const QuadElem zero = QuadElem::from_rational(Rational(0), ctx);
        return Matrix2(one, zero, zero, one);
    }

    const QuadElem& a() const { return a_; }
    const QuadElem& b() const { return b_; }
    const QuadElem& c() const { return c_; }
    const QuadElem& d() const { return d_; }

    QuadElem det() const { return a_ * d_ - b_ * c_; }
    QuadElem trace() const { return a_ + d_; }

    Matrix2 inverse() const {
        const QuadElem dt = det();
        if (dt.is_zero()) throw singular_generator("matrix is singular");
        return Matrix2(d_ / dt, -(b_ / dt), -(c_ / dt), a_ / dt);
    }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return Matrix2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                       x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
    }
    friend bool operator==(const Matrix2& x, const Matrix2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Matrix2& x, const Matrix2& y) { return !(x == y); }

    friend int order_cmp(const Matrix2& x, const Matrix2& y) {
        if (int c = order_cmp(x.a_, y.a_); c != 0) return c;
        if (int c = order_cmp(x.b_, y.b_); c != 0) return c;
        if (int c = order_cmp(x.c_, y.c_); c != 0) return c;
        return order_cmp(x.d_, y.d_);
    }

private:
    QuadElem a_, b_, c_, d_;
};

/// Homogeneous bivariate polynomial of degree n, stored by y-power:
/// coeff(i) multiplies x^(n-i) y^i.
class BiHomPoly {
public:
    BiHomPoly(int n, std::vector<QuadElem> coeffs) : n_(n), a_(std::move(coeffs)) {
        if (n_ < 0 || a_.size() != static_cast<size_t>(n_) + 1)
            throw error("homogeneous polynomial needs n+1 coefficients");
    }
    static BiHomPoly x_power(int n, const FieldContext& ctx) {
        std::vector<QuadElem> c(static_cast<size_t>(n) + 1, QuadElem::from_rational(Rational(0), ctx));
        c[0] = QuadElem::from_rational(Rational(1), ctx);
        return BiHomPoly(n, std::move(c));
    }
    static BiHomPoly one(const FieldContext& ctx) {
        return BiHomPoly(0, {QuadElem::from_rational(Rational(1), ctx)});
    }
    static BiHomPoly monomial(int n, int y_power, QuadElem coeff) {
        std::vector<QuadElem> c(static_cast<size_t>(n) + 1, zero_like(coeff));
        c[static_cast<size_t>(y_power)] = std::move(coeff);
        return BiHomPoly(n, std::move(c));
    }

    int degree() const { return n_; }
    const QuadElem& coeff(int i) const { return a_[static_cast<size_t>(i)]; }
    const std::vector<QuadElem>& coeffs() const { return a_; }
    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// Smallest i >= 1 with coeff(i) != 0.
    int min_y_power() const {
        for (int i = 1; i <= n_; ++i)
            if (!a_[static_cast<size_t>(i)].is_zero()) return i;
        throw no_such_term("no nonzero coefficient beyond x^n");
    }

    /// True iff every nonzero term has an even y-power.
    bool divisible_by_two() const {
        for (int i = 1; i <= n_; i += 2)
            if (!a_[static_cast<size_t>(i)].is_zero()) return false;
        return true;
    }

    /// f^m(x, y) = f(a x + b y, c x + d y); homogeneous degree is preserved.
    BiHomPoly acted_by(const Matrix2& m) const {
        const QuadElem zero = zero_like(m.a());
        const QuadElem one = from_int(1, m.a());
        // powers of the two substituted linear forms, as coefficient rows
        std::vector<std::vector<QuadElem>> top(static_cast<size_t>(n_) + 1), bot(static_cast<size_t>(n_) + 1);
        top[0] = {one};
        bot[0] = {one};
        for (int k = 1; k <= n_; ++k) {
            top[k] = mul_linear(top[k - 1], m.a(), m.b(), zero);
            bot[k] = mul_linear(bot[k - 1], m.c(), m.d(), zero);
        }
        std::vector<QuadElem> out(static_cast<size_t>(n_) + 1, zero);
        for (int i = 0; i <= n_; ++i) {
            if (a_[static_cast<size_t>(i)].is_zero()) continue;
            const auto& p = top[static_cast<size_t>(n_ - i)];
            const auto& q = bot[static_cast<size_t>(i)];
            for (size_t j = 0; j < p.size(); ++j) {
                if (p[j].is_zero()) continue;
                const QuadElem pj = a_[static_cast<size_t>(i)] * p[j];
                for (size_t k = 0; k < q.size(); ++k) out[j + k] = out[j + k] + pj * q[k];
            }
        }
        return BiHomPoly(n_, std::move(out));
    }

    friend BiHomPoly operator+(const BiHomPoly& f, const BiHomPoly& g) {
        f.check_same_degree(g);
        std::vector<QuadElem> out = f.a_;
        for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + g.a_[i];
        return BiHomPoly(f.n_, std::move(out));
    }
    friend BiHomPoly operator-(const BiHomPoly& f, const BiHomPoly& g) {
        f.check_same_degree(g);
        std::vector<QuadElem> out = f.a_;
        for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] - g.a_[i];
        return BiHomPoly(f.n_, std::move(out));
    }
    friend BiHomPoly operator*(const QuadElem& s, const BiHomPoly& f) {
        std::vector<QuadElem> out = f.a_;
        for (auto& v : out) v = s * v;
        return BiHomPoly(f.n_, std::move(out));
    }
    friend BiHomPoly operator*(const BiHomPoly& f, const BiHomPoly& g) {
        std::vector<QuadElem> out(static_cast<size_t>(f.n_ + g.n_) + 1, zero_like(f.a_[0]));
        for (size_t i = 0; i < f.a_.size(); ++i) {
            if (f.a_[i].is_zero()) continue;
            for (size_t j = 0; j < g.a_.size(); ++j) out[i + j] = out[i + j] + f.a_[i] * g.a_[j];
        }
        return BiHomPoly(f.n_ + g.n_, std::move(out));
    }
    BiHomPoly pow(unsigned long e) const {
        if (e == 0) return BiHomPoly::one(a_[0].context());
        BiHomPoly result = *this;
        for (unsigned long i = 1; i < e; ++i) result = result * *this;
        return result;
    }

    QuadElem eval(const QuadElem& x, const QuadElem& y) const {
        QuadElem acc = zero_like(x);
        for (int i = 0; i <= n_; ++i)
            acc = acc + a_[static_cast<size_t>(i)] * x.pow(n_ - i) * y.pow(i);
        return acc;
    }

    friend bool operator==(const BiHomPoly& f, const BiHomPoly& g) {
        return f.n_ == g.n_ && f.a_ == g.a_;
    }
    friend bool operator!=(const BiHomPoly& f, const BiHomPoly& g) { return !(f == g); }

    std::string str() const {
        std::string out;
        for (int i = 0; i <= n_; ++i) {
            const auto& c = a_[static_cast<size_t>(i)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (n_ - i > 0) out += "*x^" + std::to_string(n_ - i);
            if (i > 0) out += "*y^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_same_degree(const BiHomPoly& g) const {
        if (n_ != g.n_) throw error("mixed homogeneous degrees");
    }
    // row * (alpha*x + beta*y): one step of binomial expansion
    static std::vector<QuadElem> mul_linear(const std::vector<QuadElem>& row, const QuadElem& alpha,
                                            const QuadElem& beta, const QuadElem& zero) {
        std::vector<QuadElem> out(row.size() + 1, zero);
        for (size_t j = 0; j < row.size(); ++j) {
            out[j] = out[j] + row[j] * alpha;
            out[j + 1] = out[j + 1] + row[j] * beta;
        }
        return out;
    }

    int n_;
    std::vector<QuadElem> a_;
};

}  // namespace qzeta
