#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qzeta/errors.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

/// The real quadratic field Q(sqrt(D)) an element lives in. D is square-free
/// and >= 2; one context is fixed per computation (mixing is an error).
class FieldContext {
public:
    explicit FieldContext(long d = 5) : d_(d) {
        if (d < 2) throw invalid_context("field radicand must be >= 2");
        for (long p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0) throw invalid_context("field radicand must be square-free");
    }
    long radicand() const { return d_; }
    friend bool operator==(const FieldContext&, const FieldContext&) = default;

private:
    long d_;
};

/// a + b*sqrt(D) as a real number under the embedding sqrt(D) > 0.
/// Immutable; components are canonical rationals. Elements with b = 0 are
/// plain rationals and combine with any context.
class QuadElem {
public:
    QuadElem() : a_(0), b_(0), d_(5) {}
    QuadElem(Rational a, Rational b, const FieldContext& ctx)
        : a_(std::move(a)), b_(std::move(b)), d_(ctx.radicand()) {}
    static QuadElem from_rational(Rational a, const FieldContext& ctx) {
        return QuadElem(std::move(a), Rational(0), ctx);
    }
    static QuadElem sqrt_d(const FieldContext& ctx) { return QuadElem(Rational(0), Rational(1), ctx); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    FieldContext context() const { return FieldContext(d_); }
    long radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_one() const { return sgn(b_) == 0 && a_ == 1; }

    /// Exact sign under the real embedding; never touches floating point.
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite component signs: compare a^2 against D b^2
        int c = cmp(a_ * a_, Rational(d_) * b_ * b_);
        if (c == 0) throw consistency_error("sqrt(D) rational: non-square-free context");
        return c > 0 ? sa : sb;
    }

    QuadElem conjugate() const { return with_same_ctx(a_, -b_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadElem inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero field element");
        Rational n = norm();  // nonzero: D square-free makes a^2 = D b^2 impossible
        return with_same_ctx(a_ / n, -b_ / n);
    }

    QuadElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadElem result = with_same_ctx(Rational(1), Rational(0));
        QuadElem base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    friend QuadElem operator-(const QuadElem& x) { return x.with_same_ctx(-x.a_, -x.b_); }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        long d = join(x, y);
        return QuadElem::raw(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        long d = join(x, y);
        return QuadElem::raw(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        long d = join(x, y);
        return QuadElem::raw(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) {
        if (y.is_zero()) throw division_by_zero("field division by zero");
        long d = join(x, y);
        Rational n = y.a_ * y.a_ - Rational(d) * y.b_ * y.b_;
        return QuadElem::raw((x.a_ * y.a_ - Rational(d) * x.b_ * y.b_) / n,
                             (x.b_ * y.a_ - x.a_ * y.b_) / n, d);
    }

    QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
    QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
    QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }
    QuadElem& operator/=(const QuadElem& y) { return *this = *this / y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sgn(x.b_) == 0 || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    /// Total order for deduplication (lexicographic on components, not the
    /// real-number order; use sign() of differences for that).
    friend int order_cmp(const QuadElem& x, const QuadElem& y) {
        if (int c = cmp(x.a_, y.a_); c != 0) return c;
        if (int c = cmp(x.b_, y.b_); c != 0) return c;
        if (sgn(x.b_) == 0) return 0;
        return x.d_ < y.d_ ? -1 : (x.d_ > y.d_ ? 1 : 0);
    }

    /// "a + b*sqrt(D)" with reduced rationals, or just "a" when b = 0.
    std::string str() const {
        if (sgn(b_) == 0) return a_.get_str();
        std::string out = a_.get_str();
        out += sgn(b_) < 0 ? " - " : " + ";
        out += Rational(abs(b_)).get_str();
        out += "*sqrt(" + std::to_string(d_) + ")";
        return out;
    }

    double to_double() const;
    std::string decimal(int digits) const;

private:
    static QuadElem raw(Rational a, Rational b, long d) {
        QuadElem e;
        e.a_ = std::move(a);
        e.b_ = std::move(b);
        e.d_ = d;
        return e;
    }
    QuadElem with_same_ctx(Rational a, Rational b) const { return raw(std::move(a), std::move(b), d_); }
    // zero and plain rationals are context-neutral
    static long join(const QuadElem& x, const QuadElem& y) {
        if (sgn(x.b_) == 0) return sgn(y.b_) == 0 ? x.d_ : y.d_;
        if (sgn(y.b_) == 0) return x.d_;
        if (x.d_ != y.d_) throw mixed_context("elements from different quadratic fields");
        return x.d_;
    }

    Rational a_, b_;
    long d_;
};

inline QuadElem operator*(const Rational& c, const QuadElem& x) {
    return QuadElem(c, Rational(0), x.context()) * x;
}

/// Exact floor of a + b*sqrt(D), via the integer square root of b^2 D
/// brought to a common denominator.
inline Integer floor_to_integer(const QuadElem& x) {
    const Integer m = x.a().get_den() * x.b().get_den();
    const Integer c = x.a().get_num() * x.b().get_den();
    const Integer e = x.b().get_num() * x.a().get_den();
    // x = (c + e*sqrt(D)) / m with m > 0
    if (sgn(e) == 0) return floor_div(c, m);
    const Integer g = e * e * x.radicand();
    const Integer s = isqrt(g);
    if (sgn(e) > 0) return floor_div(c + s, m);  // m*x in (c+s, c+s+1)
    return floor_div(c - s - 1, m);              // m*x in (c-s-1, c-s)
}

inline double QuadElem::to_double() const {
    // report-path only; exact verdicts never call this
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

/// Correctly rounded decimal string with `digits` fractional digits
/// (ties, which only arise for rational values, round away from zero).
inline std::string QuadElem::decimal(int digits) const {
    if (digits < 1) throw error("decimal digits must be >= 1");
    const bool neg = sign() < 0;
    const QuadElem y = neg ? -*this : *this;
    const Integer scale = pow10(static_cast<unsigned long>(digits));
    const QuadElem scaled = Rational(scale) * y;
    Integer n = floor_to_integer(scaled);
    const QuadElem frac = scaled - QuadElem::from_rational(Rational(n), y.context());
    const QuadElem half_gap = frac + frac - QuadElem::from_rational(Rational(1), y.context());
    if (half_gap.sign() >= 0) ++n;
    const Integer ip = n / scale;
    std::string fp = Integer(n % scale).get_str();
    fp.insert(fp.begin(), static_cast<size_t>(digits) - fp.size(), '0');
    std::string out = (neg && sgn(n) != 0) ? "-" : "";
    out += ip.get_str() + "." + fp;
    return out;
}

/// The nonnegative t in the same field with t^2 = x, if one exists.
/// Solves a = s^2 + D u^2, b = 2 s u over Q.
inline std::optional<QuadElem> sqrt_in_field(const QuadElem& x) {
    if (x.sign() < 0) throw negative_input("square root of negative element");
    const FieldContext ctx = x.context();
    if (x.is_zero()) return QuadElem::from_rational(Rational(0), ctx);
    const Rational D(ctx.radicand());
    if (x.is_rational()) {
        if (auto s = exact_sqrt(x.a())) return QuadElem(*s, Rational(0), ctx);
        if (auto u = exact_sqrt(x.a() / D)) return QuadElem(Rational(0), *u, ctx);
        return std::nullopt;
    }
    const auto r = exact_sqrt(x.norm());  // norm of a square is a rational square
    if (!r) return std::nullopt;
    for (const Rational& root : {Rational(*r), Rational(-*r)}) {
        const Rational s2 = (x.a() + root) / 2;
        if (sgn(s2) <= 0) continue;
        if (auto s = exact_sqrt(s2)) {
            const Rational u = x.b() / (2 * *s);
            QuadElem t(*s, u, ctx);
            if (t * t == x) return t.sign() >= 0 ? t : -t;
        }
    }
    return std::nullopt;
}

/// Grammar: rational | rational ('+'|'-') rational '*' 'sqrt(' integer ')'.
/// Whitespace is ignored; parse(x.str()) == x.
inline QuadElem parse_quad(std::string_view input, const FieldContext& default_ctx = FieldContext(5)) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty field element");

    size_t pos = 0;
    auto take_rational = [&]() -> Rational {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return parse_rational(std::string_view(s).substr(start, pos - start));
    };

    Rational a = take_rational();
    if (pos == s.size()) return QuadElem::from_rational(a, default_ctx);

    int term_sign = 1;
    if (s[pos] == '+') term_sign = 1;
    else if (s[pos] == '-') term_sign = -1;
    else throw parse_error("expected '+' or '-' in '" + s + "'");
    ++pos;
    Rational b = take_rational();
    if (term_sign < 0) b = -b;
    static const std::string kSqrt = "*sqrt(";
    if (s.compare(pos, kSqrt.size(), kSqrt) != 0) throw parse_error("expected '*sqrt(' in '" + s + "'");
    pos += kSqrt.size();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw parse_error("missing radicand in '" + s + "'");
    long d = std::stol(s.substr(start, pos - start));
    if (pos >= s.size() || s[pos] != ')' || pos + 1 != s.size())
        throw parse_error("trailing characters in '" + s + "'");
    return QuadElem(std::move(a), std::move(b), FieldContext(d));
}

// -- customization points used by the generic polynomial/series templates --

inline bool is_zero_value(const QuadElem& x) { return x.is_zero(); }
inline QuadElem zero_like(const QuadElem& like) {
    return QuadElem::from_rational(Rational(0), like.context());
}
inline QuadElem from_int(long v, const QuadElem& like) {
    return QuadElem::from_rational(Rational(v), like.context());
}
inline std::string coeff_str(const QuadElem& x) { return x.str(); }

}  // namespace qzeta
