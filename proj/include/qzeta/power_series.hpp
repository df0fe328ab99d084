#pragma once

#include <utility>
#include <vector>

#include "qzeta/errors.hpp"
#include "qzeta/poly.hpp"

namespace qzeta {

/// Truncated power series: coefficients are valid for powers < order().
template <class K>
class PowerSeries {
public:
    explicit PowerSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw error("power series needs positive truncation order");
    }
    static PowerSeries from_poly(const Poly<K>& p, size_t order, const K& like) {
        std::vector<K> c(order, zero_like(like));
        for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i);
        return PowerSeries(std::move(c));
    }

    size_t order() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& coeff_at(size_t k) const {
        if (k >= c_.size()) throw error("series coefficient beyond truncation order");
        return c_[k];
    }

    PowerSeries mul(const PowerSeries& other) const {
        const size_t n = std::min(order(), other.order());
        std::vector<K> out(n, zero_like(c_[0]));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; i + j < n && j < other.c_.size(); ++j)
                out[i + j] = out[i + j] + c_[i] * other.c_[j];
        return PowerSeries(std::move(out));
    }

    PowerSeries add(const PowerSeries& other) const {
        const size_t n = std::min(order(), other.order());
        std::vector<K> out(n, zero_like(c_[0]));
        for (size_t i = 0; i < n; ++i) out[i] = c_[i] + other.c_[i];
        return PowerSeries(std::move(out));
    }

    /// Multiplicative inverse; the constant term must be a unit.
    PowerSeries reciprocal() const {
        if (is_zero_value(c_[0])) throw non_unit_reciprocal("series has zero constant term");
        std::vector<K> out(order(), zero_like(c_[0]));
        const K inv0 = from_int(1, c_[0]) / c_[0];
        out[0] = inv0;
        for (size_t k = 1; k < order(); ++k) {
            K acc = zero_like(c_[0]);
            for (size_t j = 1; j <= k; ++j) acc = acc + c_[j] * out[k - j];
            out[k] = -(acc * inv0);
        }
        return PowerSeries(std::move(out));
    }

    /// Termwise derivative; valid one order lower than the input.
    PowerSeries derivative() const {
        if (order() == 1) return PowerSeries(std::vector<K>{zero_like(c_[0])});
        std::vector<K> out(order() - 1, zero_like(c_[0]));
        for (size_t i = 1; i < order(); ++i) out[i - 1] = from_int(static_cast<long>(i), c_[i]) * c_[i];
        return PowerSeries(std::move(out));
    }

    PowerSeries scale(const K& s) const {
        std::vector<K> out = c_;
        for (auto& v : out) v = s * v;
        return PowerSeries(std::move(out));
    }

    Poly<K> truncate_to_poly() const { return Poly<K>(c_); }

private:
    std::vector<K> c_;
};

}  // namespace qzeta
