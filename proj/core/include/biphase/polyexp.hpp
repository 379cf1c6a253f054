#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

#include "biphase/errors.hpp"

namespace biphase {

/**
 * Exact representation of a boundary-layer profile
 *
 *   u(rho) = (c_0 + c_1 rho + ... + c_k rho^k) exp(-gamma rho),   gamma > 0.
 *
 * The class is closed under differentiation, addition, scaling and
 * multiplication by rho^m, which is all the profile recursion needs. It is a
 * template so the algebra can be checked with exact rational scalars; the
 * library itself uses PolyExp (double).
 *
 * Trailing zero coefficients are trimmed, so the zero profile has an empty
 * coefficient list and degree -1.
 */
template <typename T>
class BasicPolyExp {
public:
    explicit BasicPolyExp(T gamma, std::vector<T> coeffs = {})
        : gamma_(std::move(gamma)), coeffs_(std::move(coeffs)) {
        if (!(gamma_ > T(0))) {
            throw ValidationError("PolyExp decay rate must be positive");
        }
        trim();
    }

    const T& gamma() const noexcept { return gamma_; }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    T coeff(std::size_t l) const { return l < coeffs_.size() ? coeffs_[l] : T(0); }

    /// Polynomial factor only, by Horner's rule.
    T polynomial(const T& rho) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * rho + *it;
        }
        return acc;
    }

    T operator()(const T& rho) const
        requires std::floating_point<T>
    {
        return is_zero() ? T(0) : polynomial(rho) * std::exp(-gamma_ * rho);
    }

    /// d/drho: coefficient l becomes (l+1) c_{l+1} - gamma c_l.
    BasicPolyExp derivative() const {
        std::vector<T> d(coeffs_.size(), T(0));
        for (std::size_t l = 0; l < coeffs_.size(); ++l) {
            d[l] = coeff(l + 1) * T(static_cast<long>(l + 1)) - gamma_ * coeffs_[l];
        }
        return BasicPolyExp(gamma_, std::move(d));
    }

    /// Multiplies by rho^m.
    BasicPolyExp shifted(std::size_t m) const {
        if (is_zero()) {
            return *this;
        }
        std::vector<T> c(m, T(0));
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return BasicPolyExp(gamma_, std::move(c));
    }

    BasicPolyExp scaled(const T& s) const {
        std::vector<T> c(coeffs_);
        for (auto& x : c) {
            x = x * s;
        }
        return BasicPolyExp(gamma_, std::move(c));
    }

    friend BasicPolyExp operator+(const BasicPolyExp& a, const BasicPolyExp& b) {
        require_same_rate(a, b);
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t l = 0; l < c.size(); ++l) {
            c[l] = a.coeff(l) + b.coeff(l);
        }
        return BasicPolyExp(a.gamma_, std::move(c));
    }

    friend BasicPolyExp operator-(const BasicPolyExp& a, const BasicPolyExp& b) {
        return a + b.scaled(T(-1));
    }

    friend bool operator==(const BasicPolyExp& a, const BasicPolyExp& b) {
        return a.gamma_ == b.gamma_ && a.coeffs_ == b.coeffs_;
    }

    static void require_same_rate(const BasicPolyExp& a, const BasicPolyExp& b) {
        if (!(a.gamma_ == b.gamma_)) {
            throw ValidationError("PolyExp decay rates differ");
        }
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) {
            coeffs_.pop_back();
        }
    }

    T gamma_;
    std::vector<T> coeffs_;
};

using PolyExp = BasicPolyExp<double>;

/// -u'' + gamma^2 u, computed inside the algebra.
template <typename T>
BasicPolyExp<T> profile_operator(const BasicPolyExp<T>& u) {
    const T g2 = u.gamma() * u.gamma();
    return u.scaled(g2) - u.derivative().derivative();
}

/**
 * Solves -u'' + gamma^2 u = rhs on (0, inf) with u(0) = 0, u -> 0.
 *
 * For rhs = (sum_{l<k} b_l rho^l) e^{-gamma rho} the solution is
 * (sum_{l=1..k} c_l rho^l) e^{-gamma rho} with
 *
 *   c_k = b_{k-1} / (2 gamma k)
 *   c_l = ((l+1) l c_{l+1} + b_{l-1}) / (2 gamma l),   l = k-1 .. 1
 *
 * Throws ValidationError when rhs has a different decay rate.
 */
template <typename T>
BasicPolyExp<T> solve_profile_ode(const BasicPolyExp<T>& rhs, const T& gamma) {
    if (!(rhs.gamma() == gamma)) {
        std::ostringstream os;
        os << "solve_profile_ode: right-hand side decays at a different rate";
        throw ValidationError(os.str());
    }
    if (rhs.is_zero()) {
        return BasicPolyExp<T>(gamma);
    }
    const std::size_t k = rhs.coeffs().size();
    std::vector<T> c(k + 1, T(0));
    const T two_gamma = T(2) * gamma;
    for (std::size_t l = k; l >= 1; --l) {
        const T li = T(static_cast<long>(l));
        const T upper = l < k ? T(static_cast<long>((l + 1) * l)) * c[l + 1] : T(0);
        c[l] = (upper + rhs.coeff(l - 1)) / (two_gamma * li);
    }
    return BasicPolyExp<T>(gamma, std::move(c));
}

}  // namespace biphase
