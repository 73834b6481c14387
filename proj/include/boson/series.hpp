#pragma once

#include <vector>

#include "boson/multipoly.hpp"

namespace boson {

// Truncated formal power series in t over MultiPoly, EGF convention:
// coeffs[k] is the coefficient of t^k/k!, exact for k <= order().
class Series {
  public:
    explicit Series(unsigned order) : coeffs_(order + 1) {}
    Series(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.emplace_back();
    }

    static Series one(unsigned order) {
        Series s(order);
        s.coeffs_[0] = MultiPoly(1);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const MultiPoly& operator[](unsigned k) const { return coeffs_.at(k); }
    MultiPoly& operator[](unsigned k) { return coeffs_.at(k); }

    Series truncate(unsigned new_order) const;

    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    bool operator==(const Series&) const = default;

  private:
    std::vector<MultiPoly> coeffs_;
};

// EGF product: coefficient n is sum_k C(n,k) f_k g_{n-k}; order = min(orders).
Series series_mul(const Series& f, const Series& g);

// Scales every coefficient by a polynomial.
Series series_scale(const Series& f, const MultiPoly& c);

// exp of a series with zero constant term, via the ODE g' = f'g, g_0 = 1.
// Throws std::domain_error if the constant term is nonzero.
Series series_exp(const Series& f);

// EGF shift-down: coefficient k of the result is coefficient k+1 of f;
// order drops by one. Throws std::domain_error on order-0 input.
Series series_derivative(const Series& f);

// The degenerate exponential e_lambda^base(t) to the given order: the
// k-th EGF coefficient is the generalized falling factorial
// base(base - step)...(base - (k-1)step).
Series degenerate_exp(const MultiPoly& base, const MultiPoly& step, unsigned order);

}  // namespace boson
