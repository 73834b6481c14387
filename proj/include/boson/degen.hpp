#pragma once

#include <vector>

#include "boson/multipoly.hpp"
#include "boson/series.hpp"

namespace boson {

class Series;

// base(base - step)(base - 2 step)...(base - (n-1) step); n = 0 gives 1.
MultiPoly falling_factorial(unsigned n, const MultiPoly& base, const MultiPoly& step);

// Triangular table of degenerate Stirling numbers of the second kind,
// built from the recurrence S(n+1,k) = S(n,k-1) + (k - n lambda) S(n,k)
// with S(0,0) = 1. Entries are polynomials in lambda only.
class StirlingTable {
  public:
    explicit StirlingTable(unsigned max_n);

    unsigned max_n() const { return max_n_; }
    // S_{2,lambda}(n,k); zero outside 0 <= k <= n.
    const MultiPoly& entry(unsigned n, unsigned k) const;

    // CSV dump: row n has cells k = 0..n, canonical lambda-polynomial strings.
    std::string to_csv() const;

  private:
    unsigned max_n_;
    std::vector<std::vector<MultiPoly>> rows_;
};

// Checks (x)_{n,lambda} = sum_k S(n,k) (x)_k as an exact bivariate identity.
bool verify_defining_identity(const StirlingTable& table, unsigned n);

// (e_lambda(t) - 1)^k / k! to the given order; coefficient n is S(n,k).
Series stirling_column_series(unsigned k, unsigned order);

// Degenerate Bell polynomial phi_{n,lambda}(x) = sum_k S(n,k) x^k.
MultiPoly bell_poly(const StirlingTable& table, unsigned n);
MultiPoly bell_poly(unsigned n);

// Given phi_0..phi_k, returns x * sum_l C(k,l) (1-lambda)_{k-l,lambda} phi_l,
// which equals phi_{k+1}.
MultiPoly bell_recurrence_step(const std::vector<MultiPoly>& bells);

// The degenerate Euler operator (x d/dx)_{n,lambda} applied to a polynomial
// in x alone, computed along two independent routes.
struct EulerOperatorResult {
    MultiPoly eigen_route;     // termwise x^m -> (m)_{n,lambda} x^m
    MultiPoly stirling_route;  // sum_k S(n,k) x^k p^(k)(x)
    bool agree() const { return eigen_route == stirling_route; }
};

// Throws std::domain_error if p depends on lambda.
EulerOperatorResult euler_operator_degenerate(const MultiPoly& p, unsigned n);

}  // namespace boson
