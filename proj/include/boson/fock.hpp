#pragma once

#include <eigen3/Eigen/Dense>
#include <complex>
#include <vector>

#include "boson/normal_form.hpp"

namespace boson {

using FockMatrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

enum class Generator { Annihilate, Create };

// Matrices of a and ad at cutoff D: A[m-1][m] = sqrt(m), Ad = A^H.
// Throws std::invalid_argument on D = 0.
struct LadderOperators {
    FockMatrix a;
    FockMatrix ad;
};
LadderOperators build_operators(unsigned dim);

// sum c_ij(lambda_value) (Ad)^i A^j at cutoff D. Throws std::domain_error
// if any coefficient depends on x.
FockMatrix matrix_of_normal_form(const NormalForm& f, double lambda_value, unsigned dim);

// Multiplies the raw generator matrices in order and compares against the
// matrix of the symbolic normal form on the leakage-free block (both indices
// < D - L), within 1e-10 absolute. Throws std::invalid_argument if D <= L.
bool oracle_check(const std::vector<Generator>& word, double lambda_value, unsigned dim);

// Truncated coherent state, amplitudes e^{-|z|^2/2} z^n / sqrt(n!).
// Throws std::runtime_error if the norm deficit at dim exceeds 1e-12.
FockVector coherent_state(Complex z, unsigned dim);

// Smallest cutoff at which the truncated coherent-state norm deficit
// drops below 1e-12 (at least min_dim).
unsigned coherent_cutoff(Complex z, unsigned min_dim = 1);

// <x|y> = exp(-(|x|^2 + |y|^2)/2 + conj(x) y).
Complex coherent_overlap(Complex x, Complex y);

// <z|(N)_{k,lambda}|z> two ways: through the normal-form matrix and through
// the direct occupation-number series. Both must match the exact Bell
// polynomial at (lambda, |z|^2) within 1e-9 relative.
struct ExpectationResult {
    double via_matrix;
    double via_series;
    double exact;
};
ExpectationResult expectation_degenerate_power(Complex z, unsigned k,
                                               double lambda_value, unsigned dim);

// e^{-x} sum_n x^n (n)_{k,lambda} / n!, adaptively truncated until the tail
// bound is below tol, plus the shifted form starting at n = 1 with
// (n - lambda)_{k-1,lambda} / (n-1)!. The two must agree within 2 tol.
// Throws std::runtime_error on non-convergence.
struct DobinskiResult {
    double unshifted;
    double shifted;
    unsigned terms_used;
};
DobinskiResult dobinski_eval(unsigned k, double lambda_value, double x, double tol);

// Exact symbolic check in the Series ring with x symbolic:
//  (i)  the Bell-polynomial EGF equals exp(x (e_lambda(t) - 1)) to order T;
//  (ii) its derivative equals x e_lambda^{1-lambda}(t) times itself.
bool generating_function_check(unsigned order);

// Numeric falling factorial m(m - lam)...(m - (k-1) lam).
double falling_factorial_num(double m, unsigned k, double lam);

}  // namespace boson
