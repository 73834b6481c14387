#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "boson/rational.hpp"

namespace boson {

// Exponent vector over the two fixed indeterminates {lambda, x}.
struct Monomial {
    unsigned lambda = 0;
    unsigned x = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in lambda and x over Rational. No zero coefficients are
// stored; the term map is ordered by (lambda, x) so every traversal is
// deterministic.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c) {  // NOLINT: implicit scalar embedding
        if (c != 0) terms_[Monomial{}] = c;
    }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

    static MultiPoly lambda() { return monomial(1, 0); }
    static MultiPoly x() { return monomial(0, 1); }
    static MultiPoly monomial(unsigned lam_exp, unsigned x_exp, Rational coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant term, if the polynomial is a constant (possibly zero).
    std::optional<Rational> as_constant() const;

    unsigned degree_x() const;
    unsigned degree_lambda() const;
    bool depends_on_lambda() const { return degree_lambda() > 0; }
    bool depends_on_x() const { return degree_x() > 0; }

    // Coefficient of lambda^l * x^k, zero if absent.
    Rational coeff(unsigned lam_exp, unsigned x_exp) const;
    // Coefficient of x^k as a polynomial in lambda.
    MultiPoly coeff_of_x(unsigned x_exp) const;

    const TermMap& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const MultiPoly&) const = default;

    // Partial evaluation: substitutes any subset of {lambda, x} exactly.
    MultiPoly eval(std::optional<Rational> lambda_value,
                   std::optional<Rational> x_value) const;
    // Full evaluation; requires both indeterminates to be eliminated.
    Rational eval_full(const Rational& lambda_value, const Rational& x_value) const;

    // d/dx, exact.
    MultiPoly derivative_x() const;

    // Canonical text, ascending (lambda, x) powers, "L" for lambda:
    // "1 - 3*L + 2*L^2", "x^2 + (1 - L)*x" renders as "1*x - 1*L*x + 1*x^2"
    // style is avoided: coefficients of 1 are dropped, products use '*'.
    std::string to_string() const;

    // {"terms":[{"coeff":"<num>/<den>","lambda":l,"x":k}]} sorted ascending.
    std::string to_json() const;

  private:
    void insert_add(const Monomial& m, const Rational& c);
    TermMap terms_;
};

}  // namespace boson
