#include "boson/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "boson/series.hpp"

namespace boson {

double falling_factorial_num(double m, unsigned k, double lam) {
    double p = 1.0;
    for (unsigned i = 0; i < k; ++i) p *= m - static_cast<double>(i) * lam;
    return p;
}

LadderOperators build_operators(unsigned dim) {
    if (dim == 0) throw std::invalid_argument("build_operators: cutoff must be >= 1");
    FockMatrix a = FockMatrix::Zero(dim, dim);
    for (unsigned m = 1; m < dim; ++m)
        a(m - 1, m) = std::sqrt(static_cast<double>(m));
    return {a, a.adjoint()};
}

FockMatrix matrix_of_normal_form(const NormalForm& f, double lambda_value, unsigned dim) {
    auto [a, ad] = build_operators(dim);
    // powers up to the largest exponent appearing in f
    unsigned max_i = 0, max_j = 0;
    for (const auto& [w, c] : f.terms()) {
        max_i = std::max(max_i, w.creators);
        max_j = std::max(max_j, w.annihilators);
    }
    std::vector<FockMatrix> a_pow{FockMatrix::Identity(dim, dim)};
    std::vector<FockMatrix> ad_pow{FockMatrix::Identity(dim, dim)};
    for (unsigned p = 1; p <= max_j; ++p) a_pow.push_back(a_pow.back() * a);
    for (unsigned p = 1; p <= max_i; ++p) ad_pow.push_back(ad_pow.back() * ad);

    FockMatrix out = FockMatrix::Zero(dim, dim);
    for (const auto& [w, c] : f.terms()) {
        if (c.depends_on_x())
            throw std::domain_error("matrix_of_normal_form: coefficient depends on x");
        double value = 0.0;
        for (const auto& [mono, q] : c.terms())
            value += rat_to_double(q) * std::pow(lambda_value, mono.lambda);
        out += value * (ad_pow[w.creators] * a_pow[w.annihilators]);
    }
    return out;
}

bool oracle_check(const std::vector<Generator>& word, double lambda_value, unsigned dim) {
    const unsigned len = static_cast<unsigned>(word.size());
    if (dim <= len) throw std::invalid_argument("oracle_check: cutoff leaves no leakage-free block");
    auto [a, ad] = build_operators(dim);

    FockMatrix raw = FockMatrix::Identity(dim, dim);
    NormalForm symbolic = NormalForm::identity();
    for (Generator g : word) {
        raw = raw * (g == Generator::Annihilate ? a : ad);
        symbolic = nf_mul(symbolic, g == Generator::Annihilate
                                        ? NormalForm::annihilator()
                                        : NormalForm::creator());
    }
    FockMatrix reordered = matrix_of_normal_form(symbolic, lambda_value, dim);

    const unsigned block = dim - len;
    return (raw.topLeftCorner(block, block) - reordered.topLeftCorner(block, block))
               .cwiseAbs()
               .maxCoeff() < 1e-10;
}

unsigned coherent_cutoff(Complex z, unsigned min_dim) {
    const double r2 = std::norm(z);
    double log_term = -r2;  // log of e^{-|z|^2} |z|^{2n} / n! at n = 0
    double covered = std::exp(log_term);
    unsigned dim = 1;
    while (dim < min_dim || 1.0 - covered > 1e-12) {
        log_term += std::log(r2) - std::log(static_cast<double>(dim));
        covered += std::exp(log_term);
        ++dim;
        if (dim > 4096)
            throw std::runtime_error("coherent_cutoff: norm deficit does not reach 1e-12");
    }
    return dim;
}

FockVector coherent_state(Complex z, unsigned dim) {
    if (dim == 0) throw std::invalid_argument("coherent_state: cutoff must be >= 1");
    FockVector v(dim);
    const double pref = std::exp(-std::norm(z) / 2.0);
    Complex zn = 1.0;
    double sqrt_fact = 1.0;
    for (unsigned n = 0; n < dim; ++n) {
        if (n > 0) {
            zn *= z;
            sqrt_fact *= std::sqrt(static_cast<double>(n));
        }
        v(n) = pref * zn / sqrt_fact;
    }
    double deficit = 1.0 - v.squaredNorm();
    if (deficit > 1e-12)
        throw std::runtime_error("coherent_state: truncated norm deficit " +
                                 std::to_string(deficit) + " exceeds 1e-12");
    return v;
}

Complex coherent_overlap(Complex x, Complex y) {
    return std::exp(-(std::norm(x) + std::norm(y)) / 2.0 + std::conj(x) * y);
}

ExpectationResult expectation_degenerate_power(Complex z, unsigned k,
                                               double lambda_value, unsigned dim) {
    dim = std::max(dim, coherent_cutoff(z, k + 2) + 10);
    FockVector v = coherent_state(z, dim);

    NormalForm power =
        nf_degenerate_power(NormalForm::number_operator(), k, MultiPoly::lambda());
    FockMatrix mat = matrix_of_normal_form(power, lambda_value, dim);
    double via_matrix = (v.adjoint() * mat * v).value().real();

    const double r2 = std::norm(z);
    double via_series = 0.0;
    double term = std::exp(-r2);  // e^{-|z|^2} |z|^{2n} / n! at n = 0
    for (unsigned n = 0; n < dim; ++n) {
        if (n > 0) term *= r2 / static_cast<double>(n);
        via_series += term * falling_factorial_num(static_cast<double>(n), k, lambda_value);
    }

    double exact = 0.0;
    {
        MultiPoly phi = bell_poly(k);
        for (const auto& [mono, q] : phi.terms())
            exact += rat_to_double(q) * std::pow(lambda_value, mono.lambda) *
                     std::pow(r2, mono.x);
    }
    const double scale = std::max(1.0, std::abs(exact));
    if (std::abs(via_matrix - exact) > 1e-9 * scale ||
        std::abs(via_series - exact) > 1e-9 * scale)
        throw std::runtime_error("expectation_degenerate_power: truncation insufficient");
    return {via_matrix, via_series, exact};
}

DobinskiResult dobinski_eval(unsigned k, double lambda_value, double x, double tol) {
    if (k == 0) throw std::invalid_argument("dobinski_eval: k must be >= 1");
    if (tol <= 0) throw std::invalid_argument("dobinski_eval: tol must be positive");
    const double pref = std::exp(-x);
    const unsigned step_cap = 100000;
    // once n >= max(2 k |lambda|, 2x) the term ratio is below 1/2, so the
    // tail is bounded by twice the next term
    const double n_safe = std::max(2.0 * k * std::abs(lambda_value), 2.0 * x);

    double unshifted = 0.0;
    double xn = 1.0;  // x^n / n!
    unsigned n = 0;
    for (;; ++n) {
        if (n > 0) xn *= x / static_cast<double>(n);
        unshifted += pref * xn * falling_factorial_num(static_cast<double>(n), k, lambda_value);
        double next =
            std::abs(pref * xn * x / (n + 1.0) *
                     falling_factorial_num(static_cast<double>(n) + 1.0, k, lambda_value));
        if (static_cast<double>(n) >= n_safe && 2.0 * next < tol) break;
        if (n >= step_cap)
            throw std::runtime_error("dobinski_eval: tail bound not met within step cap");
    }
    const unsigned terms_used = n + 1;

    // shifted form: e^{-x} sum_{n>=1} x^n (n - lambda)_{k-1,lambda} / (n-1)!
    double shifted = 0.0;
    double xfac = x;  // x^n / (n-1)! at n = 1
    for (unsigned m = 1;; ++m) {
        if (m > 1) xfac *= x / static_cast<double>(m - 1);
        shifted += pref * xfac *
                   falling_factorial_num(static_cast<double>(m) - lambda_value, k - 1, lambda_value);
        double next = std::abs(
            pref * xfac * x / static_cast<double>(m) *
            falling_factorial_num(static_cast<double>(m) + 1.0 - lambda_value, k - 1, lambda_value));
        if (static_cast<double>(m) >= n_safe && 2.0 * next < tol) break;
        if (m >= step_cap)
            throw std::runtime_error("dobinski_eval: tail bound not met within step cap");
    }

    if (std::abs(unshifted - shifted) > 2.0 * tol * std::max(1.0, std::abs(unshifted)))
        throw std::runtime_error("dobinski_eval: series forms disagree beyond 2*tol");
    return {unshifted, shifted, terms_used};
}

bool generating_function_check(unsigned order) {
    const MultiPoly lam = MultiPoly::lambda();
    const MultiPoly x = MultiPoly::x();

    // (i) Bell EGF from the Stirling recurrence vs exp(x (e_lambda(t) - 1))
    StirlingTable table(order);
    Series bells(order);
    for (unsigned k = 0; k <= order; ++k) bells[k] = bell_poly(table, k);

    Series inner = degenerate_exp(MultiPoly(1), lam, order);
    inner[0] -= MultiPoly(1);
    Series rhs = series_exp(series_scale(inner, x));
    if (!(bells == rhs)) return false;

    // (ii) f' = x e_lambda^{1-lambda}(t) f
    if (order >= 1) {
        Series lhs = series_derivative(bells);
        Series factor =
            series_scale(degenerate_exp(MultiPoly(1) - lam, lam, order), x);
        if (!(lhs == series_mul(factor, bells).truncate(order - 1))) return false;
    }
    return true;
}

}  // namespace boson
