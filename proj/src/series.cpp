#include "boson/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "boson/degen.hpp"

namespace boson {

Series Series::truncate(unsigned new_order) const {
    std::vector<MultiPoly> out(coeffs_.begin(),
                               coeffs_.begin() + std::min<size_t>(new_order + 1, coeffs_.size()));
    out.resize(new_order + 1);
    return Series(std::move(out));
}

Series operator+(const Series& f, const Series& g) {
    unsigned order = std::min(f.order(), g.order());
    Series out(order);
    for (unsigned k = 0; k <= order; ++k) out[k] = f[k] + g[k];
    return out;
}

Series operator-(const Series& f, const Series& g) {
    unsigned order = std::min(f.order(), g.order());
    Series out(order);
    for (unsigned k = 0; k <= order; ++k) out[k] = f[k] - g[k];
    return out;
}

Series series_mul(const Series& f, const Series& g) {
    unsigned order = std::min(f.order(), g.order());
    Series out(order);
    for (unsigned n = 0; n <= order; ++n) {
        MultiPoly acc;
        for (unsigned k = 0; k <= n; ++k)
            acc += MultiPoly(Rational(binomial(n, k))) * f[k] * g[n - k];
        out[n] = acc;
    }
    return out;
}

Series series_scale(const Series& f, const MultiPoly& c) {
    Series out(f.order());
    for (unsigned k = 0; k <= f.order(); ++k) out[k] = c * f[k];
    return out;
}

Series series_exp(const Series& f) {
    if (!f[0].is_zero())
        throw std::domain_error("series_exp: nonzero constant term");
    unsigned order = f.order();
    Series g(order);
    g[0] = MultiPoly(1);
    // g_{n+1} = sum_k C(n,k) f_{k+1} g_{n-k}
    for (unsigned n = 0; n + 1 <= order; ++n) {
        MultiPoly acc;
        for (unsigned k = 0; k <= n; ++k)
            acc += MultiPoly(Rational(binomial(n, k))) * f[k + 1] * g[n - k];
        g[n + 1] = acc;
    }
    return g;
}

Series series_derivative(const Series& f) {
    if (f.order() == 0)
        throw std::domain_error("series_derivative: order-0 series");
    Series out(f.order() - 1);
    for (unsigned k = 0; k < f.order(); ++k) out[k] = f[k + 1];
    return out;
}

Series degenerate_exp(const MultiPoly& base, const MultiPoly& step, unsigned order) {
    Series out(order);
    for (unsigned k = 0; k <= order; ++k)
        out[k] = falling_factorial(k, base, step);
    return out;
}

}  // namespace boson
