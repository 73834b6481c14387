#include "boson/degen.hpp"

#include <sstream>
#include <stdexcept>

#include "boson/series.hpp"

namespace boson {

MultiPoly falling_factorial(unsigned n, const MultiPoly& base, const MultiPoly& step) {
    MultiPoly out(1);
    for (unsigned i = 0; i < n; ++i)
        out *= base - MultiPoly(Rational(i)) * step;
    return out;
}

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n), rows_(max_n + 1) {
    rows_[0] = {MultiPoly(1)};
    const MultiPoly lam = MultiPoly::lambda();
    for (unsigned n = 0; n < max_n; ++n) {
        rows_[n + 1].assign(n + 2, MultiPoly());
        for (unsigned k = 0; k <= n + 1; ++k) {
            MultiPoly v;
            if (k >= 1 && k - 1 <= n) v += rows_[n][k - 1];
            if (k <= n)
                v += (MultiPoly(Rational(k)) - MultiPoly(Rational(n)) * lam) * rows_[n][k];
            rows_[n + 1][k] = std::move(v);
        }
    }
}

const MultiPoly& StirlingTable::entry(unsigned n, unsigned k) const {
    static const MultiPoly zero;
    if (n > max_n_) throw std::out_of_range("StirlingTable: n exceeds max_n");
    if (k > n) return zero;
    return rows_[n][k];
}

std::string StirlingTable::to_csv() const {
    std::ostringstream os;
    for (unsigned n = 0; n <= max_n_; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            if (k) os << ",";
            os << rows_[n][k].to_string();
        }
        os << "\n";
    }
    return os.str();
}

bool verify_defining_identity(const StirlingTable& table, unsigned n) {
    const MultiPoly x = MultiPoly::x();
    MultiPoly rhs;
    for (unsigned k = 0; k <= n; ++k)
        rhs += table.entry(n, k) * falling_factorial(k, x, MultiPoly(1));
    return rhs == falling_factorial(n, x, MultiPoly::lambda());
}

Series stirling_column_series(unsigned k, unsigned order) {
    // (e_lambda(t) - 1)^k / k!
    Series base = degenerate_exp(MultiPoly(1), MultiPoly::lambda(), order);
    base[0] -= MultiPoly(1);
    Series out = Series::one(order);
    for (unsigned i = 0; i < k; ++i) out = series_mul(out, base);
    Rational inv_kfact(1, factorial(k));
    return series_scale(out, MultiPoly(inv_kfact));
}

MultiPoly bell_poly(const StirlingTable& table, unsigned n) {
    MultiPoly out;
    for (unsigned k = 0; k <= n; ++k)
        out += table.entry(n, k) * MultiPoly::monomial(0, k);
    return out;
}

MultiPoly bell_poly(unsigned n) {
    return bell_poly(StirlingTable(n), n);
}

MultiPoly bell_recurrence_step(const std::vector<MultiPoly>& bells) {
    if (bells.empty()) throw std::invalid_argument("bell_recurrence_step: empty list");
    unsigned k = static_cast<unsigned>(bells.size()) - 1;
    const MultiPoly one_minus_lam = MultiPoly(1) - MultiPoly::lambda();
    MultiPoly acc;
    for (unsigned l = 0; l <= k; ++l)
        acc += MultiPoly(Rational(binomial(k, l))) *
               falling_factorial(k - l, one_minus_lam, MultiPoly::lambda()) * bells[l];
    return MultiPoly::x() * acc;
}

EulerOperatorResult euler_operator_degenerate(const MultiPoly& p, unsigned n) {
    if (p.depends_on_lambda())
        throw std::domain_error("euler_operator_degenerate: input depends on lambda");
    EulerOperatorResult res;
    // Eigen route: x^m is an eigenvector of x d/dx with eigenvalue m, so the
    // operator falling factorial scales it by (m)_{n,lambda}.
    for (const auto& [mono, c] : p.terms()) {
        MultiPoly eig = falling_factorial(n, MultiPoly(Rational(mono.x)), MultiPoly::lambda());
        res.eigen_route += MultiPoly(c) * eig * MultiPoly::monomial(0, mono.x);
    }
    // Stirling route: sum_{k=1}^n S(n,k) x^k p^(k)(x); n = 0 is the identity.
    if (n == 0) {
        res.stirling_route = p;
    } else {
        StirlingTable table(n);
        MultiPoly deriv = p;
        for (unsigned k = 1; k <= n; ++k) {
            deriv = deriv.derivative_x();
            res.stirling_route += table.entry(n, k) * MultiPoly::monomial(0, k) * deriv;
        }
    }
    return res;
}

}  // namespace boson
