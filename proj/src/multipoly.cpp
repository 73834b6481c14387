#include "boson/multipoly.hpp"

#include <sstream>

namespace boson {

MultiPoly MultiPoly::monomial(unsigned lam_exp, unsigned x_exp, Rational coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_[Monomial{lam_exp, x_exp}] = std::move(coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::optional<Rational> MultiPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == Monomial{})
        return terms_.begin()->second;
    return std::nullopt;
}

unsigned MultiPoly::degree_x() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

unsigned MultiPoly::degree_lambda() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.lambda);
    return d;
}

Rational MultiPoly::coeff(unsigned lam_exp, unsigned x_exp) const {
    auto it = terms_.find(Monomial{lam_exp, x_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::coeff_of_x(unsigned x_exp) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (m.x == x_exp) out.terms_[Monomial{m.lambda, 0}] = c;
    return out;
}

void MultiPoly::insert_add(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert_add(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) insert_add(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.insert_add(Monomial{ma.lambda + mb.lambda, ma.x + mb.x}, ca * cb);
    return out;
}

namespace {
Rational pow_rat(const Rational& base, unsigned e) {
    Rational p = 1;
    for (unsigned i = 0; i < e; ++i) p *= base;
    return p;
}
}  // namespace

MultiPoly MultiPoly::eval(std::optional<Rational> lambda_value,
                          std::optional<Rational> x_value) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rest = m;
        if (lambda_value) {
            coeff *= pow_rat(*lambda_value, m.lambda);
            rest.lambda = 0;
        }
        if (x_value) {
            coeff *= pow_rat(*x_value, m.x);
            rest.x = 0;
        }
        out.insert_add(rest, coeff);
    }
    return out;
}

Rational MultiPoly::eval_full(const Rational& lambda_value, const Rational& x_value) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_)
        acc += c * pow_rat(lambda_value, m.lambda) * pow_rat(x_value, m.x);
    return acc;
}

MultiPoly MultiPoly::derivative_x() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (m.x > 0) out.terms_[Monomial{m.lambda, m.x - 1}] = c * m.x;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool bare = m.lambda == 0 && m.x == 0;
        bool need_coeff = bare || mag != 1;
        if (need_coeff) os << rat_to_string(mag);
        bool star = need_coeff;
        if (m.lambda > 0) {
            if (star) os << "*";
            os << "L";
            if (m.lambda > 1) os << "^" << m.lambda;
            star = true;
        }
        if (m.x > 0) {
            if (star) os << "*";
            os << "x";
            if (m.x > 1) os << "^" << m.x;
        }
    }
    return os.str();
}

std::string MultiPoly::to_json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"coeff\":\"" << rat_to_fraction_string(c) << "\",\"lambda\":" << m.lambda
           << ",\"x\":" << m.x << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace boson
