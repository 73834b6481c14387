#include "boson/normal_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace boson {

NormalForm NormalForm::word(unsigned i, unsigned j, MultiPoly coeff) {
    NormalForm f;
    if (!coeff.is_zero()) f.terms_[Word{i, j}] = std::move(coeff);
    return f;
}

MultiPoly NormalForm::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find(Word{i, j});
    return it == terms_.end() ? MultiPoly() : it->second;
}

bool NormalForm::is_diagonal() const {
    return std::ranges::all_of(terms_, [](const auto& t) {
        return t.first.creators == t.first.annihilators;
    });
}

void NormalForm::add_term(const Word& w, const MultiPoly& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NormalForm NormalForm::operator-() const {
    NormalForm out;
    for (const auto& [w, c] : terms_) out.terms_[w] = -c;
    return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NormalForm nf_mul(const NormalForm& f, const NormalForm& g) {
    NormalForm out;
    for (const auto& [wf, cf] : f.terms()) {
        for (const auto& [wg, cg] : g.terms()) {
            // (ad)^{i1} a^{j1} (ad)^{i2} a^{j2}: commute a^{j1} past (ad)^{i2}.
            const unsigned j = wf.annihilators, m = wg.creators;
            const MultiPoly prod = cf * cg;
            const unsigned smax = std::min(j, m);
            for (unsigned s = 0; s <= smax; ++s) {
                Rational weight = Rational(factorial(s)) *
                                  Rational(binomial(j, s)) * Rational(binomial(m, s));
                out.add_term(Word{wf.creators + m - s, j - s + wg.annihilators},
                             prod * MultiPoly(weight));
            }
        }
    }
    return out;
}

NormalForm nf_degenerate_power(const NormalForm& f, unsigned k, const MultiPoly& step) {
    NormalForm out = NormalForm::identity();
    for (unsigned i = 0; i < k; ++i) {
        NormalForm shifted = f - NormalForm::scalar(MultiPoly(Rational(i)) * step);
        out = nf_mul(out, shifted);
    }
    return out;
}

bool verify_normal_ordering_theorem(unsigned k, const StirlingTable& table) {
    if (k > table.max_n()) throw std::out_of_range("verify_normal_ordering_theorem: k > max_n");
    NormalForm lhs =
        nf_degenerate_power(NormalForm::number_operator(), k, MultiPoly::lambda());
    NormalForm rhs;
    for (unsigned l = 0; l <= k; ++l)
        rhs.add_term(Word{l, l}, table.entry(k, l));
    return lhs == rhs;
}

MultiPoly nf_apply_number_state(const NormalForm& f, unsigned m) {
    MultiPoly out;
    for (const auto& [w, c] : f.terms()) {
        if (w.creators != w.annihilators)
            throw std::domain_error("nf_apply_number_state: off-diagonal word, |m> is not an eigenvector");
        out += c * MultiPoly(Rational(int_falling(m, w.creators)));
    }
    return out;
}

namespace {
bool leading_negative(const MultiPoly& c) {
    return !c.terms().empty() && c.terms().begin()->second < 0;
}

void render_word(std::ostream& os, const Word& w, const MultiPoly& c, bool grammar) {
    std::string cs = c.to_string();
    if (grammar) {
        std::string g;
        for (char ch : cs)
            if (ch == 'L') g += "lambda"; else g += ch;
        cs = g;
    }
    bool is_one = (c == MultiPoly(1));
    bool composite = c.terms().size() > 1;
    if (w.creators == 0 && w.annihilators == 0) {
        if (composite) os << "(" << cs << ")";
        else os << cs;
        return;
    }
    const char* sep = grammar ? " * " : " ";
    if (!is_one) {
        if (composite) os << "(" << cs << ")";
        else os << cs;
        os << sep;
    }
    if (w.creators > 0) {
        os << "ad";
        if (w.creators > 1) os << "^" << w.creators;
        if (w.annihilators > 0) os << sep;
    }
    if (w.annihilators > 0) {
        os << "a";
        if (w.annihilators > 1) os << "^" << w.annihilators;
    }
}

std::string render_nf(const NormalForm& f, bool grammar) {
    if (f.terms().empty()) return "0";
    std::ostringstream os;
    // highest words first so "ad^2 a^2 + (1 - L) ad a + 1" reads naturally
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        MultiPoly c = it->second;
        // pull a leading minus out of the coefficient so the rendering stays
        // within the expression grammar
        bool neg = leading_negative(c);
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        render_word(os, it->first, c, grammar);
    }
    return os.str();
}
}  // namespace

std::string NormalForm::to_string() const { return render_nf(*this, false); }
std::string NormalForm::to_expr_string() const { return render_nf(*this, true); }

std::string NormalForm::to_json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"i\":" << w.creators << ",\"j\":" << w.annihilators
           << ",\"coeff\":" << c.to_json() << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace boson
