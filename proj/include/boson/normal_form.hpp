#pragma once

#include <map>
#include <string>
#include <utility>

#include "boson/degen.hpp"
#include "boson/multipoly.hpp"

namespace boson {

// A normal-ordered word (ad)^i a^j.
struct Word {
    unsigned creators = 0;      // i
    unsigned annihilators = 0;  // j
    auto operator<=>(const Word&) const = default;
};

// Canonical form of a single-mode boson expression: a finite sum
// sum c_{ij} (ad)^i a^j with MultiPoly coefficients. No zero coefficients
// are stored, so operator equality is map equality.
class NormalForm {
  public:
    using TermMap = std::map<Word, MultiPoly>;

    NormalForm() = default;

    static NormalForm identity() { return word(0, 0); }
    static NormalForm annihilator() { return word(0, 1); }
    static NormalForm creator() { return word(1, 0); }
    static NormalForm number_operator() { return word(1, 1); }
    static NormalForm word(unsigned i, unsigned j, MultiPoly coeff = MultiPoly(1));
    static NormalForm scalar(const MultiPoly& c) { return word(0, 0, c); }

    const TermMap& terms() const { return terms_; }
    MultiPoly coeff(unsigned i, unsigned j) const;
    bool is_diagonal() const;

    NormalForm operator-() const;
    NormalForm& operator+=(const NormalForm& rhs);
    NormalForm& operator-=(const NormalForm& rhs);
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }

    bool operator==(const NormalForm&) const = default;

    // Plain text, e.g. "ad^2 a^2 + (1 - L) ad a".
    std::string to_string() const;
    // Grammar-compatible rendering with explicit '*' and "lambda", reparseable.
    std::string to_expr_string() const;
    // {"terms":[{"i":..,"j":..,"coeff":{...}}]} sorted by (i, j).
    std::string to_json() const;

    void add_term(const Word& w, const MultiPoly& c);

  private:
    TermMap terms_;
};

// Normal-ordered product, rewriting via the closed-form swap
// a^j (ad)^m = sum_s s! C(j,s) C(m,s) (ad)^{m-s} a^{j-s}.
NormalForm nf_mul(const NormalForm& f, const NormalForm& g);

// Normal form of f (f - step) (f - 2 step) ... (f - (k-1) step); k = 0 is
// the identity operator.
NormalForm nf_degenerate_power(const NormalForm& f, unsigned k, const MultiPoly& step);

// Compares nf_degenerate_power(N, k, lambda) with the Stirling table row
// {(l,l) -> S(k,l)}, requiring every off-diagonal coefficient absent.
bool verify_normal_ordering_theorem(unsigned k, const StirlingTable& table);

// Eigenvalue of a diagonal normal form on the number state |m>:
// sum_l c_ll (m)_l. Throws std::domain_error on off-diagonal words.
MultiPoly nf_apply_number_state(const NormalForm& f, unsigned m);

}  // namespace boson
