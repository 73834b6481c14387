// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "boson/degen.hpp"
#include "boson/fock.hpp"
#include "boson/normal_form.hpp"
#include "boson/parser.hpp"
#include "boson/series.hpp"
#include "boson/verify.hpp"

using namespace boson;

namespace {

const MultiPoly L = MultiPoly::lambda();

unsigned long partitions_into_blocks(unsigned n, unsigned k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<unsigned> label(n, 0);
    unsigned long count = 0;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
        if (i == n) {
            if (used == k) ++count;
            return;
        }
        for (unsigned b = 0; b <= used && b < k; ++b) {
            label[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return count;
}

unsigned long bell_number_brute(unsigned n) {
    unsigned long total = 0;
    for (unsigned k = 0; k <= n; ++k) total += partitions_into_blocks(n, k);
    return total;
}

bool criterion_defining_identity() {
    StirlingTable table(12);
    for (unsigned n = 0; n <= 12; ++n)
        if (!verify_defining_identity(table, n)) return false;
    return true;
}

bool criterion_column_series() {
    const unsigned order = 15;
    StirlingTable table(order);
    for (unsigned k = 0; k <= 8; ++k) {
        Series col = stirling_column_series(k, order);
        for (unsigned n = 0; n <= order; ++n)
            if (col[n] != table.entry(n, k)) return false;
    }
    return true;
}

bool criterion_normal_ordering() {
    StirlingTable table(12);
    for (unsigned k = 0; k <= 12; ++k) {
        if (!verify_normal_ordering_theorem(k, table)) return false;
        // lambda := 0 specialization must give the classical triangle
        NormalForm nk = nf_degenerate_power(NormalForm::number_operator(), k, L);
        for (unsigned l = 0; l <= k; ++l) {
            auto c = nk.coeff(l, l).eval(Rational(0), std::nullopt).as_constant();
            if (!c || (k <= 8 && *c != Rational(partitions_into_blocks(k, l)))) return false;
        }
    }
    return true;
}

bool criterion_fock_oracle() {
    return all_pass(suite_fock_oracle(200, 6, 40, 7));
}

bool criterion_eigenvalue_action() {
    StirlingTable table(10);
    for (unsigned k = 0; k <= 10; ++k) {
        NormalForm nk = nf_degenerate_power(NormalForm::number_operator(), k, L);
        FockMatrix mat = matrix_of_normal_form(nk, 0.5, 11);
        for (unsigned m = 0; m <= 10; ++m) {
            // symbolic: sum_l S(k,l) (m)_l as a lambda-polynomial
            MultiPoly symbolic;
            for (unsigned l = 0; l <= k; ++l)
                symbolic += table.entry(k, l) * MultiPoly(Rational(int_falling(m, l)));
            if (symbolic != falling_factorial(k, MultiPoly(Rational(m)), L)) return false;
            if (nf_apply_number_state(nk, m) != symbolic) return false;
            // numeric diagonal entry at lambda = 1/2; tolerance is relative
            // since (10)_{10,1/2} ~ 6e7 puts 1e-10 below the double ulp
            double expect = falling_factorial_num(m, k, 0.5);
            double scale = std::max(1.0, std::abs(expect));
            if (std::abs(mat(m, m).real() - expect) > 1e-10 * scale) return false;
        }
    }
    return true;
}

bool criterion_generating_function() {
    return generating_function_check(8);
}

bool criterion_bell_recurrence() {
    StirlingTable table(11);
    std::vector<MultiPoly> bells;
    for (unsigned k = 0; k <= 10; ++k) {
        bells.push_back(bell_poly(table, k));
        if (bell_recurrence_step(bells) != bell_poly(table, k + 1)) return false;
    }
    return true;
}

bool criterion_dobinski() {
    if (!all_pass(suite_dobinski_grid(8, 1e-10))) return false;
    // classical anchors against the set-partition oracle
    if (bell_number_brute(2) != 2 || bell_number_brute(3) != 5) return false;
    DobinskiResult b2 = dobinski_eval(2, 0.0, 1.0, 1e-10);
    DobinskiResult b3 = dobinski_eval(3, 0.0, 1.0, 1e-10);
    return std::abs(b2.unshifted - 2.0) < 5e-10 && std::abs(b3.unshifted - 5.0) < 5e-10;
}

bool criterion_coherent_states() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> re(-1.4, 1.4);
    for (int i = 0; i < 10; ++i) {
        Complex z(re(rng), re(rng));
        unsigned dim = coherent_cutoff(z);
        FockVector v = coherent_state(z, dim);
        if (std::abs(v.squaredNorm() - 1.0) > 1e-12) return false;
    }
    // |z| = 2 at the adaptive cutoff
    FockVector edge = coherent_state(Complex(2.0), coherent_cutoff(Complex(2.0)));
    if (std::abs(edge.squaredNorm() - 1.0) > 1e-12) return false;

    for (int i = 0; i < 20; ++i) {
        Complex x(re(rng), re(rng)), y(re(rng), re(rng));
        unsigned dim = std::max(coherent_cutoff(x), coherent_cutoff(y));
        FockVector vx = coherent_state(x, dim), vy = coherent_state(y, dim);
        Complex inner = (vx.adjoint() * vy).value();
        if (std::abs(inner - coherent_overlap(x, y)) > 1e-10) return false;
    }
    return true;
}

bool criterion_parser() {
    // round-trip every rendered normal form of criterion 3
    for (unsigned k = 0; k <= 12; ++k) {
        NormalForm nk = nf_degenerate_power(NormalForm::number_operator(), k, L);
        ParseResult r = parse(nk.to_expr_string());
        if (!r.ok()) return false;
        if (eval_to_normal_form(*r.ast) != nk) return false;
        ParseResult again = parse(render(*r.ast));
        if (!again.ok() || !(*again.ast == *r.ast)) return false;
    }
    // seeded fuzz: parser returns either an AST or a structured error
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<int> len(0, 1024);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 1000; ++i) {
        std::string s;
        int n = len(rng);
        for (int j = 0; j < n; ++j) s += static_cast<char>(byte(rng));
        ParseResult r = parse(s);
        if (!r.ok() && !r.error.has_value()) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"1 defining identity, n <= 12, exact", criterion_defining_identity},
        {"2 column generating function, k <= 8, order 15, exact", criterion_column_series},
        {"3 normal-ordering theorem, k <= 12, exact", criterion_normal_ordering},
        {"4 fock-matrix oracle, 200 words, D = 40, 1e-10", criterion_fock_oracle},
        {"5 eigenvalue action, m,k <= 10, exact/1e-10", criterion_eigenvalue_action},
        {"6 generating function and ODE, order 8, exact", criterion_generating_function},
        {"7 bell recurrence, k <= 10, exact", criterion_bell_recurrence},
        {"8 dobinski grid + classical anchors, 5e-10", criterion_dobinski},
        {"9 coherent-state norm and overlap, 1e-12/1e-10", criterion_coherent_states},
        {"10 parser round-trip and fuzz", criterion_parser},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cerr << "criterion " << c.name << " raised: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
