#include "boson/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "boson/degen.hpp"
#include "boson/fock.hpp"
#include "boson/normal_form.hpp"

namespace boson {

std::string CheckReport::to_json() const {
    std::ostringstream os;
    os << "{\"check\":\"" << check << "\",\"params\":" << params_json
       << ",\"pass\":" << (pass ? "true" : "false") << ",\"max_error\":";
    if (max_error)
        os << *max_error;
    else
        os << "null";
    os << "}";
    return os.str();
}

namespace {
std::string params(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ",";
        first = false;
        os << "\"" << k << "\":" << v;
    }
    os << "}";
    return os.str();
}
}  // namespace

Report suite_defining_identity(unsigned max_n) {
    StirlingTable table(max_n);
    Report out;
    for (unsigned n = 0; n <= max_n; ++n)
        out.push_back({"defining-identity", params({{"n", std::to_string(n)}}),
                       verify_defining_identity(table, n), std::nullopt});
    return out;
}

Report suite_column_series(unsigned max_k, unsigned order) {
    StirlingTable table(order);
    Report out;
    for (unsigned k = 0; k <= max_k; ++k) {
        Series col = stirling_column_series(k, order);
        bool ok = true;
        for (unsigned n = 0; n <= order; ++n)
            if (col[n] != table.entry(n, k)) ok = false;
        out.push_back({"column-series",
                       params({{"k", std::to_string(k)}, {"order", std::to_string(order)}}),
                       ok, std::nullopt});
    }
    return out;
}

Report suite_normal_ordering(unsigned max_k) {
    StirlingTable table(max_k);
    Report out;
    for (unsigned k = 0; k <= max_k; ++k)
        out.push_back({"normal-ordering", params({{"k", std::to_string(k)}}),
                       verify_normal_ordering_theorem(k, table), std::nullopt});
    return out;
}

Report suite_fock_oracle(unsigned words, unsigned max_len, unsigned dim,
                         unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> len_dist(1, max_len);
    std::uniform_int_distribution<int> gen_dist(0, 1);
    Report out;
    for (unsigned w = 0; w < words; ++w) {
        std::vector<Generator> word(len_dist(rng));
        std::string spelled;
        for (auto& g : word) {
            g = gen_dist(rng) ? Generator::Create : Generator::Annihilate;
            spelled += g == Generator::Create ? "ad " : "a ";
        }
        bool ok = true;
        for (double lam : {0.0, 0.5})
            ok = ok && oracle_check(word, lam, dim);
        out.push_back({"fock-oracle",
                       params({{"word", "\"" + spelled + "\""},
                               {"dim", std::to_string(dim)},
                               {"seed", std::to_string(seed)}}),
                       ok, std::nullopt});
    }
    return out;
}

Report suite_generating_function(unsigned order) {
    Report out;
    out.push_back({"generating-function", params({{"order", std::to_string(order)}}),
                   generating_function_check(order), std::nullopt});
    return out;
}

Report suite_bell_recurrence(unsigned max_k) {
    StirlingTable table(max_k + 1);
    Report out;
    std::vector<MultiPoly> bells;
    for (unsigned k = 0; k <= max_k; ++k) {
        bells.push_back(bell_poly(table, k));
        MultiPoly stepped = bell_recurrence_step(bells);
        out.push_back({"bell-recurrence", params({{"k", std::to_string(k)}}),
                       stepped == bell_poly(table, k + 1), std::nullopt});
    }
    return out;
}

Report suite_dobinski_grid(unsigned max_k, double tol) {
    const std::vector<std::pair<Rational, const char*>> lambdas = {
        {Rational(0), "0"},      {Rational(1, 4), "1/4"}, {Rational(1, 2), "1/2"},
        {Rational(1), "1"},      {Rational(-1, 2), "-1/2"}};
    const std::vector<std::pair<Rational, const char*>> xs = {
        {Rational(1, 2), "1/2"}, {Rational(1), "1"}, {Rational(2), "2"}};
    Report out;
    for (unsigned k = 1; k <= max_k; ++k) {
        MultiPoly phi = bell_poly(k);
        for (const auto& [lam, lam_s] : lambdas) {
            for (const auto& [x, x_s] : xs) {
                double exact = rat_to_double(phi.eval_full(lam, x));
                bool ok = true;
                double err = 0.0;
                try {
                    DobinskiResult r =
                        dobinski_eval(k, rat_to_double(lam), rat_to_double(x), tol);
                    err = std::max(std::abs(r.unshifted - exact),
                                   std::abs(r.shifted - exact));
                    ok = err < 5.0 * tol && std::abs(r.unshifted - r.shifted) < 2.0 * tol;
                } catch (const std::exception&) {
                    ok = false;
                }
                out.push_back({"dobinski-grid",
                               params({{"k", std::to_string(k)},
                                       {"lambda", std::string("\"") + lam_s + "\""},
                                       {"x", std::string("\"") + x_s + "\""}}),
                               ok, err});
            }
        }
    }
    return out;
}

Report suite_euler_operator(unsigned max_n, unsigned max_degree, unsigned samples,
                            unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    Report out;
    for (unsigned s = 0; s < samples; ++s) {
        MultiPoly p;
        for (unsigned d = 0; d <= max_degree; ++d)
            p += MultiPoly::monomial(0, d, Rational(coeff_dist(rng)));
        bool ok = true;
        for (unsigned n = 0; n <= max_n; ++n)
            ok = ok && euler_operator_degenerate(p, n).agree();
        out.push_back({"euler-operator",
                       params({{"sample", std::to_string(s)},
                               {"max_n", std::to_string(max_n)},
                               {"seed", std::to_string(seed)}}),
                       ok, std::nullopt});
    }
    return out;
}

std::optional<Report> run_suite(const std::string& name, unsigned size,
                                unsigned words, unsigned long seed) {
    if (name == "defining-identity") return suite_defining_identity(size ? size : 12);
    if (name == "column-series") return suite_column_series(size ? size : 8);
    if (name == "normal-ordering") return suite_normal_ordering(size ? size : 12);
    if (name == "fock-oracle") return suite_fock_oracle(words ? words : 50, 6, 40, seed);
    if (name == "generating-function") return suite_generating_function(size ? size : 8);
    if (name == "bell-recurrence") return suite_bell_recurrence(size ? size : 10);
    if (name == "dobinski-grid") return suite_dobinski_grid(size ? size : 8);
    if (name == "euler-operator") return suite_euler_operator(size ? size : 8, 6, 20, seed);
    return std::nullopt;
}

}  // namespace boson
