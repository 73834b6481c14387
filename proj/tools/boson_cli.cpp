#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "boson/degen.hpp"
#include "boson/fock.hpp"
#include "boson/normal_form.hpp"
#include "boson/parser.hpp"
#include "boson/verify.hpp"

namespace {

using namespace boson;

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitResource = 3;

std::optional<Rational> parse_lambda_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return rat_parse(s);
}

NormalForm specialize_lambda(const NormalForm& f, const Rational& lam) {
    NormalForm out;
    for (const auto& [w, c] : f.terms()) out.add_term(w, c.eval(lam, std::nullopt));
    return out;
}

int cmd_stirling(unsigned max_n, const std::string& lambda_str, const std::string& format) {
    if (max_n > 200) {
        std::cerr << "stirling: max-n exceeds the resource cap of 200\n";
        return kExitResource;
    }
    auto lam = parse_lambda_flag(lambda_str);
    StirlingTable table(max_n);
    auto cell = [&](unsigned n, unsigned k) {
        MultiPoly e = table.entry(n, k);
        if (lam) e = e.eval(*lam, std::nullopt);
        return e.to_string();
    };
    if (format == "json") {
        std::cout << "{\"max_n\":" << max_n << ",\"rows\":[";
        for (unsigned n = 0; n <= max_n; ++n) {
            if (n) std::cout << ",";
            std::cout << "[";
            for (unsigned k = 0; k <= n; ++k) {
                if (k) std::cout << ",";
                std::cout << "\"" << cell(n, k) << "\"";
            }
            std::cout << "]";
        }
        std::cout << "]}\n";
    } else {
        const char* sep = format == "csv" ? "," : ", ";
        for (unsigned n = 0; n <= max_n; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                if (k) std::cout << sep;
                std::cout << cell(n, k);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bell(unsigned n, const std::string& lambda_str, const std::string& x_str,
             const std::string& format) {
    if (n > 200) {
        std::cerr << "bell: n exceeds the resource cap of 200\n";
        return kExitResource;
    }
    MultiPoly phi = bell_poly(n);
    auto lam = parse_lambda_flag(lambda_str);
    std::optional<Rational> x;
    if (!x_str.empty()) x = rat_parse(x_str);
    MultiPoly out = phi.eval(lam, x);
    if (format == "json")
        std::cout << out.to_json() << "\n";
    else
        std::cout << out.to_string() << "\n";
    return 0;
}

int cmd_normal_order(const std::string& expr, const std::string& lambda_str,
                     const std::string& format) {
    ParseResult res = parse(expr);
    if (!res.ok()) {
        std::cerr << res.error->to_json() << "\n";
        return kExitBadFlags;
    }
    NormalForm nf = eval_to_normal_form(*res.ast);
    if (auto lam = parse_lambda_flag(lambda_str)) nf = specialize_lambda(nf, *lam);
    if (format == "json")
        std::cout << nf.to_json() << "\n";
    else
        std::cout << nf.to_string() << "\n";
    return 0;
}

int cmd_dobinski(unsigned k, const std::string& lambda_str, const std::string& x_str,
                 double tol) {
    Rational lam = lambda_str.empty() ? Rational(0) : rat_parse(lambda_str);
    double x = x_str.find('/') != std::string::npos ? rat_to_double(rat_parse(x_str))
                                                    : std::stod(x_str);
    double lam_d = rat_to_double(lam);
    double exact = 0.0;
    {
        MultiPoly phi = bell_poly(k);
        for (const auto& [mono, q] : phi.terms())
            exact += rat_to_double(q) * std::pow(lam_d, mono.lambda) * std::pow(x, mono.x);
    }
    try {
        DobinskiResult r = dobinski_eval(k, lam_d, x, tol);
        double err_u = std::abs(r.unshifted - exact);
        double err_s = std::abs(r.shifted - exact);
        std::cout << "unshifted " << r.unshifted << "\n"
                  << "shifted   " << r.shifted << "\n"
                  << "exact     " << exact << "\n"
                  << "error     " << err_u << " " << err_s << "\n"
                  << "terms     " << r.terms_used << "\n";
        return (err_u < 5 * tol && err_s < 5 * tol) ? 0 : kExitCheckFailed;
    } catch (const std::runtime_error& e) {
        std::cerr << "dobinski: " << e.what() << "\n";
        return kExitResource;
    }
}

int cmd_verify(const std::string& suite, unsigned size, unsigned words,
               unsigned long seed) {
    auto report = run_suite(suite, size, words, seed);
    if (!report) {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return kExitBadFlags;
    }
    for (const auto& line : *report) std::cout << line.to_json() << "\n";
    return all_pass(*report) ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normal ordering of degenerate powers of the boson number operator"};
    app.require_subcommand(1);

    std::string format = "plain", lambda_str, x_str, expr, suite;
    unsigned max_n = 8, bell_n = 0, dob_k = 1, size = 0, words = 0;
    double tol = 1e-10;
    unsigned long seed = 7;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    auto* st = app.add_subcommand("stirling", "Degenerate Stirling triangle");
    st->add_option("--max-n", max_n, "Largest row")->required();
    st->add_option("--lambda", lambda_str, "Rational lambda value (default symbolic)");
    add_format(st);

    auto* be = app.add_subcommand("bell", "Degenerate Bell polynomial");
    be->add_option("--n", bell_n, "Index")->required();
    be->add_option("--lambda", lambda_str, "Rational lambda value");
    be->add_option("--x", x_str, "Rational x value");
    add_format(be);

    auto* no = app.add_subcommand("normal-order", "Normal-order a boson expression");
    no->add_option("expr", expr, "Expression, e.g. \"(N)_{2,lambda}\"")->required();
    no->add_option("--lambda", lambda_str, "Rational lambda value");
    add_format(no);

    auto* db = app.add_subcommand("dobinski", "Dobinski-like series evaluation");
    db->add_option("--k", dob_k, "Index, k >= 1")->required()->check(CLI::PositiveNumber);
    db->add_option("--lambda", lambda_str, "Rational lambda value");
    db->add_option("--x", x_str, "Evaluation point, x >= 0")->required();
    db->add_option("--tol", tol, "Tail tolerance");

    auto* vf = app.add_subcommand("verify", "Run an identity-verification suite");
    vf->add_option("--suite", suite, "Suite name")->required();
    vf->add_option("--size", size, "Size parameter (max n or k; suite default if 0)");
    vf->add_option("--max-k", size, "Alias for --size");
    vf->add_option("--max-n", size, "Alias for --size");
    vf->add_option("--words", words, "Number of random words (fock-oracle)");
    vf->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : kExitBadFlags;
    }

    try {
        if (st->parsed()) return cmd_stirling(max_n, lambda_str, format);
        if (be->parsed()) return cmd_bell(bell_n, lambda_str, x_str, format);
        if (no->parsed()) return cmd_normal_order(expr, lambda_str, format);
        if (db->parsed()) return cmd_dobinski(dob_k, lambda_str, x_str, tol);
        if (vf->parsed()) return cmd_verify(suite, size, words, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitBadFlags;
}
