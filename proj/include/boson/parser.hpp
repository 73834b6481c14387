#pragma once

#include <memory>
#include <string>
#include <vector>

#include "boson/normal_form.hpp"
#include "boson/rational.hpp"

namespace boson {

// AST for textual boson expressions. N is desugared to Mul(ad, a) at parse
// time; it never appears as a node.
struct ExprAst;
using AstPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
    enum class Kind {
        GeneratorA,
        GeneratorAd,
        Scalar,
        Lambda,
        Add,
        Mul,
        Neg,
        Pow,
        DegFallingPow,  // (.)_{k,lambda}
        IntFallingPow,  // (.)_k
    };

    Kind kind;
    Rational scalar;            // Scalar
    std::vector<AstPtr> children;  // Add, Mul (>= 2); Neg/Pow/FallingPow (1)
    unsigned exponent = 0;      // Pow, DegFallingPow, IntFallingPow

    bool operator==(const ExprAst& other) const;
};

// Position-annotated syntax error: {"offset": int, "expected": [...], "found": tok}.
struct ParseError {
    size_t offset;
    std::vector<std::string> expected;
    std::string found;

    std::string to_json() const;
    std::string message() const;
};

struct ParseResult {
    AstPtr ast;                       // null on error
    std::optional<ParseError> error;  // set on error
    bool ok() const { return ast != nullptr; }
};

// Parses the grammar
//   expr    := term { ("+"|"-") term }
//   term    := factor { "*" factor }
//   factor  := [ "-" ] primary [ "^" nat | "_{" nat "," "lambda" "}" | "_" nat ]
//   primary := "a" | "ad" | "N" | "lambda" | rational | "(" expr ")"
// Whitespace-insensitive; implicit multiplication is rejected; exponents
// above 2^16 are an error. Never throws on arbitrary byte input.
ParseResult parse(std::string_view input);

// Canonical grammar text; parse(render(ast)) yields an identical AST.
std::string render(const ExprAst& ast);

// Maps the AST through the normal-ordering algebra.
NormalForm eval_to_normal_form(const ExprAst& ast);

}  // namespace boson
