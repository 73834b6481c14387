#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boson/parser.hpp"

using namespace boson;

namespace {
AstPtr must_parse(const std::string& s) {
    ParseResult r = parse(s);
    REQUIRE_MESSAGE(r.ok(), "failed to parse: ", s,
                    " (", r.error ? r.error->message() : "", ")");
    return r.ast;
}

AstPtr random_ast(std::mt19937_64& rng, unsigned depth) {
    std::uniform_int_distribution<int> kind(0, depth == 0 ? 3 : 9);
    auto mk = [](ExprAst n) { return std::make_shared<const ExprAst>(std::move(n)); };
    switch (kind(rng)) {
        case 0: return mk({ExprAst::Kind::GeneratorA, {}, {}, 0});
        case 1: return mk({ExprAst::Kind::GeneratorAd, {}, {}, 0});
        case 2: return mk({ExprAst::Kind::Lambda, {}, {}, 0});
        case 3: {
            std::uniform_int_distribution<int> n(0, 5);
            return mk({ExprAst::Kind::Scalar, Rational(n(rng), 1 + n(rng)), {}, 0});
        }
        case 4:
        case 5: {
            std::vector<AstPtr> ch{random_ast(rng, depth - 1), random_ast(rng, depth - 1)};
            return mk({ExprAst::Kind::Add, {}, std::move(ch), 0});
        }
        case 6:
        case 7: {
            std::vector<AstPtr> ch{random_ast(rng, depth - 1), random_ast(rng, depth - 1)};
            return mk({ExprAst::Kind::Mul, {}, std::move(ch), 0});
        }
        case 8: return mk({ExprAst::Kind::Neg, {}, {random_ast(rng, depth - 1)}, 0});
        default: {
            std::uniform_int_distribution<unsigned> e(0, 3);
            return mk({ExprAst::Kind::Pow, {}, {random_ast(rng, depth - 1)}, e(rng)});
        }
    }
}
}  // namespace

TEST_CASE("grammar examples") {
    AstPtr ast = must_parse("a*ad - ad*a");
    REQUIRE(ast->kind == ExprAst::Kind::Add);
    REQUIRE(ast->children.size() == 2);
    CHECK(ast->children[0]->kind == ExprAst::Kind::Mul);
    CHECK(ast->children[1]->kind == ExprAst::Kind::Neg);

    AstPtr deg = must_parse("(N)_{3,lambda}");
    REQUIRE(deg->kind == ExprAst::Kind::DegFallingPow);
    CHECK(deg->exponent == 3);
    CHECK(deg->children[0]->kind == ExprAst::Kind::Mul);  // N desugars to ad*a

    AstPtr mix = must_parse("ad^2 * a^2 + (1 - lambda)*N");
    REQUIRE(mix->kind == ExprAst::Kind::Add);
    CHECK(mix->children[0]->kind == ExprAst::Kind::Mul);
}

TEST_CASE("syntax errors carry offsets") {
    ParseResult r = parse("a + * ad");
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->offset == 4);
    CHECK(r.error->found == "*");

    ParseResult imp = parse("a ad");  // implicit multiplication is rejected
    CHECK_FALSE(imp.ok());

    ParseResult huge = parse("a^999999");
    REQUIRE_FALSE(huge.ok());

    ParseResult empty = parse("");
    CHECK_FALSE(empty.ok());

    ParseResult badword = parse("foo + a");
    REQUIRE_FALSE(badword.ok());
    CHECK(badword.error->found == "foo");
}

TEST_CASE("evaluation examples") {
    NormalForm a_ad = eval_to_normal_form(*must_parse("a*ad"));
    CHECK(a_ad.coeff(0, 0) == MultiPoly(1));
    CHECK(a_ad.coeff(1, 1) == MultiPoly(1));

    NormalForm deg = eval_to_normal_form(*must_parse("(N)_{2,lambda}"));
    CHECK(deg.coeff(1, 1) == MultiPoly(1) - MultiPoly::lambda());
    CHECK(deg.coeff(2, 2) == MultiPoly(1));

    NormalForm sc = eval_to_normal_form(*must_parse("3/2 * a"));
    CHECK(sc.coeff(0, 1) == MultiPoly(Rational(3, 2)));
    CHECK(sc.terms().size() == 1);

    NormalForm com = eval_to_normal_form(*must_parse("a*ad - ad*a"));
    CHECK(com == NormalForm::identity());

    NormalForm ff = eval_to_normal_form(*must_parse("(N)_2"));
    CHECK(ff == eval_to_normal_form(*must_parse("N*N - N")));
}

TEST_CASE("render round trip on parsed inputs") {
    for (const char* s :
         {"a*ad - ad*a", "(N)_{3,lambda}", "ad^2 * a^2 + (1 - lambda)*N",
          "3/2 * a", "-a * (2 - lambda)^2", "(a + ad)_{2,lambda} - N_4"}) {
        AstPtr ast = must_parse(s);
        AstPtr again = must_parse(render(*ast));
        CHECK(*ast == *again);
    }
}

TEST_CASE("render round trip on random ASTs") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        AstPtr ast = random_ast(rng, 4);
        AstPtr again = must_parse(render(*ast));
        CHECK(*ast == *again);
    }
}

TEST_CASE("evaluator is a homomorphism for products") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        AstPtr x = random_ast(rng, 2), y = random_ast(rng, 2);
        ExprAst mul{ExprAst::Kind::Mul, {}, {x, y}, 0};
        CHECK(eval_to_normal_form(mul) ==
              nf_mul(eval_to_normal_form(*x), eval_to_normal_form(*y)));
    }
}

TEST_CASE("fuzzing never crashes") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> len(0, 1024);
    std::uniform_int_distribution<int> byte(0, 255);
    // half arbitrary bytes, half grammar-flavored characters
    const std::string alphabet = "ad N lambda()+-*^_{},/0123456789";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        std::string s;
        int n = len(rng);
        for (int j = 0; j < n; ++j)
            s += (i % 2) ? alphabet[pick(rng)] : static_cast<char>(byte(rng));
        ParseResult r = parse(s);
        CHECK((r.ok() || r.error.has_value()));
    }
}
