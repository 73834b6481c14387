#include "boson/parser.hpp"

#include <cctype>
#include <sstream>

namespace boson {

bool ExprAst::operator==(const ExprAst& other) const {
    if (kind != other.kind || exponent != other.exponent || scalar != other.scalar ||
        children.size() != other.children.size())
        return false;
    for (size_t i = 0; i < children.size(); ++i)
        if (!(*children[i] == *other.children[i])) return false;
    return true;
}

std::string ParseError::to_json() const {
    std::ostringstream os;
    os << "{\"offset\":" << offset << ",\"expected\":[";
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i) os << ",";
        os << "\"" << expected[i] << "\"";
    }
    os << "],\"found\":\"" << found << "\"}";
    return os.str();
}

std::string ParseError::message() const {
    std::ostringstream os;
    os << "syntax error at offset " << offset << ": found " << found << ", expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i) os << " | ";
        os << expected[i];
    }
    return os.str();
}

namespace {

constexpr unsigned kMaxExponent = 1u << 16;

struct Token {
    enum class Kind {
        Plus, Minus, Star, Caret, Underscore, LBrace, RBrace, LParen, RParen,
        Comma, Slash, Int, A, Ad, N, Lambda, End, Bad
    };
    Kind kind;
    std::string text;
    size_t offset;
};

// cpp_int reads a leading zero as an octal prefix; digit tokens are decimal
BigInt digits_to_bigint(const std::string& digits) {
    size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(digits.substr(first));
}

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        size_t at = pos_;
        if (pos_ >= src_.size()) return {Token::Kind::End, "", at};
        char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::Plus, "+", at};
            case '-': ++pos_; return {Token::Kind::Minus, "-", at};
            case '*': ++pos_; return {Token::Kind::Star, "*", at};
            case '^': ++pos_; return {Token::Kind::Caret, "^", at};
            case '_': ++pos_; return {Token::Kind::Underscore, "_", at};
            case '{': ++pos_; return {Token::Kind::LBrace, "{", at};
            case '}': ++pos_; return {Token::Kind::RBrace, "}", at};
            case '(': ++pos_; return {Token::Kind::LParen, "(", at};
            case ')': ++pos_; return {Token::Kind::RParen, ")", at};
            case ',': ++pos_; return {Token::Kind::Comma, ",", at};
            case '/': ++pos_; return {Token::Kind::Slash, "/", at};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return {Token::Kind::Int, std::string(src_.substr(start, pos_ - start)), at};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string word(src_.substr(start, pos_ - start));
            if (word == "a") return {Token::Kind::A, word, at};
            if (word == "ad") return {Token::Kind::Ad, word, at};
            if (word == "N") return {Token::Kind::N, word, at};
            if (word == "lambda") return {Token::Kind::Lambda, word, at};
            return {Token::Kind::Bad, word, at};
        }
        ++pos_;
        return {Token::Kind::Bad, std::string(1, c), at};
    }

  private:
    std::string_view src_;
    size_t pos_ = 0;
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ParseResult run() {
        AstPtr e = parse_expr();
        if (!e) return {nullptr, error_};
        if (cur_.kind != Token::Kind::End) {
            fail({"'+'", "'-'", "'*'", "end of input"});
            return {nullptr, error_};
        }
        return {e, std::nullopt};
    }

  private:
    void advance() { cur_ = lexer_.next(); }

    bool accept(Token::Kind k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }

    AstPtr fail(std::vector<std::string> expected) {
        if (!error_)  // keep the first error
            error_ = ParseError{cur_.offset, std::move(expected),
                                cur_.kind == Token::Kind::End ? "end of input" : cur_.text};
        return nullptr;
    }

    static AstPtr make(ExprAst node) { return std::make_shared<const ExprAst>(std::move(node)); }

    AstPtr parse_expr() {
        AstPtr first = parse_term();
        if (!first) return nullptr;
        std::vector<AstPtr> children{first};
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool minus = cur_.kind == Token::Kind::Minus;
            advance();
            AstPtr t = parse_term();
            if (!t) return nullptr;
            if (minus)
                t = make({ExprAst::Kind::Neg, {}, {t}, 0});
            children.push_back(t);
        }
        if (children.size() == 1) return children[0];
        return make({ExprAst::Kind::Add, {}, std::move(children), 0});
    }

    AstPtr parse_term() {
        AstPtr first = parse_factor();
        if (!first) return nullptr;
        std::vector<AstPtr> children{first};
        while (accept(Token::Kind::Star)) {
            AstPtr f = parse_factor();
            if (!f) return nullptr;
            children.push_back(f);
        }
        if (children.size() == 1) return children[0];
        return make({ExprAst::Kind::Mul, {}, std::move(children), 0});
    }

    AstPtr parse_factor() {
        if (accept(Token::Kind::Minus)) {
            AstPtr f = parse_factor();
            if (!f) return nullptr;
            return make({ExprAst::Kind::Neg, {}, {f}, 0});
        }
        AstPtr p = parse_primary();
        if (!p) return nullptr;
        if (accept(Token::Kind::Caret)) {
            std::optional<unsigned> e = parse_nat();
            if (!e) return nullptr;
            return make({ExprAst::Kind::Pow, {}, {p}, *e});
        }
        if (accept(Token::Kind::Underscore)) {
            if (accept(Token::Kind::LBrace)) {
                std::optional<unsigned> e = parse_nat();
                if (!e) return nullptr;
                if (!accept(Token::Kind::Comma)) return fail({"','"});
                if (!accept(Token::Kind::Lambda)) return fail({"'lambda'"});
                if (!accept(Token::Kind::RBrace)) return fail({"'}'"});
                return make({ExprAst::Kind::DegFallingPow, {}, {p}, *e});
            }
            std::optional<unsigned> e = parse_nat();
            if (!e) return nullptr;
            return make({ExprAst::Kind::IntFallingPow, {}, {p}, *e});
        }
        return p;
    }

    std::optional<unsigned> parse_nat() {
        if (cur_.kind != Token::Kind::Int) {
            fail({"integer"});
            return std::nullopt;
        }
        if (cur_.text.size() > 9) {
            fail({"exponent <= 2^16"});
            return std::nullopt;
        }
        unsigned long v = std::stoul(cur_.text);
        if (v > kMaxExponent) {
            fail({"exponent <= 2^16"});
            return std::nullopt;
        }
        advance();
        return static_cast<unsigned>(v);
    }

    AstPtr parse_primary() {
        switch (cur_.kind) {
            case Token::Kind::A:
                advance();
                return make({ExprAst::Kind::GeneratorA, {}, {}, 0});
            case Token::Kind::Ad:
                advance();
                return make({ExprAst::Kind::GeneratorAd, {}, {}, 0});
            case Token::Kind::N:
                advance();
                // sugar for ad * a
                return make({ExprAst::Kind::Mul, {},
                             {make({ExprAst::Kind::GeneratorAd, {}, {}, 0}),
                              make({ExprAst::Kind::GeneratorA, {}, {}, 0})},
                             0});
            case Token::Kind::Lambda:
                advance();
                return make({ExprAst::Kind::Lambda, {}, {}, 0});
            case Token::Kind::Int: {
                BigInt num = digits_to_bigint(cur_.text);
                advance();
                if (accept(Token::Kind::Slash)) {
                    if (cur_.kind != Token::Kind::Int) return fail({"integer"});
                    BigInt den = digits_to_bigint(cur_.text);
                    if (den == 0) return fail({"nonzero denominator"});
                    advance();
                    return make({ExprAst::Kind::Scalar, Rational(num, den), {}, 0});
                }
                return make({ExprAst::Kind::Scalar, Rational(num), {}, 0});
            }
            case Token::Kind::LParen: {
                advance();
                AstPtr e = parse_expr();
                if (!e) return nullptr;
                if (!accept(Token::Kind::RParen)) return fail({"')'"});
                return e;
            }
            default:
                return fail({"'a'", "'ad'", "'N'", "'lambda'", "rational", "'('"});
        }
    }

    Lexer lexer_;
    Token cur_;
    std::optional<ParseError> error_;
};

bool is_atom(const ExprAst& n) {
    switch (n.kind) {
        case ExprAst::Kind::GeneratorA:
        case ExprAst::Kind::GeneratorAd:
        case ExprAst::Kind::Lambda:
            return true;
        case ExprAst::Kind::Scalar:
            return n.scalar >= 0;
        default:
            return false;
    }
}

std::string render_wrapped(const ExprAst& n, bool atom_only) {
    std::string s = render(n);
    bool needs = atom_only ? !is_atom(n)
                           : (n.kind == ExprAst::Kind::Add || n.kind == ExprAst::Kind::Neg);
    return needs ? "(" + s + ")" : s;
}

}  // namespace

ParseResult parse(std::string_view input) {
    return Parser(input).run();
}

std::string render(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::GeneratorA: return "a";
        case ExprAst::Kind::GeneratorAd: return "ad";
        case ExprAst::Kind::Lambda: return "lambda";
        case ExprAst::Kind::Scalar:
            if (ast.scalar < 0) return "-(" + rat_to_string(-ast.scalar) + ")";
            return rat_to_string(ast.scalar);
        case ExprAst::Kind::Neg:
            return "-(" + render(*ast.children[0]) + ")";
        case ExprAst::Kind::Add: {
            std::string out;
            for (size_t i = 0; i < ast.children.size(); ++i) {
                const ExprAst& c = *ast.children[i];
                if (i == 0) {
                    if (c.kind == ExprAst::Kind::Add) out += "(" + render(c) + ")";
                    else if (c.kind == ExprAst::Kind::Neg)
                        out += "-(" + render(*c.children[0]) + ")";
                    else out += render(c);
                } else if (c.kind == ExprAst::Kind::Neg) {
                    out += " - (" + render(*c.children[0]) + ")";
                } else {
                    out += " + " + render_wrapped(c, false);
                }
            }
            return out;
        }
        case ExprAst::Kind::Mul: {
            std::string out;
            for (size_t i = 0; i < ast.children.size(); ++i) {
                const ExprAst& c = *ast.children[i];
                if (i) out += " * ";
                bool needs = c.kind == ExprAst::Kind::Add || c.kind == ExprAst::Kind::Neg ||
                             c.kind == ExprAst::Kind::Mul;
                out += needs ? "(" + render(c) + ")" : render(c);
            }
            return out;
        }
        case ExprAst::Kind::Pow:
            return render_wrapped(*ast.children[0], true) + "^" + std::to_string(ast.exponent);
        case ExprAst::Kind::DegFallingPow:
            return render_wrapped(*ast.children[0], true) + "_{" + std::to_string(ast.exponent) +
                   ",lambda}";
        case ExprAst::Kind::IntFallingPow:
            return render_wrapped(*ast.children[0], true) + "_" + std::to_string(ast.exponent);
    }
    return "";
}

NormalForm eval_to_normal_form(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::GeneratorA: return NormalForm::annihilator();
        case ExprAst::Kind::GeneratorAd: return NormalForm::creator();
        case ExprAst::Kind::Scalar: return NormalForm::scalar(MultiPoly(ast.scalar));
        case ExprAst::Kind::Lambda: return NormalForm::scalar(MultiPoly::lambda());
        case ExprAst::Kind::Neg: return -eval_to_normal_form(*ast.children[0]);
        case ExprAst::Kind::Add: {
            NormalForm out;
            for (const auto& c : ast.children) out += eval_to_normal_form(*c);
            return out;
        }
        case ExprAst::Kind::Mul: {
            NormalForm out = NormalForm::identity();
            for (const auto& c : ast.children) out = nf_mul(out, eval_to_normal_form(*c));
            return out;
        }
        case ExprAst::Kind::Pow: {
            NormalForm base = eval_to_normal_form(*ast.children[0]);
            NormalForm out = NormalForm::identity();
            for (unsigned i = 0; i < ast.exponent; ++i) out = nf_mul(out, base);
            return out;
        }
        case ExprAst::Kind::DegFallingPow:
            return nf_degenerate_power(eval_to_normal_form(*ast.children[0]), ast.exponent,
                                       MultiPoly::lambda());
        case ExprAst::Kind::IntFallingPow:
            return nf_degenerate_power(eval_to_normal_form(*ast.children[0]), ast.exponent,
                                       MultiPoly(1));
    }
    return {};
}

}  // namespace boson
