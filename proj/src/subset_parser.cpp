#include <cctype>
#include <charconv>
#include <optional>

#include "qdensity/errors.hpp"
#include "qdensity/subsets.hpp"

namespace qdensity::subsets {

namespace {

struct Token {
    enum class Kind { Int, Word, Bar, End } kind;
    std::string_view text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == text_.size()) return {Token::Kind::End, {}, pos_};
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == '|') {
            ++pos_;
            return {Token::Kind::Bar, text_.substr(start, 1), start};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Token::Kind::Int, text_.substr(start, pos_ - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Token::Kind::Word, text_.substr(start, pos_ - start), start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    SubsetSpec parse_spec() {
        std::vector<SubsetSpec> terms;
        terms.push_back(parse_term());
        while (current_.kind == Token::Kind::Bar) {
            advance();
            terms.push_back(parse_term());
        }
        if (current_.kind != Token::Kind::End) {
            throw ParseError("expected '|' or end of input", current_.pos);
        }
        if (terms.size() == 1) return std::move(terms.front());
        return SubsetSpec::union_of(std::move(terms));
    }

private:
    void advance() { current_ = lexer_.next(); }

    std::uint64_t expect_int(const char* what) {
        if (current_.kind != Token::Kind::Int) {
            throw ParseError(std::string("expected integer ") + what, current_.pos);
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(current_.text.data(),
                                         current_.text.data() + current_.text.size(), value);
        if (ec != std::errc{}) throw ParseError("integer out of range", current_.pos);
        advance();
        return value;
    }

    void expect_word(std::string_view word) {
        if (current_.kind != Token::Kind::Word || current_.text != word) {
            throw ParseError("expected '" + std::string(word) + "'", current_.pos);
        }
        advance();
    }

    SubsetSpec parse_term() {
        const std::size_t start = current_.pos;
        if (current_.kind == Token::Kind::Word && current_.text == "all") {
            advance();
            return SubsetSpec::all();
        }
        if (current_.kind == Token::Kind::Word && current_.text == "kfree") {
            advance();
            auto k = expect_int("power k");
            auto n = expect_int("prime bound N");
            if (k < 2) throw ParseError("kfree requires k >= 2", start);
            if (n < 2) throw ParseError("kfree requires N >= 2", start);
            if (k > 64) throw ParseError("kfree power k must be at most 64", start);
            return SubsetSpec::kfree(static_cast<unsigned>(k), n);
        }
        if (current_.kind == Token::Kind::Int) {
            auto r = expect_int("residue");
            expect_word("mod");
            auto t = expect_int("modulus");
            if (t == 0) throw ParseError("modulus must be >= 1", start);
            if (r > t) throw ParseError("residue must satisfy 0 <= r < t", start);
            // "t mod t" names the multiples of t.
            return SubsetSpec::progression(r == t ? 0 : r, t);
        }
        throw ParseError("expected 'r mod t', 'kfree k N' or 'all'", start);
    }

    Lexer lexer_;
    Token current_{Token::Kind::End, {}, 0};
};

} // namespace

SubsetSpec parse(std::string_view text) { return Parser(text).parse_spec(); }

} // namespace qdensity::subsets
