#include "incr/formula.hpp"

#include "incr/errors.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace incr {

formula_ptr make_number(double v) {
    return std::make_shared<formula>(formula{formula::number{v}});
}

formula_ptr make_cell_ref(std::string name) {
    return std::make_shared<formula>(formula{formula::cell_ref{std::move(name)}});
}

formula_ptr make_negate(formula_ptr operand) {
    return std::make_shared<formula>(formula{formula::negate{std::move(operand)}});
}

formula_ptr make_binary(binary_op op, formula_ptr lhs, formula_ptr rhs) {
    return std::make_shared<formula>(formula{formula::binary{op, std::move(lhs), std::move(rhs)}});
}

bool is_cell_name(std::string_view text) {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    for (char c : text.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor)*
// factor := number | cell | '-' factor | '(' expr ')'
class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    formula_ptr run() {
        formula_ptr f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("expected end of input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    // The character at the cursor after whitespace, or '\0' at end.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    formula_ptr expr() {
        formula_ptr lhs = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            lhs = make_binary(c == '+' ? binary_op::add : binary_op::sub, std::move(lhs), term());
        }
    }

    formula_ptr term() {
        formula_ptr lhs = factor();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            lhs = make_binary(c == '*' ? binary_op::mul : binary_op::div, std::move(lhs), factor());
        }
    }

    formula_ptr factor() {
        const char c = peek();
        if (c == '\0') fail("expected a number, cell name, or '('");
        if (c == '-') {
            ++pos_;
            return make_negate(factor());
        }
        if (c == '(') {
            ++pos_;
            formula_ptr inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return cell();
        fail(std::string("unexpected character '") + c + "'");
    }

    formula_ptr number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("expected digits after '.'");
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        double v = 0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (res.ec != std::errc{}) {
            pos_ = start;
            fail("bad number");
        }
        return make_number(v);
    }

    formula_ptr cell() {
        const std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return make_cell_ref(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

formula_ptr parse_formula(std::string_view text) {
    return parser(text).run();
}

}  // namespace incr
