#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace incr {

enum class binary_op { add, sub, mul, div };

struct formula;
using formula_ptr = std::shared_ptr<const formula>;

// Arithmetic over named cells: literals, cell references, unary negation,
// and the four binary operators. Immutable once built; share freely.
struct formula {
    struct number {
        double v;
    };
    struct cell_ref {
        std::string name;
    };
    struct negate {
        formula_ptr operand;
    };
    struct binary {
        binary_op op;
        formula_ptr lhs;
        formula_ptr rhs;
    };

    std::variant<number, cell_ref, negate, binary> node;
};

formula_ptr make_number(double v);
formula_ptr make_cell_ref(std::string name);
formula_ptr make_negate(formula_ptr operand);
formula_ptr make_binary(binary_op op, formula_ptr lhs, formula_ptr rhs);

// Recursive-descent parser. * and / bind tighter than + and -, all four
// are left-associative, parentheses group, whitespace is free. Cell names
// match [A-Za-z][A-Za-z0-9]*. Throws parse_error with a 1-based column.
formula_ptr parse_formula(std::string_view text);

// True when text is a well-formed cell name.
bool is_cell_name(std::string_view text);

}  // namespace incr
