#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <variant>

namespace incr {

// Identity token for a node owned by an engine. Plain data: copy it, compare
// it, stick it in containers. Ids from different engines never compare equal
// (each engine stamps its own tag), and an engine rejects foreign ids.
struct node_id {
    std::uint32_t engine_tag = 0;
    std::uint32_t index = 0;

    friend bool operator==(node_id, node_id) = default;
};

struct node_id_hash {
    std::size_t operator()(node_id id) const {
        const std::uint64_t packed = (std::uint64_t{id.engine_tag} << 32) | id.index;
        return std::hash<std::uint64_t>{}(packed);
    }
};

class value;

value num(double v);
value boolean(bool v);
value sym(std::string name);
value nil();
value cons(value car, value cdr);
value node_ref(node_id id);

// Dynamically tagged value: number, boolean, symbol, pair, nil, or a node
// reference. Pairs are shared mutable cells — copying a value aliases the
// same cell, and set_car/set_cdr are visible through every alias. That
// aliasing is load-bearing: memo tables key on structural content, so a
// mutated pair can make an old cache entry match a new probe.
class value {
public:
    value() = default;  // nil

    bool is_nil() const { return std::holds_alternative<std::monostate>(rep_); }
    bool is_num() const { return std::holds_alternative<double>(rep_); }
    bool is_bool() const { return std::holds_alternative<bool>(rep_); }
    bool is_sym() const { return std::holds_alternative<std::string>(rep_); }
    bool is_pair() const { return std::holds_alternative<pair_ptr>(rep_); }
    bool is_node() const { return std::holds_alternative<node_id>(rep_); }

    // Accessors throw usage_error when the tag does not match.
    double as_num() const;
    bool as_bool() const;
    const std::string& as_sym() const;
    node_id as_node() const;

    value car() const;
    value cdr() const;
    void set_car(value v);
    void set_cdr(value v);

    friend value num(double v);
    friend value boolean(bool v);
    friend value sym(std::string name);
    friend value nil();
    friend value cons(value car, value cdr);
    friend value node_ref(node_id id);
    friend bool structural_equal(const value& a, const value& b);
    friend std::string to_string(const value& v);

private:
    struct pair_cell;
    using pair_ptr = std::shared_ptr<pair_cell>;
    using rep = std::variant<std::monostate, double, bool, std::string, pair_ptr, node_id>;

    explicit value(rep r) : rep_(std::move(r)) {}

    const pair_ptr& pair_or_throw() const;

    rep rep_;
};

struct value::pair_cell {
    value car;
    value cdr;
};

// Deep equality: pairs by content, node references by identity.
bool structural_equal(const value& a, const value& b);

// Dotted-pair notation: (cons 1 2) -> "(1 . 2)",
// proper lists collapse: (cons 1 (cons 2 nil)) -> "(1 2)".
std::string to_string(const value& v);

// Renders a double. Integral values print without a fractional part
// ("3", not "3.000000"); everything else prints shortest-round-trip.
std::string format_number(double v);

// Builds a proper list: make_list({a, b, c}) == (a b c).
value make_list(std::initializer_list<value> items);

}  // namespace incr
