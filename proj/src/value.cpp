#include "incr/value.hpp"

#include "incr/errors.hpp"

#include <charconv>
#include <cmath>
#include <utility>

namespace incr {

value num(double v) { return value(value::rep{v}); }
value boolean(bool v) { return value(value::rep{v}); }
value sym(std::string name) { return value(value::rep{std::move(name)}); }
value nil() { return value(); }

value cons(value car, value cdr) {
    auto cell = std::make_shared<value::pair_cell>();
    cell->car = std::move(car);
    cell->cdr = std::move(cdr);
    return value(value::rep{std::move(cell)});
}

value node_ref(node_id id) { return value(value::rep{id}); }

double value::as_num() const {
    if (const double* p = std::get_if<double>(&rep_)) return *p;
    throw usage_error("value is not a number: " + to_string(*this));
}

bool value::as_bool() const {
    if (const bool* p = std::get_if<bool>(&rep_)) return *p;
    throw usage_error("value is not a boolean: " + to_string(*this));
}

const std::string& value::as_sym() const {
    if (const std::string* p = std::get_if<std::string>(&rep_)) return *p;
    throw usage_error("value is not a symbol: " + to_string(*this));
}

node_id value::as_node() const {
    if (const node_id* p = std::get_if<node_id>(&rep_)) return *p;
    throw usage_error("value is not a node reference: " + to_string(*this));
}

const value::pair_ptr& value::pair_or_throw() const {
    if (const pair_ptr* p = std::get_if<pair_ptr>(&rep_)) return *p;
    throw usage_error("value is not a pair: " + to_string(*this));
}

value value::car() const { return pair_or_throw()->car; }
value value::cdr() const { return pair_or_throw()->cdr; }
void value::set_car(value v) { pair_or_throw()->car = std::move(v); }
void value::set_cdr(value v) { pair_or_throw()->cdr = std::move(v); }

bool structural_equal(const value& a, const value& b) {
    if (a.rep_.index() != b.rep_.index()) return false;
    if (a.is_nil()) return true;
    if (a.is_num()) return std::get<double>(a.rep_) == std::get<double>(b.rep_);
    if (a.is_bool()) return std::get<bool>(a.rep_) == std::get<bool>(b.rep_);
    if (a.is_sym()) return std::get<std::string>(a.rep_) == std::get<std::string>(b.rep_);
    if (a.is_node()) return std::get<node_id>(a.rep_) == std::get<node_id>(b.rep_);
    // Pairs: same cell is trivially equal, otherwise compare contents.
    const auto& pa = std::get<value::pair_ptr>(a.rep_);
    const auto& pb = std::get<value::pair_ptr>(b.rep_);
    if (pa == pb) return true;
    return structural_equal(pa->car, pb->car) && structural_equal(pa->cdr, pb->cdr);
}

std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

void render(const value& v, std::string& out) {
    if (v.is_nil()) {
        out += "()";
    } else if (v.is_num()) {
        out += format_number(v.as_num());
    } else if (v.is_bool()) {
        out += v.as_bool() ? "#t" : "#f";
    } else if (v.is_sym()) {
        out += v.as_sym();
    } else if (v.is_node()) {
        out += "#<node " + std::to_string(v.as_node().index) + ">";
    } else {
        // Pair: walk the cdr chain, switching to dot notation at a non-list tail.
        out += '(';
        value cur = v;
        for (;;) {
            render(cur.car(), out);
            value tail = cur.cdr();
            if (tail.is_nil()) break;
            if (!tail.is_pair()) {
                out += " . ";
                render(tail, out);
                break;
            }
            out += ' ';
            cur = tail;
        }
        out += ')';
    }
}

}  // namespace

std::string to_string(const value& v) {
    std::string out;
    render(v, out);
    return out;
}

value make_list(std::initializer_list<value> items) {
    value out = nil();
    const value* base = items.begin();
    for (std::size_t i = items.size(); i > 0; --i) {
        out = cons(base[i - 1], std::move(out));
    }
    return out;
}

}  // namespace incr
