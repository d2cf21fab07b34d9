#include "incr/sheet.hpp"

#include "incr/errors.hpp"

#include <utility>

namespace incr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void sheet::cell_set(const std::string& name, formula_ptr f) {
    if (!is_cell_name(name)) throw usage_error("invalid cell name: '" + name + "'");
    // The cell's expression: evaluate the formula against whatever the
    // sheet's cells resolve to at read time.
    computation expr = [this, f = std::move(f)](engine&) { return num(eval(*f)); };
    const auto it = cells_.find(name);
    if (it == cells_.end()) {
        cells_.emplace(name, avar(engine_, std::move(expr)));
    } else {
        it->second.set(engine_, std::move(expr));
    }
}

void sheet::cell_set(const std::string& name, std::string_view formula_text) {
    cell_set(name, parse_formula(formula_text));
}

double sheet::cell_get(const std::string& name) {
    const auto it = cells_.find(name);
    if (it == cells_.end()) throw eval_error("unknown cell: " + name);
    return it->second.get(engine_).as_num();
}

double sheet::eval(const formula& f) {
    return std::visit(
        overloaded{
            [](const formula::number& n) { return n.v; },
            [this](const formula::cell_ref& r) {
                const auto it = cells_.find(r.name);
                if (it == cells_.end()) throw eval_error("unknown cell: " + r.name);
                return it->second.get(engine_).as_num();
            },
            [this](const formula::negate& n) { return -eval(*n.operand); },
            [this](const formula::binary& b) -> double {
                const double lhs = eval(*b.lhs);
                const double rhs = eval(*b.rhs);
                switch (b.op) {
                    case binary_op::add: return lhs + rhs;
                    case binary_op::sub: return lhs - rhs;
                    case binary_op::mul: return lhs * rhs;
                    case binary_op::div:
                        if (rhs == 0) throw eval_error("division by zero");
                        return lhs / rhs;
                }
                throw usage_error("corrupt formula: bad binary operator");
            },
        },
        f.node);
}

std::vector<sheet::cell_info> sheet::cells() const {
    std::vector<cell_info> out;
    out.reserve(cells_.size());
    for (const auto& [name, av] : cells_) {
        std::optional<double> val;
        // The ref holds the cell's current expression node. Show a value
        // only when that expression is clean — i.e. nothing it depends on
        // changed since it was last evaluated.
        if (const auto stored = engine_.cached_result(av.ref_node())) {
            const node_id expr = stored->as_node();
            if (engine_.is_clean(expr)) {
                if (const auto cached = engine_.cached_result(expr)) val = cached->as_num();
            }
        }
        out.push_back(cell_info{name, val});
    }
    return out;
}

std::uint64_t sheet::stats_take() {
    const std::uint64_t now = engine_.recompute_count();
    const std::uint64_t delta = now - stats_baseline_;
    stats_baseline_ = now;
    return delta;
}

}  // namespace incr
