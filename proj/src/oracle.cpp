#include "incr/oracle.hpp"

#include "incr/errors.hpp"
#include "incr/value.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>

namespace incr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double eval_formula(const std::map<std::string, formula_ptr>& defs, const formula& f,
                    std::set<std::string>& visiting) {
    return std::visit(
        overloaded{
            [](const formula::number& n) { return n.v; },
            [&](const formula::cell_ref& r) {
                const auto it = defs.find(r.name);
                if (it == defs.end()) throw eval_error("unknown cell: " + r.name);
                if (!visiting.insert(r.name).second) {
                    throw cycle_error("cycle through cell: " + r.name);
                }
                const double v = eval_formula(defs, *it->second, visiting);
                visiting.erase(r.name);
                return v;
            },
            [&](const formula::negate& n) { return -eval_formula(defs, *n.operand, visiting); },
            [&](const formula::binary& b) -> double {
                const double lhs = eval_formula(defs, *b.lhs, visiting);
                const double rhs = eval_formula(defs, *b.rhs, visiting);
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

}  // namespace

void formula_graph::set(const std::string& name, formula_ptr f) {
    if (!is_cell_name(name)) throw usage_error("invalid cell name: '" + name + "'");
    defs_[name] = std::move(f);
}

void formula_graph::set(const std::string& name, std::string_view formula_text) {
    set(name, parse_formula(formula_text));
}

double formula_graph::eval(const std::string& name) const {
    const auto it = defs_.find(name);
    if (it == defs_.end()) throw eval_error("unknown cell: " + name);
    std::set<std::string> visiting{name};
    return eval_formula(defs_, *it->second, visiting);
}

namespace {

// Generation-time guards. Values stay finite and exactly representable so
// the engine and the referee agree bit-for-bit; expansion sizes stay small
// so the uncached referee stays affordable even on adversarial seeds.
constexpr double max_magnitude = 1e12;
constexpr std::size_t max_expansion = 500;

// Nodes visited by a from-scratch eval of f under the given per-cell costs.
std::size_t expansion_size(const formula& f, const std::map<std::string, std::size_t>& cell_cost) {
    return std::visit(
        overloaded{
            [](const formula::number&) -> std::size_t { return 1; },
            [&](const formula::cell_ref& r) -> std::size_t {
                return 1 + cell_cost.at(r.name);
            },
            [&](const formula::negate& n) -> std::size_t {
                return 1 + expansion_size(*n.operand, cell_cost);
            },
            [&](const formula::binary& b) -> std::size_t {
                return 1 + expansion_size(*b.lhs, cell_cost) + expansion_size(*b.rhs, cell_cost);
            },
        },
        f.node);
}

}  // namespace

std::vector<std::string> random_trace(std::uint64_t seed, std::size_t n_cells, std::size_t n_ops) {
    if (n_cells == 0) throw usage_error("random_trace: need at least one cell");

    std::mt19937_64 rng(seed);
    const auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    std::vector<std::string> names;
    names.reserve(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) names.push_back("c" + std::to_string(i));

    formula_graph sim;
    std::map<std::string, formula_ptr> defs;          // mirror of sim, for sizing
    std::vector<std::size_t> defined;                 // indices with a formula
    std::vector<bool> is_defined(n_cells, false);

    // Re-derive every defined cell's from-scratch cost. Formulas only
    // reference lower indices, so one low-to-high pass settles it.
    std::map<std::string, std::size_t> cost;
    const auto recost = [&] {
        cost.clear();
        for (std::size_t i = 0; i < n_cells; ++i) {
            if (is_defined[i]) cost[names[i]] = expansion_size(*defs[names[i]], cost);
        }
    };

    // An operand for a formula of cell i: a defined cell below i, or a
    // small constant. Constants dominate slightly, which keeps expected
    // expansion sizes O(1).
    const auto operand = [&](std::size_t i) -> formula_ptr {
        std::vector<std::size_t> below;
        for (std::size_t j : defined) {
            if (j < i) below.push_back(j);
        }
        if (!below.empty() && pick(5) < 2) {
            return make_cell_ref(names[below[pick(below.size())]]);
        }
        return make_number(static_cast<double>(1 + pick(9)));
    };

    const auto render = [](const formula& f) {
        std::string out;
        const std::function<void(const formula&, bool)> walk = [&](const formula& g, bool parens) {
            std::visit(
                overloaded{
                    [&](const formula::number& n) { out += format_number(n.v); },
                    [&](const formula::cell_ref& r) { out += r.name; },
                    [&](const formula::negate& n) {
                        out += '-';
                        walk(*n.operand, true);
                    },
                    [&](const formula::binary& b) {
                        if (parens) out += '(';
                        walk(*b.lhs, true);
                        switch (b.op) {
                            case binary_op::add: out += " + "; break;
                            case binary_op::sub: out += " - "; break;
                            case binary_op::mul: out += " * "; break;
                            case binary_op::div: out += " / "; break;
                        }
                        walk(*b.rhs, true);
                        if (parens) out += ')';
                    },
                },
                g.node);
        };
        walk(f, false);
        return out;
    };

    const auto accept = [&](std::size_t i, formula_ptr f) {
        sim.set(names[i], f);
        defs[names[i]] = std::move(f);
        if (!is_defined[i]) {
            is_defined[i] = true;
            defined.push_back(i);
        }
        recost();
    };

    std::vector<std::string> lines;
    lines.reserve(n_ops);
    for (std::size_t op = 0; op < n_ops; ++op) {
        const bool do_set = defined.empty() || pick(10) < 4;
        if (do_set) {
            const std::size_t i = pick(n_cells);
            formula_ptr f;
            if (pick(4) == 0) {
                f = make_number(static_cast<double>(pick(100)));
            } else {
                const binary_op ops[] = {binary_op::add, binary_op::sub, binary_op::mul};
                f = make_binary(ops[pick(3)], operand(i), operand(i));
                if (pick(4) == 0) {
                    f = make_binary(ops[pick(3)], std::move(f), operand(i));
                }
                if (pick(8) == 0) f = make_negate(std::move(f));
            }

            // Guard: if the candidate would make any cell too expensive to
            // re-derive from scratch, or push values out of the exactly-
            // representable range, fall back to a constant. A constant
            // never costs more than what it replaces, so the guard holds
            // inductively for the whole trace.
            accept(i, f);
            bool ok = true;
            for (std::size_t j : defined) {
                if (cost[names[j]] > max_expansion) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                const double v = sim.eval(names[i]);
                ok = std::isfinite(v) && std::abs(v) <= max_magnitude;
            }
            if (!ok) {
                f = make_number(static_cast<double>(pick(100)));
                accept(i, f);
            }
            lines.push_back("set " + names[i] + " = " + render(*defs[names[i]]));
        } else {
            const std::size_t i = defined[pick(defined.size())];
            lines.push_back("get " + names[i]);
        }
    }
    return lines;
}

}  // namespace incr
