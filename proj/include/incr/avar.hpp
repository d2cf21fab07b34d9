#pragma once

#include "incr/engine.hpp"

#include <utility>

namespace incr {

// Adaptive variable: a ref cell that holds a suspended expression instead
// of a plain value. Reading one forces the current expression; assigning
// one swaps the expression in and dirties dependents, without evaluating
// anything. Readers always see values as if every expression were freshly
// re-evaluated, cached work permitting.
class avar {
public:
    avar(engine& e, computation expr)
        : ref_(e.make_ref(node_ref(e.suspend(std::move(expr))))) {}

    value get(engine& e) const { return e.force(e.force(ref_).as_node()); }

    void set(engine& e, computation expr) {
        e.ref_set(ref_, node_ref(e.suspend(std::move(expr))));
    }

    // The underlying ref, for graph inspection.
    node_id ref_node() const { return ref_; }

private:
    node_id ref_;
};

}  // namespace incr
