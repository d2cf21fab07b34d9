#pragma once

#include "incr/errors.hpp"
#include "incr/idset.hpp"
#include "incr/value.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>

namespace incr {

class engine;

// A node's body: deterministic, reads other nodes through the owning engine,
// returns the node's value. Computations must not mutate refs — the engine
// rejects ref_set while any computation is running.
using computation = std::function<value(engine&)>;

enum class node_kind { thunk, ref };

// A demanded computation graph: an arena of nodes (thunks and refs) joined
// by dependency edges, each node carrying a clean bit and its last result.
//
//  - compute() is demand-driven: a clean node answers from cache; a dirty
//    node drops its now-suspect outgoing edges and re-runs its body until
//    the clean bit survives the run.
//  - ref_set() is the single mutation point: store the new value, then walk
//    the dependents and flip clean bits to dirty. No recomputation happens
//    until the next demand, and an already-dirty node stops the walk, so a
//    wave flips each bit at most once.
//  - force() is the tracked variant of compute(): while a body runs under
//    force, nested forces record dependency edges back to it, so the graph
//    maintains itself. Everything layered above uses force exclusively;
//    compute/add_edge/del_edge stay public for hand-wired graphs.
//
// Edges are kept symmetric at all times: b ∈ subs(a) iff a ∈ supers(b).
// An engine is single-threaded. Node ids stay valid for its lifetime.
class engine {
public:
    engine();
    engine(const engine&) = delete;
    engine& operator=(const engine&) = delete;

    node_id make_thunk(computation comp);
    node_id make_ref(value v);

    void add_edge(node_id super, node_id sub);
    void del_edge(node_id super, node_id sub);

    // Returns a's value, re-running its body as needed. Demanding a node
    // whose body is already on the stack is a cycle_error.
    value compute(node_id a);

    // Marks a and its transitive dependents dirty.
    void dirty(node_id a);

    // Stores v into ref a and dirties its dependents. The only mutation.
    void ref_set(node_id a, value v);

    // compute() plus dependency tracking: records an edge from the node
    // whose body we are currently inside (if any) to a.
    value force(node_id a);

    // A lazily evaluated expression: not run until forced.
    node_id suspend(computation comp) { return make_thunk(std::move(comp)); }

    // Recursively forces node references inside a structure, turning a
    // graph-flavored value into a plain one. Pairs are rebuilt fresh.
    value deep_force(const value& v);

    // --- introspection ----------------------------------------------------

    node_kind kind_of(node_id a) const;
    bool is_clean(node_id a) const;
    const id_set& subs(node_id a) const;
    const id_set& supers(node_id a) const;

    // The node's stored result, untouched: absent for a never-computed
    // thunk, possibly stale for a dirty one.
    std::optional<value> cached_result(node_id a) const;

    // The node whose body is innermost on the force stack, if any.
    std::optional<node_id> adapting() const { return adapting_; }

    std::size_t node_count() const { return nodes_.size(); }

    // Thunk-body executions since construction. Ref reads are bookkeeping,
    // not work, so they are excluded; this is the basis for "how much did
    // that cost" statistics.
    std::uint64_t recompute_count() const { return recompute_count_; }

    // Executions of this particular node's body, ref reads included.
    std::uint64_t recomputes_of(node_id a) const;

    // Total clean→dirty transitions performed by dirtying waves.
    std::uint64_t dirty_flip_count() const { return dirty_flips_; }

private:
    struct node {
        node_kind kind = node_kind::thunk;
        computation comp;
        std::optional<value> result;
        id_set sub;     // nodes this one read last run
        id_set super;   // nodes that read this one
        bool clean = false;
        bool running = false;
        std::uint64_t recomputes = 0;
    };

    node& at(node_id a);
    const node& at(node_id a) const;
    void run_body(node_id a);

    // deque: growing the arena must not invalidate node references held
    // across a body run.
    std::deque<node> nodes_;
    std::optional<node_id> adapting_;
    std::uint32_t tag_;
    std::uint64_t recompute_count_ = 0;
    std::uint64_t dirty_flips_ = 0;
    int running_depth_ = 0;
};

}  // namespace incr
