#pragma once

#include "incr/engine.hpp"
#include "incr/value.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace incr {

// A function over dynamically tagged values, candidate for memoization.
using memo_fn = std::function<value(std::span<const value>)>;

// Like memo_fn, but returns the node standing for the (lazy) result rather
// than the result itself.
using lazy_memo_fn = std::function<node_id(std::span<const value>)>;

// Association store from argument tuples to results. Deliberately a
// newest-first linear scan rather than a hash map: keys can contain
// mutable pairs, and equality has to be judged against their contents
// *at lookup time*. A hash computed at insert time would go stale the
// moment a key's pair cell is mutated; a scan with structural comparison
// faithfully (and sometimes embarrassingly — see the plain-memoization
// tests) matches whatever the key looks like now.
class memo_table {
public:
    std::optional<value> lookup(std::span<const value> key) const;
    void add(std::span<const value> key, value result);
    std::size_t size() const { return entries_.size(); }

private:
    struct entry {
        std::vector<value> key;
        value result;
    };
    std::vector<entry> entries_;
};

// Plain memoization: cache results by structural argument equality. Fast
// and correct for pure inputs — and quietly wrong once cached arguments
// are mutated in place, because stale entries keep matching. That failure
// is exactly what the graph-aware variants below exist to fix.
memo_fn memoize(memo_fn f);

// Graph-aware memoization, lazy flavor: equal arguments map to the *same*
// node in e, so repeated calls share one suspended computation and all the
// change propagation that comes with it. Does not force the node.
lazy_memo_fn memoize_to_node(engine& e, memo_fn f);

// Graph-aware memoization: memoize_to_node plus the force. Repeated calls
// with equal arguments reuse the shared node's cached result, yet mutations
// to refs the computation read still invalidate it — memoization that
// answers as if everything were recomputed from scratch.
memo_fn memoize_in(engine& e, memo_fn f);

}  // namespace incr
