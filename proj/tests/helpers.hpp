#pragma once

#include "incr/engine.hpp"
#include "incr/memo.hpp"
#include "incr/value.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>

namespace incr::testing {

// Calls a memo_fn with a braced argument list: call(f, {num(1), num(2)}).
inline value call(const memo_fn& f, std::initializer_list<value> args) {
    return f(std::span<const value>(args.begin(), args.size()));
}

inline node_id call(const lazy_memo_fn& f, std::initializer_list<value> args) {
    return f(std::span<const value>(args.begin(), args.size()));
}

// max_tree: the maximum number in a tree of pairs and numbers.
// max_tree_path: the left/right path from the root to that maximum
// (ties go right). Both memoized; the two flavors below differ only in
// which memoizer wraps them, which is the entire point of the exercise.
struct max_tree_fns {
    memo_fn max_tree;
    memo_fn max_tree_path;
    // Calls that actually ran (i.e. memo misses), for cost assertions.
    std::shared_ptr<std::uint64_t> max_tree_runs = std::make_shared<std::uint64_t>(0);
};

namespace detail {

inline void define_max_tree(max_tree_fns* self, engine* e,
                            const std::function<memo_fn(memo_fn)>& wrap) {
    self->max_tree = wrap([self, e, runs = self->max_tree_runs](std::span<const value> args) -> value {
        ++*runs;
        const value& t = args[0];
        if (t.is_pair()) {
            const double l = call(self->max_tree, {t.car()}).as_num();
            const double r = call(self->max_tree, {t.cdr()}).as_num();
            return num(std::max(l, r));
        }
        if (t.is_node() && e != nullptr) return call(self->max_tree, {e->force(t.as_node())});
        return t;
    });
    self->max_tree_path = wrap([self, e](std::span<const value> args) -> value {
        const value& t = args[0];
        if (t.is_pair()) {
            const double l = call(self->max_tree, {t.car()}).as_num();
            const double r = call(self->max_tree, {t.cdr()}).as_num();
            if (l > r) return cons(sym("left"), call(self->max_tree_path, {t.car()}));
            return cons(sym("right"), call(self->max_tree_path, {t.cdr()}));
        }
        if (t.is_node() && e != nullptr) return call(self->max_tree_path, {e->force(t.as_node())});
        return nil();
    });
}

}  // namespace detail

// Plain memoization over plain trees: fast, and stale once the tree mutates.
inline std::shared_ptr<max_tree_fns> plain_max_tree() {
    auto fns = std::make_shared<max_tree_fns>();
    detail::define_max_tree(fns.get(), nullptr, [](memo_fn f) { return memoize(std::move(f)); });
    return fns;
}

// Plain memoization, but node references get forced (untracked): the cache
// never hears about ref_set, so hits go quietly stale.
inline std::shared_ptr<max_tree_fns> plain_max_tree(engine& e) {
    auto fns = std::make_shared<max_tree_fns>();
    detail::define_max_tree(fns.get(), &e, [](memo_fn f) { return memoize(std::move(f)); });
    return fns;
}

// Graph-aware memoization: node references in the tree are forced through
// the engine, so mutations invalidate exactly the affected answers.
inline std::shared_ptr<max_tree_fns> adaptive_max_tree(engine& e) {
    auto fns = std::make_shared<max_tree_fns>();
    detail::define_max_tree(fns.get(), &e,
                            [&e](memo_fn f) { return memoize_in(e, std::move(f)); });
    return fns;
}

}  // namespace incr::testing
