#include "incr/memo.hpp"

#include <memory>
#include <utility>

namespace incr {

namespace {

bool keys_equal(const std::vector<value>& stored, std::span<const value> probe) {
    if (stored.size() != probe.size()) return false;
    for (std::size_t i = 0; i < stored.size(); ++i) {
        if (!structural_equal(stored[i], probe[i])) return false;
    }
    return true;
}

}  // namespace

std::optional<value> memo_table::lookup(std::span<const value> key) const {
    // Newest first, so a rebinding of the same key wins.
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (keys_equal(it->key, key)) return it->result;
    }
    return std::nullopt;
}

void memo_table::add(std::span<const value> key, value result) {
    entries_.push_back(entry{std::vector<value>(key.begin(), key.end()), std::move(result)});
}

memo_fn memoize(memo_fn f) {
    auto table = std::make_shared<memo_table>();
    return [table, f = std::move(f)](std::span<const value> args) -> value {
        if (auto hit = table->lookup(args)) return *hit;
        value result = f(args);
        table->add(args, result);
        return result;
    };
}

lazy_memo_fn memoize_to_node(engine& e, memo_fn f) {
    auto table = std::make_shared<memo_table>();
    return [table, f = std::move(f), &e](std::span<const value> args) -> node_id {
        if (auto hit = table->lookup(args)) return hit->as_node();
        // Suspend the call; the node, not the result, is what gets cached.
        std::vector<value> held(args.begin(), args.end());
        const node_id id = e.suspend([f, held = std::move(held)](engine&) {
            return f(std::span<const value>(held.data(), held.size()));
        });
        table->add(args, node_ref(id));
        return id;
    };
}

memo_fn memoize_in(engine& e, memo_fn f) {
    return [lazy = memoize_to_node(e, std::move(f)), &e](std::span<const value> args) {
        return e.force(lazy(args));
    };
}

}  // namespace incr
