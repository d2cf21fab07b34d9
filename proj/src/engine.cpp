#include "incr/engine.hpp"

#include <atomic>
#include <utility>
#include <vector>

namespace incr {

namespace {

std::uint32_t fresh_engine_tag() {
    static std::atomic<std::uint32_t> next{1};
    return next.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

engine::engine() : tag_(fresh_engine_tag()) {}

engine::node& engine::at(node_id a) {
    if (a.engine_tag != tag_) throw usage_error("node id belongs to a different engine");
    if (a.index >= nodes_.size()) throw usage_error("unknown node id");
    return nodes_[a.index];
}

const engine::node& engine::at(node_id a) const {
    return const_cast<engine*>(this)->at(a);
}

node_id engine::make_thunk(computation comp) {
    const node_id id{tag_, static_cast<std::uint32_t>(nodes_.size())};
    node n;
    n.kind = node_kind::thunk;
    n.comp = std::move(comp);
    nodes_.push_back(std::move(n));
    return id;
}

node_id engine::make_ref(value v) {
    const node_id id{tag_, static_cast<std::uint32_t>(nodes_.size())};
    node n;
    n.kind = node_kind::ref;
    // A ref's body reads its own cell, so the generic recomputation
    // machinery "re-runs" it for free after a ref_set.
    n.comp = [id](engine& e) { return *e.at(id).result; };
    n.result = std::move(v);
    n.clean = true;
    nodes_.push_back(std::move(n));
    return id;
}

void engine::add_edge(node_id super, node_id sub) {
    node& s = at(super);
    node& b = at(sub);
    s.sub.insert(sub);
    b.super.insert(super);
}

void engine::del_edge(node_id super, node_id sub) {
    node& s = at(super);
    node& b = at(sub);
    s.sub.remove(sub);
    b.super.remove(super);
}

value engine::compute(node_id a) {
    // Checked before the clean fast path: a body marks itself clean before
    // it runs, so a self-demand mid-run would otherwise look answerable.
    if (at(a).running) throw cycle_error("cycle: node demanded while its own computation is running");
    while (!at(a).clean) {
        // The edges recorded by the previous run are suspect; drop them all
        // and let the re-run rediscover what it actually reads.
        const std::vector<node_id> stale = at(a).sub.items();
        for (node_id sub : stale) del_edge(a, sub);
        at(a).clean = true;
        run_body(a);
        // Loop: if anything re-dirtied this node during the run, run again
        // until the clean bit survives a full execution.
    }
    return *at(a).result;
}

void engine::run_body(node_id a) {
    node& n = at(a);
    n.running = true;
    ++running_depth_;
    ++n.recomputes;
    if (n.kind == node_kind::thunk) ++recompute_count_;
    try {
        value v = n.comp(*this);
        n.result = std::move(v);
    } catch (...) {
        // Leave the node dirty and uncached so the next demand retries.
        n.clean = false;
        n.running = false;
        --running_depth_;
        throw;
    }
    n.running = false;
    --running_depth_;
}

void engine::dirty(node_id a) {
    at(a);  // validate
    std::vector<node_id> pending{a};
    while (!pending.empty()) {
        const node_id cur = pending.back();
        pending.pop_back();
        node& n = at(cur);
        if (!n.clean) continue;  // already dirty: the wave stops here
        n.clean = false;
        ++dirty_flips_;
        for (node_id s : n.super) pending.push_back(s);
    }
}

void engine::ref_set(node_id a, value v) {
    node& n = at(a);
    if (n.kind != node_kind::ref) throw usage_error("ref_set: target is a thunk, not a ref");
    if (running_depth_ > 0) throw usage_error("ref_set: mutation from inside a computation");
    n.result = std::move(v);
    dirty(a);
}

value engine::force(node_id a) {
    at(a);  // validate before touching the adapting slot
    const std::optional<node_id> prev = adapting_;
    adapting_ = a;
    value result;
    try {
        result = compute(a);
    } catch (...) {
        adapting_ = prev;
        throw;
    }
    adapting_ = prev;
    if (adapting_) add_edge(*adapting_, a);
    return result;
}

value engine::deep_force(const value& v) {
    if (v.is_pair()) return cons(deep_force(v.car()), deep_force(v.cdr()));
    if (v.is_node()) return deep_force(force(v.as_node()));
    return v;
}

node_kind engine::kind_of(node_id a) const { return at(a).kind; }
bool engine::is_clean(node_id a) const { return at(a).clean; }
const id_set& engine::subs(node_id a) const { return at(a).sub; }
const id_set& engine::supers(node_id a) const { return at(a).super; }
std::optional<value> engine::cached_result(node_id a) const { return at(a).result; }
std::uint64_t engine::recomputes_of(node_id a) const { return at(a).recomputes; }

}  // namespace incr
