#include "incr/avar.hpp"

#include "incr/engine.hpp"

#include "doctest.h"

using namespace incr;

TEST_CASE("an adaptive variable reads back its expression's value") {
    engine e;
    const avar v(e, [](engine&) { return num(2); });
    CHECK(v.get(e).as_num() == 2);

    const avar n(e, [](engine&) { return nil(); });
    CHECK(n.get(e).is_nil());
}

TEST_CASE("expressions may read other adaptive variables") {
    engine e;
    const avar v1(e, [](engine&) { return num(2); });
    const avar v2(e, [&v1](engine& eng) { return num(v1.get(eng).as_num() + 4); });
    CHECK(v2.get(e).as_num() == 6);
}

TEST_CASE("refs update values; adaptive variables swap expressions") {
    engine e;

    // With plain refs the leaves hold values: updating one re-runs the
    // sum that read it.
    const node_id r1 = e.make_ref(num(2));
    const node_id r2 = e.make_ref(num(6));
    const node_id a = e.suspend(
        [r1, r2](engine& eng) { return num(eng.force(r1).as_num() + eng.force(r2).as_num()); });
    CHECK(e.force(a).as_num() == 8);
    e.ref_set(r1, num(10));
    CHECK(e.force(a).as_num() == 16);

    // With adaptive variables the leaves themselves hold expressions, so
    // an update swaps in a whole new expression and everything that read
    // the old value follows: v2 = v1 + 4 tracks the new v1.
    avar v1(e, [](engine&) { return num(2); });
    const avar v2(e, [&v1](engine& eng) { return num(v1.get(eng).as_num() + 4); });
    const avar b(e, [&v1, &v2](engine& eng) {
        return num(v1.get(eng).as_num() + v2.get(eng).as_num());
    });
    CHECK(b.get(e).as_num() == 8);

    v1.set(e, [](engine&) { return num(10); });
    CHECK(b.get(e).as_num() == 24);
}

TEST_CASE("assignment is lazy and reads are cached") {
    engine e;
    int runs = 0;
    avar v(e, [&runs](engine&) {
        ++runs;
        return num(1);
    });
    CHECK(runs == 0);  // nothing demanded yet

    const std::uint64_t before = e.recompute_count();
    CHECK(v.get(e).as_num() == 1);
    CHECK(v.get(e).as_num() == 1);
    CHECK(runs == 1);
    CHECK(e.recompute_count() - before == 1);

    // Setting evaluates nothing.
    v.set(e, [&runs](engine&) {
        ++runs;
        return num(2);
    });
    CHECK(runs == 1);
    CHECK(v.get(e).as_num() == 2);
    CHECK(runs == 2);
}

TEST_CASE("assignment dirties exactly the dependents") {
    engine e;
    avar v1(e, [](engine&) { return num(1); });
    const avar mid(e, [&v1](engine& eng) { return num(v1.get(eng).as_num() * 10); });
    const avar other(e, [](engine&) { return num(5); });

    CHECK(mid.get(e).as_num() == 10);
    CHECK(other.get(e).as_num() == 5);

    v1.set(e, [](engine&) { return num(2); });

    // mid's expression depends on v1's ref; other's does not.
    const auto expr_of = [&e](const avar& a) {
        return e.cached_result(a.ref_node())->as_node();
    };
    CHECK_FALSE(e.is_clean(expr_of(mid)));
    CHECK(e.is_clean(expr_of(other)));

    CHECK(mid.get(e).as_num() == 20);
    CHECK(other.get(e).as_num() == 5);
}

TEST_CASE("only the dirtied slice re-runs after an update") {
    engine e;
    avar v1(e, [](engine&) { return num(1); });
    const avar mid(e, [&v1](engine& eng) { return num(v1.get(eng).as_num() * 10); });
    const avar top(e, [&mid](engine& eng) { return num(mid.get(eng).as_num() + 1); });
    const avar other(e, [](engine&) { return num(5); });

    CHECK(top.get(e).as_num() == 11);
    CHECK(other.get(e).as_num() == 5);

    v1.set(e, [](engine&) { return num(3); });
    const std::uint64_t before = e.recompute_count();
    CHECK(top.get(e).as_num() == 31);
    // v1's new expression, mid, top — and nothing else.
    CHECK(e.recompute_count() - before == 3);
    CHECK(other.get(e).as_num() == 5);
    CHECK(e.recompute_count() - before == 3);
}
