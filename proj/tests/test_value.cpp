#include "incr/errors.hpp"
#include "incr/value.hpp"

#include "doctest.h"

using namespace incr;

TEST_CASE("number formatting") {
    CHECK(format_number(3) == "3");
    CHECK(format_number(0) == "0");
    CHECK(format_number(-8) == "-8");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(2.5) == "2.5");
    CHECK(format_number(-0.125) == "-0.125");
    CHECK(format_number(1234567) == "1234567");
    // Shortest round-trip for non-integral values.
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("tag predicates and accessors") {
    CHECK(nil().is_nil());
    CHECK(num(4).is_num());
    CHECK(num(4).as_num() == 4);
    CHECK(boolean(true).as_bool());
    CHECK(sym("left").as_sym() == "left");
    CHECK(cons(num(1), num(2)).is_pair());

    const node_id id{7, 3};
    CHECK(node_ref(id).is_node());
    CHECK(node_ref(id).as_node() == id);

    CHECK_THROWS_AS(num(4).car(), usage_error);
    CHECK_THROWS_AS(nil().as_num(), usage_error);
    CHECK_THROWS_AS(node_ref(id).as_sym(), usage_error);
}

TEST_CASE("pairs are shared mutable cells") {
    value t = cons(num(1), num(2));
    const value alias = t;
    t.set_cdr(num(5));
    CHECK(alias.cdr().as_num() == 5);

    // Nested sharing: mutating a subtree is visible from the root.
    value tree = cons(cons(num(1), num(2)), cons(num(3), num(4)));
    value right = tree.cdr();
    right.set_cdr(num(9));
    CHECK(tree.cdr().cdr().as_num() == 9);
}

TEST_CASE("structural equality") {
    CHECK(structural_equal(num(3), num(3)));
    CHECK_FALSE(structural_equal(num(3), num(4)));
    CHECK_FALSE(structural_equal(num(3), sym("3")));
    CHECK(structural_equal(nil(), nil()));
    CHECK_FALSE(structural_equal(nil(), num(0)));
    CHECK(structural_equal(boolean(true), boolean(true)));
    CHECK_FALSE(structural_equal(boolean(true), num(1)));

    // Pairs compare by content, not by cell identity.
    CHECK(structural_equal(cons(num(1), num(2)), cons(num(1), num(2))));
    CHECK_FALSE(structural_equal(cons(num(1), num(2)), cons(num(1), num(3))));

    // ...which means mutating a cell changes what it equals.
    value a = cons(num(1), num(2));
    const value b = cons(num(1), num(2));
    a.set_car(num(7));
    CHECK_FALSE(structural_equal(a, b));
    CHECK(structural_equal(a, a));  // same cell is always equal to itself

    // Node references compare by identity only.
    CHECK(structural_equal(node_ref({1, 5}), node_ref({1, 5})));
    CHECK_FALSE(structural_equal(node_ref({1, 5}), node_ref({1, 6})));
    CHECK_FALSE(structural_equal(node_ref({1, 5}), node_ref({2, 5})));
}

TEST_CASE("dotted-pair printing") {
    CHECK(to_string(nil()) == "()");
    CHECK(to_string(num(4)) == "4");
    CHECK(to_string(boolean(true)) == "#t");
    CHECK(to_string(boolean(false)) == "#f");
    CHECK(to_string(sym("right")) == "right");
    CHECK(to_string(cons(num(1), num(2))) == "(1 . 2)");
    CHECK(to_string(cons(num(1), cons(num(2), nil()))) == "(1 2)");
    CHECK(to_string(make_list({sym("right"), sym("right")})) == "(right right)");
    CHECK(to_string(make_list({})) == "()");

    // Dotted tail inside a nested tree.
    const value tree = cons(cons(num(1), num(2)), cons(num(3), num(4)));
    CHECK(to_string(tree) == "((1 . 2) 3 . 4)");
}
