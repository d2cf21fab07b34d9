#pragma once

#include "incr/value.hpp"

#include <cstddef>
#include <vector>

namespace incr {

// Insertion-ordered set of node ids. Sized for dependency edge sets — a
// handful of elements, scanned linearly — so no hashing, and iteration
// order is deterministic (insertion order), which keeps recomputation
// and dirtying traversals reproducible.
class id_set {
public:
    bool contains(node_id e) const;

    // Returns true if e was added, false if it was already a member.
    bool insert(node_id e);

    // Returns true if e was removed, false if it was not a member.
    bool remove(node_id e);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<node_id>& items() const { return items_; }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<node_id> items_;
};

// a ∪ b: members of a, then members of b not already present.
id_set set_union(const id_set& a, const id_set& b);

// a ∩ b: members of a that are also in b.
id_set set_intersect(const id_set& a, const id_set& b);

}  // namespace incr
