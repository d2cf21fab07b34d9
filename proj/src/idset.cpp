#include "incr/idset.hpp"

#include <algorithm>

namespace incr {

bool id_set::contains(node_id e) const {
    return std::find(items_.begin(), items_.end(), e) != items_.end();
}

bool id_set::insert(node_id e) {
    if (contains(e)) return false;
    items_.push_back(e);
    return true;
}

bool id_set::remove(node_id e) {
    const auto it = std::find(items_.begin(), items_.end(), e);
    if (it == items_.end()) return false;
    items_.erase(it);
    return true;
}

id_set set_union(const id_set& a, const id_set& b) {
    id_set out = a;
    for (node_id e : b) out.insert(e);
    return out;
}

id_set set_intersect(const id_set& a, const id_set& b) {
    id_set out;
    for (node_id e : a) {
        if (b.contains(e)) out.insert(e);
    }
    return out;
}

}  // namespace incr
