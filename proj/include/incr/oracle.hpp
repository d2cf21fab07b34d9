#pragma once

#include "incr/formula.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace incr {

// From-scratch referee for the incremental sheet: the same formula language,
// but no graph and no caching — every eval walks the whole dependency tree
// again. Slow on purpose; its answers define "correct".
class formula_graph {
public:
    void set(const std::string& name, formula_ptr f);
    void set(const std::string& name, std::string_view formula_text);

    // Recomputes name from scratch. Throws eval_error for an unknown cell
    // or division by zero, cycle_error for circular definitions.
    double eval(const std::string& name) const;

private:
    std::map<std::string, formula_ptr> defs_;
};

// Deterministic pseudo-random command script in the sheet's line grammar
// ("set c3 = c1 + 4", "get c3"). The same seed always yields the same
// script. Scripts are error-free by construction:
//   - a formula only references already-defined, lower-numbered cells,
//     so there are no unknown names and no cycles;
//   - operators are +, - and * only, with magnitudes kept small enough
//     that engine and referee agree bit-for-bit;
//   - formulas whose from-scratch expansion would blow up are replaced
//     by constants, keeping the referee affordable.
// Requires n_cells >= 1.
std::vector<std::string> random_trace(std::uint64_t seed, std::size_t n_cells, std::size_t n_ops);

}  // namespace incr
