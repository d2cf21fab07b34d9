#pragma once

#include "incr/avar.hpp"
#include "incr/engine.hpp"
#include "incr/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incr {

// Incremental spreadsheet: named cells holding formulas over other cells,
// backed by one graph engine. Setting a cell invalidates exactly its
// transitive dependents; reading one re-evaluates only what a from-scratch
// run would have to touch.
class sheet {
public:
    sheet() = default;
    sheet(const sheet&) = delete;
    sheet& operator=(const sheet&) = delete;

    // Create or overwrite a cell. References resolve by name when the cell
    // is next read, so a formula may mention cells that don't exist yet.
    void cell_set(const std::string& name, formula_ptr f);
    void cell_set(const std::string& name, std::string_view formula_text);

    // Evaluate a cell. Throws eval_error for an unknown cell or division
    // by zero, cycle_error for self-referential formulas; a failed read
    // leaves the sheet usable and the failing cell dirty (it retries).
    double cell_get(const std::string& name);

    struct cell_info {
        std::string name;
        // Empty while the cell awaits recomputation.
        std::optional<double> val;
    };

    // All cells in name order, with values where currently clean.
    std::vector<cell_info> cells() const;

    // Formula evaluations performed since the last stats_take (or since
    // construction). Reading resets the window.
    std::uint64_t stats_take();

    // The underlying graph, for inspection and tests.
    engine& graph() { return engine_; }

private:
    double eval(const formula& f);

    engine engine_;
    std::map<std::string, avar> cells_;
    std::uint64_t stats_baseline_ = 0;
};

}  // namespace incr
