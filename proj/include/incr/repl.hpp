#pragma once

#include "incr/sheet.hpp"

#include <cstdint>
#include <iosfwd>

namespace incr {

struct repl_result {
    std::uint64_t commands = 0;
    std::uint64_t errors = 0;
};

// Line-oriented command loop over a sheet:
//
//   set <cell> = <formula>    define or overwrite a cell
//   get <cell>                evaluate and print the value
//   cells                     list cells, "name=value" or "name=?" if dirty
//   stats                     print "recomputes: <n>" since the last stats
//   quit                      leave the loop
//
// Failing commands print "error: <message>" and the loop continues. Blank
// lines are skipped. When prompt is true, "> " is written before each read.
repl_result run_repl(sheet& s, std::istream& in, std::ostream& out, bool prompt = false);

}  // namespace incr
