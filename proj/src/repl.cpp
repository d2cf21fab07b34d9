#include "incr/repl.hpp"

#include "incr/errors.hpp"
#include "incr/value.hpp"

#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace incr {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits off the first whitespace-delimited word; rest keeps no leading space.
std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return {s.substr(0, i), trim(s.substr(i))};
}

void do_set(sheet& s, std::string_view args) {
    const std::size_t eq = args.find('=');
    if (eq == std::string_view::npos) throw usage_error("usage: set <cell> = <formula>");
    const std::string_view name = trim(args.substr(0, eq));
    const std::string_view text = args.substr(eq + 1);
    if (!is_cell_name(name)) throw usage_error("expected a cell name before '='");
    s.cell_set(std::string(name), text);
}

void do_get(sheet& s, std::string_view args, std::ostream& out) {
    if (!is_cell_name(args)) throw usage_error("usage: get <cell>");
    out << format_number(s.cell_get(std::string(args))) << '\n';
}

void do_cells(sheet& s, std::ostream& out) {
    for (const auto& info : s.cells()) {
        out << info.name << '=';
        if (info.val) {
            out << format_number(*info.val);
        } else {
            out << '?';
        }
        out << '\n';
    }
}

// Returns false when the loop should stop.
bool dispatch(sheet& s, std::string_view line, std::ostream& out) {
    const auto [cmd, args] = split_word(line);
    if (cmd == "quit" && args.empty()) return false;
    if (cmd == "set") {
        do_set(s, args);
    } else if (cmd == "get") {
        do_get(s, args, out);
    } else if (cmd == "cells" && args.empty()) {
        do_cells(s, out);
    } else if (cmd == "stats" && args.empty()) {
        out << "recomputes: " << s.stats_take() << '\n';
    } else {
        throw usage_error("unknown command: " + std::string(cmd));
    }
    return true;
}

}  // namespace

repl_result run_repl(sheet& s, std::istream& in, std::ostream& out, bool prompt) {
    repl_result res;
    std::string raw;
    while (true) {
        if (prompt) out << "> " << std::flush;
        if (!std::getline(in, raw)) break;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        ++res.commands;
        try {
            if (!dispatch(s, line, out)) break;
        } catch (const std::exception& e) {
            out << "error: " << e.what() << '\n';
            ++res.errors;
        }
    }
    return res;
}

}  // namespace incr
