#include "incr/repl.hpp"
#include "incr/sheet.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

int main(int argc, char** argv) {
    CLI::App app{"Incremental spreadsheet REPL"};
    std::string script;
    app.add_option("--script", script, "Run commands from a file instead of stdin");
    CLI11_PARSE(app, argc, argv);

    incr::sheet sheet;

    if (!script.empty()) {
        std::ifstream in(script);
        if (!in) {
            std::cerr << "error: cannot open script: " << script << '\n';
            return 2;
        }
        const auto res = incr::run_repl(sheet, in, std::cout);
        return res.errors > 0 ? 1 : 0;
    }

    // Prompt only when a human is on the other end.
    const bool interactive = isatty(fileno(stdin)) != 0;
    incr::run_repl(sheet, std::cin, std::cout, interactive);
    return 0;
}
