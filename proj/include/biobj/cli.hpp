#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biobj/core.hpp"

namespace biobj {

// CSV archive parse failure; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ": " + what_arg), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Reads a two-column CSV of objective vectors. Accepts an optional header
// row "f1,f2" (case-insensitive, surrounding space ignored), skips blank
// lines, trims fields. Throws ParseError on wrong column count, unparsable
// or non-finite numbers, or an archive with no data rows.
std::vector<ObjectiveVector> parse_archive(std::istream& in);

// Process exit codes shared by main() and run_main().
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;     // bad flags, unparsable input
inline constexpr int kExitDomain = 2;    // numerically invalid request
inline constexpr int kExitCheckFail = 3; // self-check found a discrepancy

// Full CLI entry point, exercisable in-process by tests. Reads from `in`
// where a subcommand takes an archive, writes results to `out` and
// diagnostics to `err`. Returns one of the exit codes above; never throws.
int run_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace biobj
