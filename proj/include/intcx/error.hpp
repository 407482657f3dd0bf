#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intcx {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed interaction text or complex files. `offset` is the
// byte position within the parsed text; for file input `line` is 1-based
// (0 when not applicable).
struct parse_error : error {
    std::size_t offset = 0;
    std::size_t line = 0;
    parse_error(const std::string& msg, std::size_t off, std::size_t ln = 0)
        : error(msg + " (offset " + std::to_string(off) +
                (ln ? ", line " + std::to_string(ln) : "") + ")"),
          offset(off), line(ln) {}
};

// Raised when a number-pair representation violates the nesting rules.
struct np_error : error {
    explicit np_error(const std::string& msg) : error(msg) {}
};

} // namespace intcx
