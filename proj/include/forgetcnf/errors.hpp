#pragma once

#include <stdexcept>
#include <string>

namespace forgetcnf {

// Violated operation precondition (e.g. non-Horn input to horn_sat).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// A configurable resource guard tripped (model enumeration, expansion limits).
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line(line), column(column) {}
};

}  // namespace forgetcnf
