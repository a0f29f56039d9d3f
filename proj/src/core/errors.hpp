#ifndef COPATH_ERRORS_HPP
#define COPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copath {

// malformed textual input: co-expressions, edge lists, cover JSON, board CSV
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// semantic misuse: unknown or duplicate vertex names, bad argument combinations
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// instance exceeds a brute-force or solver size limit
struct too_large_error : std::runtime_error {
    explicit too_large_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace copath

#endif
