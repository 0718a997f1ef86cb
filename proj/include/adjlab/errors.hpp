#pragma once

#include <stdexcept>
#include <string>

namespace adjlab {

// Bad caller-supplied data (malformed files, out-of-range vertices, ...).
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive routine was asked to run beyond its configured limit.
class size_error : public std::runtime_error {
public:
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// Labels from different graphs/schemes fed to one decoder.
class decode_error : public std::runtime_error {
public:
    explicit decode_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace adjlab
