#pragma once

#include <stdexcept>
#include <string>

namespace qtk {

enum class Errc {
    invalid_argument,
    overflow,
    parse_error,
    non_divisible,
    unsupported_color,
    degenerate_color,
    bad_parameters,
    delta_out_of_range,
    irregular_point,
    empty_partition,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace qtk
