#ifndef LEGREUEL_ERROR_HPP
#define LEGREUEL_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace legreuel {

// Source position for parser diagnostics, 1-based.
struct Span {
    int line = 0;
    int col = 0;
};

enum class ErrorKind {
    parse_error,          // malformed input text
    structural_error,     // ring mismatch, bad index, bad argument shape
    zero_divisor,         // colon or saturation by the zero polynomial
    unit_ideal,           // operation undefined on the unit ideal
    infinite_dimension,   // a vdim that the formula requires to be finite is not
    polar_dim_too_high,   // saturated Jacobian ideal has Krull dimension > 1
    retries_exhausted,    // genericity resampling hit the attempt cap
    codim_mismatch,       // determinantal codimension condition violated
    consistency_violation,// cross-formula identity failed to hold
    internal_error        // invariant breach inside the engine
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    Error(ErrorKind kind, std::string msg, Span where)
        : std::runtime_error(std::move(msg)), kind_(kind), span_(where) {}

    ErrorKind kind() const { return kind_; }
    const std::optional<Span>& span() const { return span_; }

private:
    ErrorKind kind_;
    std::optional<Span> span_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace legreuel

#endif
