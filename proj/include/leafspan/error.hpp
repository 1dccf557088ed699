#pragma once

#include <stdexcept>
#include <string>

namespace leafspan {

enum class Errc {
    InvalidGraph,
    SelfLoop,
    DuplicateEdge,
    UnknownVertex,
    ParseError,
    NotConnected,
    EdgeNotFound,
    NotALeaf,
    PreconditionViolated,
    InvalidParams,
    CapExceeded,
    ChainTooLong,
    BoundNotMet,
    SearchExhausted,
    Infeasible,
    NotApplicable,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace leafspan
