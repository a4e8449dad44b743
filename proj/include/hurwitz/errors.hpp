#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Violated precondition or bad user input (unknown label, invalid group
// parameter, malformed file).  Maps to a nonzero CLI exit code.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// A computed quantity contradicts an invariant that must hold if the
// implementation is correct (non-integral genus, d_bad not divisible by p,
// orbit length not dividing the cusp order).  Maps to CLI exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what)
        : std::logic_error(what) {}
};

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

inline void check_pre(bool ok, const std::string& msg) {
    if (!ok) throw precondition_error(msg);
}

} // namespace hurwitz
