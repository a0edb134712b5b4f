#pragma once

#include <stdexcept>
#include <string>

namespace discroot {

// Base for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between elements of different rings (wrong modulus, wrong
// variable set, mismatched pi, ...).
struct ring_mismatch_error : error {
    using error::error;
};

// Input outside an operation's mathematical domain (mn + r = 0, c a
// non-positive integer, characteristic-3 depression, ...).
struct domain_error : error {
    using error::error;
};

// An exact division that was promised to be exact left a remainder.
struct integrality_error : error {
    using error::error;
};

// Seed fails the simple-root-mod-pi requirement of a lift.
struct hensel_error : error {
    using error::error;
};

// A series evaluator declined to run (divergent or boundary input,
// singular seed of a recursion).  CLI maps these to exit code 2.
struct refusal_error : error {
    using error::error;
};

// A self-check that should hold by construction failed.
struct verification_error : error {
    using error::error;
};

} // namespace discroot
