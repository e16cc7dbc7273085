#pragma once

#include <stdexcept>
#include <string>

namespace kron {

// Bad arguments to a computation (size mismatch, out-of-range parameter).
struct query_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input fails a documented domain precondition (wrong content, order, color).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed object: filling does not match the declared shape, invalid shape.
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A tableau claimed to be semistandard for an order is not (e.g. barred cells
// of a small-bar tableau do not form a top-left partition region).
struct invalid_order_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A condition guaranteed by the theory failed; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace kron
