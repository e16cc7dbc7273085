#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kron/tableau.hpp"

namespace kron {

/* Audit trail of a conversion. snapshots[0] is the input; each later snapshot
 * shows the tableau after one barred letter finished its slide (letters whose
 * slide is empty produce no step). moved[k] is the letter step k+1 repositioned.
 */
struct conversion_trace {
    std::vector<colored_tableau> snapshots;
    std::vector<colored_letter> moved;
};

// A slide reached a state in which no exchange restores order, or the finished
// tableau fails semistandardness for the target order. Carries the trace.
struct conversion_error : std::runtime_error {
    conversion_trace trace;
    conversion_error(const std::string& what, conversion_trace tr)
        : std::runtime_error(what), trace(std::move(tr)) {}
};

/* Convert a small-bar semistandard straight tableau to the natural order.
 * Barred letters are processed by strictly decreasing value, the lower of two
 * equal letters first; each slides south-east through the unbarred letters
 * smaller than its value, exchanging with the smaller of the two eligible
 * neighbors (ties go south), until neither neighbor is eligible.
 */
std::pair<colored_tableau, conversion_trace> to_natural(const colored_tableau& t_small);

// Inverse conversion: increasing value, upper occurrence first, north-west
// slides exchanging with the larger eligible neighbor (ties go north).
std::pair<colored_tableau, conversion_trace> to_small_bar(const colored_tableau& t_natural);

// Text serialization: tableau blocks separated by "-- step k: moved <letter>".
std::string format_trace(const conversion_trace& trace);

}  // namespace kron
