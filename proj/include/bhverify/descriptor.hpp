#pragma once

#include "bhverify/config.hpp"
#include "bhverify/verdict.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bhv {

/// Parsed knot descriptor. The text grammar is
///
///   descriptor := "torus:" int "," int
///               | "pretzel:" int
///               | "connectsum:[" descriptor ("," descriptor)* "]"
///
/// with no whitespace. Each alternative consumes a fixed amount of input, so
/// nested descriptors need no escaping even though torus parameters contain
/// a comma.
struct KnotDescriptor {
    enum class Kind { Torus, Pretzel, ConnectSum };

    Kind kind = Kind::Torus;
    long long r = 0, s = 0;              // torus
    long long n = 0;                     // pretzel
    std::vector<KnotDescriptor> summands;  // connect sum

    /// Canonical text form (round-trips through parse).
    std::string to_string() const;

    /// Throws std::invalid_argument on malformed text, with the offending
    /// position in the message.
    static KnotDescriptor parse(std::string_view text);
};

/// Dispatches to the matching verification routine. Connect-sum summands are
/// independent and run on up to config.jobs worker threads; the composite
/// verdict and its evidence are identical whatever the thread count.
KnotVerdict verify_descriptor(const KnotDescriptor& descriptor, const RunConfig& config);
KnotVerdict verify_descriptor(std::string_view text, const RunConfig& config);

}  // namespace bhv
