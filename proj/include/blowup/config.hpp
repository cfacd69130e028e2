#ifndef BLOWUP_CONFIG_HPP
#define BLOWUP_CONFIG_HPP

#include <cstddef>

namespace blowup {

/// Resource caps for the engine. Defaults are sized for desk-scale input;
/// the CLI exposes them as flags.
struct EngineLimits {
    std::size_t gb_pair_cap = 200000;  // Buchberger S-pairs processed per basis
    unsigned gb_degree_cap = 64;       // max total degree of any S-pair lcm
    unsigned saturation_cap = 64;      // colon iterations in a saturation
};

EngineLimits& limits();

} // namespace blowup

#endif
