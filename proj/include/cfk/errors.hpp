#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

/* Malformed input documents: bad JSON, duplicate ids, dangling arrows. */
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A structural invariant that valid data cannot break did break: corrupt
   complexes (asymmetric n_s, hook rank < 1, bad staircase) or an internal
   cross-check mismatch. CLI maps these to exit code 3. */
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cfk
