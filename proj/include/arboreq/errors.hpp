#pragma once

#include <stdexcept>
#include <string>

namespace arboreq {

// Bad arguments: out-of-range sizes, malformed assignments, missing files.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The input graph lacks the structure a solver requires (e.g. not
// 2-degenerate, not regular of the expected order).
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller-supplied coloring violates one of the extension hypotheses.
// The message names the failed clause.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guaranteed step failed; indicates a bug in the caller or in this
// library, never a property of the instance.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace arboreq
