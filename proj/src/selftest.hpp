#pragma once

#include <iosfwd>

namespace photonet {

// Built-in consistency checks: event-side/amplitude-side equivalence of the
// beam-splitter transform, interferometer fringe shape, learning-machine
// simplex preservation, output-stage message validity, message round trips,
// and event conservation on a short interferometer run.  Returns the number
// of failed checks; prints one line per check when verbose.
int run_selftest(bool verbose, std::ostream& out);

}  // namespace photonet
