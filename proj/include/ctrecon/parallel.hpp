#pragma once

namespace ctrecon {

/// Caps the number of worker threads used by the operators (0 = hardware default).
void set_max_threads(int n);

/// Number of worker threads the operators will use.
int max_threads();

} // namespace ctrecon
