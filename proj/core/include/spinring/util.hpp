#pragma once

#include <functional>
#include <string>

namespace spinring {

// Worker count resolution: explicit argument > SPINRING_THREADS env var >
// hardware concurrency. Always >= 1.
int resolve_thread_count(int requested = 0);

// Runs fn(i) for i in [0, n). Work is dealt in fixed round-robin slots so
// results written by index are identical for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int n_threads = 0);

// Shortest round-trip decimal form at 12 significant digits ("%.12g").
std::string format_double(double x);

// x rounded through its 12-digit decimal form; makes JSON/CSV emission
// independent of the serializer's own float printer.
double round_12(double x);

}  // namespace spinring
