#pragma once
// Thread-count plumbing and deterministic reductions.  Work items are
// assigned by index and reduced in a fixed order, so every result is
// bit-identical for any thread count.

#include <cstddef>
#include <functional>
#include <span>

namespace divlab {

void set_max_threads(unsigned n);  // 0 or 1 means serial
unsigned max_threads();

// body(i) for i in [0, count); bodies must write only to disjoint slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Fixed-shape pairwise reduction.
double pairwise_sum(std::span<const double> values);

}  // namespace divlab
