#pragma once

#include <cstdint>
#include <functional>

namespace avb::par {

// Worker count: explicit override > AVB_THREADS env var > hardware concurrency.
int max_workers();
void set_max_workers(int n);  // 0 restores the default

// Runs fn(i) for i in [0, n). Items must write to disjoint state; any
// reduction across items is done by the caller afterwards, in index order,
// which keeps results bitwise independent of the worker count.
void for_index(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace avb::par
