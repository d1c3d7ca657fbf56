#pragma once

#include <cstddef>
#include <functional>

namespace fiberfan {

/// Worker count used by parallel_for; 1 runs inline.
void set_jobs(std::size_t jobs);
std::size_t jobs();

/// Calls body(i) for i in [0, n). Bodies must write only to their own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fiberfan
