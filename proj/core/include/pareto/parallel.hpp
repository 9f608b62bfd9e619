#pragma once

#include <cstddef>
#include <functional>

namespace pareto {

/// Runs body(0) ... body(count - 1) on up to hardware_concurrency threads.
/// Each index must write only its own output slot. If several bodies throw,
/// the exception of the lowest index is rethrown, so failures do not depend
/// on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pareto
