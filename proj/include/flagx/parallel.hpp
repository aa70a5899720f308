#pragma once

namespace flagx {

/// Thread count for the OpenMP kernels: the OpenMP default, capped by
/// FLAGX_THREADS when that is a positive integer. Never below 1.
int thread_budget();

}  // namespace flagx
