#pragma once

namespace flagbott {

/// Thread budget for the OpenMP kernels: the OpenMP default, capped by the
/// FLAGBOTT_THREADS environment variable when set.
int max_threads();

}  // namespace flagbott
