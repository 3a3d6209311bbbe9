#pragma once

namespace linorb {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path; `parallel` runs the same arithmetic under OpenMP. Results are
/// bit-identical because every kernel works in exact arithmetic, so the
/// summation order cannot matter.
enum class Exec { serial, parallel };

}  // namespace linorb
