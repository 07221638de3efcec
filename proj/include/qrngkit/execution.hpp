#pragma once

namespace qrngkit {

// Kernel selection for the data-parallel paths. `serial` is the reference
// implementation; `parallel` is the OpenMP kernel and must produce
// bit-identical results. Builds without OpenMP fall back to serial.
enum class Execution { serial, parallel };

}  // namespace qrngkit
