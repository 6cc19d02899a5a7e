#pragma once

namespace polycert {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Exec { Serial, Parallel };

/// Caps the number of OpenMP workers used by parallel kernels (0 restores the runtime default).
void set_thread_limit(int n);
int thread_limit();

}  // namespace polycert
