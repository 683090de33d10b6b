#pragma once

namespace qsnake {

// Selects between the OpenMP kernel and its serial reference. Both must
// produce identical results; tests compare them.
enum class Exec { serial, parallel };

}  // namespace qsnake
