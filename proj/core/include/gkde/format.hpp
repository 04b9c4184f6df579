#pragma once

#include <string>

namespace gkde::format {

//! Shortest decimal string that round-trips to the same double ("1", "0.25").
std::string shortest(double v);

//! 17-significant-digit form; always round-trip exact and never shorter
//! than 15 significant digits. Used for CSV so emitted curves re-parse to
//! bit-identical values.
std::string g17(double v);

} // namespace gkde::format
