#pragma once

#define GMV_VERSION_STRING "0.1.0"

namespace gmv {

inline const char* version() { return GMV_VERSION_STRING; }

}  // namespace gmv
