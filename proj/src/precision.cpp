#include "heckoid/precision.hpp"

#include <cstdlib>
#include <string>

namespace heckoid {

PrecisionPolicy PrecisionPolicy::from_env() {
  PrecisionPolicy pol;
  const char* v = std::getenv("HECKOID_PRECISION");
  if (v == nullptr || *v == '\0') return pol;
  try {
    size_t used = 0;
    const long bits = std::stol(v, &used);
    if (used == std::string(v).size() && bits >= 32 && bits <= pol.cap) pol.start = bits;
  } catch (const std::exception&) {
  }
  return pol;
}

}  // namespace heckoid
