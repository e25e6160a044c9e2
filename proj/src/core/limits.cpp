#include "wat/limits.hpp"

#include <cstdlib>
#include <string>

#include "wat/error.hpp"

namespace wat {

namespace {

void read_env(const char* var, std::size_t& slot) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    slot = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError(std::string(var) + " is not a non-negative integer: " + raw);
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_env("WAT_DET_CAP", l.det_cap);
  read_env("WAT_ENUM_CAP", l.enum_cap);
  read_env("WAT_ITER_CAP", l.iter_cap);
  return l;
}

}  // namespace wat
