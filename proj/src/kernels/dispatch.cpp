#include "torusfan/kernels.hpp"

#include <cstdlib>
#include <string>

namespace torusfan::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

HalfspaceFilterFn halfspace_filter(Isa isa) {
  switch (isa) {
    case Isa::avx2: return &halfspace_filter_avx2;
    case Isa::neon: return &halfspace_filter_neon;
    case Isa::scalar: break;
  }
  return &halfspace_filter_scalar;
}

Isa selected_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("TORUSFAN_KERNEL")) {
      const std::string want(env);
      for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (want == isa_name(isa) && isa_available(isa)) return isa;
    }
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }();
  return chosen;
}

}  // namespace torusfan::kernels
