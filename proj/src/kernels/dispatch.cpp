#include <cstdlib>
#include <string_view>

#include "tables.hpp"

namespace hofseq::kernels {
namespace {

bool forced_scalar() {
  const char* env = std::getenv("HOFSEQ_KERNELS");
  return env != nullptr && std::string_view(env) == "scalar";
}

const KernelTable& select() noexcept {
  if (forced_scalar()) return scalar_table();
#if defined(HOFSEQ_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return detail::avx2_table();
#endif
#if defined(HOFSEQ_HAVE_NEON)
  return detail::neon_table();
#endif
  return scalar_table();
}

}  // namespace

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
#if defined(HOFSEQ_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) out.push_back(&detail::avx2_table());
#endif
#if defined(HOFSEQ_HAVE_NEON)
  out.push_back(&detail::neon_table());
#endif
  return out;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace hofseq::kernels
