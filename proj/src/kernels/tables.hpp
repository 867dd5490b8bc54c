#pragma once

#include "hofseq/kernels.hpp"

namespace hofseq::kernels::detail {

#if defined(HOFSEQ_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif

#if defined(HOFSEQ_HAVE_NEON)
const KernelTable& neon_table() noexcept;
#endif

}  // namespace hofseq::kernels::detail
