#pragma once

#include "symcoupling/kernels.hpp"

namespace symcoupling::kernels::detail {

// Defined only in the translation units built for the matching ISA.
const KernelTable& avx2_table();
const KernelTable& neon_table();

}  // namespace symcoupling::kernels::detail
