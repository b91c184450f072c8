#ifndef PRESTAB_SRC_RELCORE_KERNELS_INTERNAL_HPP_
#define PRESTAB_SRC_RELCORE_KERNELS_INTERNAL_HPP_

#include "prestab/relcore/kernels.hpp"

namespace prestab::kernels::detail {

  // Defined in kernels_avx2.cpp, which is only built on x86-64.
  KernelTable const& avx2_table();

}  // namespace prestab::kernels::detail

#endif  // PRESTAB_SRC_RELCORE_KERNELS_INTERNAL_HPP_
