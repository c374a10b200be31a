#pragma once
// Data-parallel inner loops used by the matrix layer and the simplex solver.
//
// Every kernel has a portable scalar reference in kernels::scalar and, on
// x86-64 builds, an AVX2/FMA variant in kernels::avx2. The active table is
// chosen once at first use from the CPU feature bits; SEPBALL_ISA=scalar in
// the environment forces the reference path. Variants agree with the scalar
// reference to a few ulps (summation order differs), see tests/test_kernels.cpp.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace sepball::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // sum_i |x_i|^2
  double (*sum_abs2)(const cplx* x, std::size_t n);
  // out_i = a_i * b_i (complex)
  void (*hadamard)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  // y_i += alpha * x_i
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // out = C y, C row-major n x n real
  void (*matvec)(const double* c, const double* y, double* out, std::size_t n);
  // y^T C y, C row-major n x n real
  double (*quad_form)(const double* c, const double* y, std::size_t n);
};

namespace scalar {
const KernelTable& table();
}

#if defined(SEPBALL_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif

/// Table for the requested ISA, or nullptr if it was not compiled in or the
/// CPU lacks the instructions.
const KernelTable* table_for(Isa isa);

/// The table selected for this process.
const KernelTable& active();

std::string_view isa_name(Isa isa);

// Span front ends over the active table.

inline double sum_abs2(std::span<const cplx> x) {
  return active().sum_abs2(x.data(), x.size());
}

void hadamard(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

void matvec(std::span<const double> c, std::span<const double> y, std::span<double> out);

double quad_form(std::span<const double> c, std::span<const double> y);

}  // namespace sepball::kernels
