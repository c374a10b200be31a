#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sepball/kernels.hpp"

namespace sepball::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SEPBALL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  if (const char* env = std::getenv("SEPBALL_ISA"); env != nullptr) {
    if (std::string(env) == "scalar") return scalar::table();
  }
  if (const KernelTable* t = table_for(Isa::avx2); t != nullptr) return *t;
  return scalar::table();
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

}  // namespace

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar::table();
    case Isa::avx2:
#if defined(SEPBALL_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2::table();
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

void hadamard(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), out.size());
  active().hadamard(a.data(), b.data(), out.data(), a.size());
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  require_same_size(x.size(), y.size());
  active().axpy(alpha, x.data(), y.data(), x.size());
}

void matvec(std::span<const double> c, std::span<const double> y, std::span<double> out) {
  require_same_size(c.size(), y.size() * y.size());
  require_same_size(y.size(), out.size());
  active().matvec(c.data(), y.data(), out.data(), y.size());
}

double quad_form(std::span<const double> c, std::span<const double> y) {
  require_same_size(c.size(), y.size() * y.size());
  return active().quad_form(c.data(), y.data(), y.size());
}

}  // namespace sepball::kernels
