#include "sepball/kernels.hpp"

namespace sepball::kernels::scalar {
namespace {

double sum_abs2(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    const double im = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    out[i] = {re, im};
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = alpha.real() * x[i].real() - alpha.imag() * x[i].imag();
    const double im = alpha.real() * x[i].imag() + alpha.imag() * x[i].real();
    y[i] = {y[i].real() + re, y[i].imag() + im};
  }
}

void matvec(const double* c, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = c + i * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * y[j];
    out[i] = s;
  }
}

double quad_form(const double* c, const double* y, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = c + i * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * y[j];
    total += y[i] * s;
  }
  return total;
}

const KernelTable kTable{Isa::scalar, sum_abs2, hadamard, axpy, matvec, quad_form};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace sepball::kernels::scalar
