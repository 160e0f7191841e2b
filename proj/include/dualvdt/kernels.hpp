#pragma once

#include <cstddef>

namespace dualvdt::kernels {

// Worker count for the parallel kernel variants. 1 (the default) routes every
// call through the serial reference implementations; reproducibility-sensitive
// paths (acceptance runs, oracle tests) keep it at 1.
void set_num_threads(int n);
int num_threads();

// Serial reference kernels. These stay independent of the OpenMP variants so
// parity tests and bench_kernels can compare the two implementations.
namespace ref {

// c (m x n) = a (m x k) * b (k x n)
void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n);
// c (m x n) = a (m x k) * b^T, with b stored (n x k)
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
// c (k x n) = a^T * y, with a stored (m x k), y stored (m x n)
void matmul_tn(const double* a, const double* y, double* c,
               std::size_t m, std::size_t k, std::size_t n);

// Same-padded 1-D convolution, odd kernel width.
// x (c_in x len), w (c_out x c_in x kw), bias (c_out), y (c_out x len)
void conv1d(const double* x, const double* w, const double* bias, double* y,
            std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);
void conv1d_grad_x(const double* dy, const double* w, double* dx,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);
void conv1d_grad_w(const double* dy, const double* x, double* dw, double* db,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);

}  // namespace ref

// OpenMP variants, parallel over independent output rows. Each output element
// is accumulated in the same order as the reference kernel, so results are
// bit-identical to ref:: regardless of the thread count.
namespace omp {

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void matmul_tn(const double* a, const double* y, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void conv1d(const double* x, const double* w, const double* bias, double* y,
            std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);
void conv1d_grad_x(const double* dy, const double* w, double* dx,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);
void conv1d_grad_w(const double* dy, const double* x, double* dw, double* db,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);

}  // namespace omp

// Dispatchers: serial when num_threads() == 1, OpenMP otherwise.
void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void matmul_tn(const double* a, const double* y, double* c,
               std::size_t m, std::size_t k, std::size_t n);
void conv1d(const double* x, const double* w, const double* bias, double* y,
            std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);
void conv1d_grad_x(const double* dy, const double* w, double* dx,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);
void conv1d_grad_w(const double* dy, const double* x, double* dw, double* db,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw);

}  // namespace dualvdt::kernels
