#include "dualvdt/kernels.hpp"

#include <atomic>

namespace dualvdt::kernels {

namespace {
std::atomic<int> g_threads{1};
}

void set_num_threads(int n) { g_threads.store(n < 1 ? 1 : n); }
int num_threads() { return g_threads.load(); }

namespace ref {

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    const double* ai = a + i * k;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = ai[l];
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += ai[l] * bj[l];
      ci[j] = acc;
    }
  }
}

void matmul_tn(const double* a, const double* y, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < k; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      const double ali = a[l * k + i];
      const double* yl = y + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ali * yl[j];
    }
  }
}

void conv1d(const double* x, const double* w, const double* bias, double* y,
            std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  const std::size_t pad = (kw - 1) / 2;
  for (std::size_t o = 0; o < c_out; ++o) {
    double* yo = y + o * len;
    for (std::size_t t = 0; t < len; ++t) yo[t] = bias ? bias[o] : 0.0;
    for (std::size_t ci = 0; ci < c_in; ++ci) {
      const double* xc = x + ci * len;
      const double* wc = w + (o * c_in + ci) * kw;
      for (std::size_t t = 0; t < len; ++t) {
        double acc = 0.0;
        for (std::size_t j = 0; j < kw; ++j) {
          const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(t + j) - static_cast<std::ptrdiff_t>(pad);
          if (s >= 0 && s < static_cast<std::ptrdiff_t>(len)) acc += wc[j] * xc[s];
        }
        yo[t] += acc;
      }
    }
  }
}

void conv1d_grad_x(const double* dy, const double* w, double* dx,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  const std::size_t pad = (kw - 1) / 2;
  for (std::size_t ci = 0; ci < c_in; ++ci) {
    double* dxc = dx + ci * len;
    for (std::size_t s = 0; s < len; ++s) {
      double acc = 0.0;
      for (std::size_t o = 0; o < c_out; ++o) {
        const double* dyo = dy + o * len;
        const double* wc = w + (o * c_in + ci) * kw;
        for (std::size_t j = 0; j < kw; ++j) {
          const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(s + pad) - static_cast<std::ptrdiff_t>(j);
          if (t >= 0 && t < static_cast<std::ptrdiff_t>(len)) acc += dyo[t] * wc[j];
        }
      }
      dxc[s] += acc;
    }
  }
}

void conv1d_grad_w(const double* dy, const double* x, double* dw, double* db,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  const std::size_t pad = (kw - 1) / 2;
  for (std::size_t o = 0; o < c_out; ++o) {
    const double* dyo = dy + o * len;
    if (db) {
      double acc = 0.0;
      for (std::size_t t = 0; t < len; ++t) acc += dyo[t];
      db[o] += acc;
    }
    for (std::size_t ci = 0; ci < c_in; ++ci) {
      const double* xc = x + ci * len;
      double* wc = dw + (o * c_in + ci) * kw;
      for (std::size_t j = 0; j < kw; ++j) {
        double acc = 0.0;
        for (std::size_t t = 0; t < len; ++t) {
          const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(t + j) - static_cast<std::ptrdiff_t>(pad);
          if (s >= 0 && s < static_cast<std::ptrdiff_t>(len)) acc += dyo[t] * xc[s];
        }
        wc[j] += acc;
      }
    }
  }
}

}  // namespace ref

namespace omp {

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n) {
  const int nt = num_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    const double* ai = a + i * k;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = ai[l];
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  const int nt = num_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += ai[l] * bj[l];
      ci[j] = acc;
    }
  }
}

void matmul_tn(const double* a, const double* y, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  const int nt = num_threads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(k); ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      const double ali = a[l * k + i];
      const double* yl = y + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ali * yl[j];
    }
  }
}

void conv1d(const double* x, const double* w, const double* bias, double* y,
            std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  const int nt = num_threads();
  const std::size_t pad = (kw - 1) / 2;
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::ptrdiff_t o = 0; o < static_cast<std::ptrdiff_t>(c_out); ++o) {
    double* yo = y + o * len;
    for (std::size_t t = 0; t < len; ++t) yo[t] = bias ? bias[o] : 0.0;
    for (std::size_t ci = 0; ci < c_in; ++ci) {
      const double* xc = x + ci * len;
      const double* wc = w + (o * c_in + ci) * kw;
      for (std::size_t t = 0; t < len; ++t) {
        double acc = 0.0;
        for (std::size_t j = 0; j < kw; ++j) {
          const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(t + j) - static_cast<std::ptrdiff_t>(pad);
          if (s >= 0 && s < static_cast<std::ptrdiff_t>(len)) acc += wc[j] * xc[s];
        }
        yo[t] += acc;
      }
    }
  }
}

void conv1d_grad_x(const double* dy, const double* w, double* dx,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  const int nt = num_threads();
  const std::size_t pad = (kw - 1) / 2;
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::ptrdiff_t ci = 0; ci < static_cast<std::ptrdiff_t>(c_in); ++ci) {
    double* dxc = dx + ci * len;
    for (std::size_t s = 0; s < len; ++s) {
      double acc = 0.0;
      for (std::size_t o = 0; o < c_out; ++o) {
        const double* dyo = dy + o * len;
        const double* wc = w + (o * c_in + ci) * kw;
        for (std::size_t j = 0; j < kw; ++j) {
          const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(s + pad) - static_cast<std::ptrdiff_t>(j);
          if (t >= 0 && t < static_cast<std::ptrdiff_t>(len)) acc += dyo[t] * wc[j];
        }
      }
      dxc[s] += acc;
    }
  }
}

void conv1d_grad_w(const double* dy, const double* x, double* dw, double* db,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  const int nt = num_threads();
  const std::size_t pad = (kw - 1) / 2;
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::ptrdiff_t o = 0; o < static_cast<std::ptrdiff_t>(c_out); ++o) {
    const double* dyo = dy + o * len;
    if (db) {
      double acc = 0.0;
      for (std::size_t t = 0; t < len; ++t) acc += dyo[t];
      db[o] += acc;
    }
    for (std::size_t ci = 0; ci < c_in; ++ci) {
      const double* xc = x + ci * len;
      double* wc = dw + (o * c_in + ci) * kw;
      for (std::size_t j = 0; j < kw; ++j) {
        double acc = 0.0;
        for (std::size_t t = 0; t < len; ++t) {
          const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(t + j) - static_cast<std::ptrdiff_t>(pad);
          if (s >= 0 && s < static_cast<std::ptrdiff_t>(len)) acc += dyo[t] * xc[s];
        }
        wc[j] += acc;
      }
    }
  }
}

}  // namespace omp

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n) {
  if (num_threads() > 1) omp::matmul(a, b, c, m, k, n);
  else ref::matmul(a, b, c, m, k, n);
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  if (num_threads() > 1) omp::matmul_nt(a, b, c, m, k, n);
  else ref::matmul_nt(a, b, c, m, k, n);
}

void matmul_tn(const double* a, const double* y, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
  if (num_threads() > 1) omp::matmul_tn(a, y, c, m, k, n);
  else ref::matmul_tn(a, y, c, m, k, n);
}

void conv1d(const double* x, const double* w, const double* bias, double* y,
            std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  if (num_threads() > 1) omp::conv1d(x, w, bias, y, c_in, len, c_out, kw);
  else ref::conv1d(x, w, bias, y, c_in, len, c_out, kw);
}

void conv1d_grad_x(const double* dy, const double* w, double* dx,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  if (num_threads() > 1) omp::conv1d_grad_x(dy, w, dx, c_in, len, c_out, kw);
  else ref::conv1d_grad_x(dy, w, dx, c_in, len, c_out, kw);
}

void conv1d_grad_w(const double* dy, const double* x, double* dw, double* db,
                   std::size_t c_in, std::size_t len, std::size_t c_out, std::size_t kw) {
  if (num_threads() > 1) omp::conv1d_grad_w(dy, x, dw, db, c_in, len, c_out, kw);
  else ref::conv1d_grad_w(dy, x, dw, db, c_in, len, c_out, kw);
}

}  // namespace dualvdt::kernels
