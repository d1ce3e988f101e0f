#include "lumpspace/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "lumpspace/errors.hpp"

namespace lumpspace::simd {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

namespace {

void weighted_product_scalar(const double* values, const double* weights,
                             double* scratch, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) scratch[i] = values[i] * weights[i];
}

// fs_inner at one node:
//   (4/c) * [Re(a^H b) * (w^H w) - Re(conj(w^H a) * (w^H b))] / (w^H w)^2
void fs_pairing_scalar(const FsBatch& b, double* scratch) {
  const std::size_t n = b.n;
  const std::size_t m = b.m;
  for (std::size_t i = 0; i < n; ++i) {
    double ww = 0.0, reab = 0.0;
    double rewa = 0.0, imwa = 0.0, rewb = 0.0, imwb = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t off = c * n + i;
      const double wr = b.wr[off], wi = b.wi[off];
      const double ar = b.ar[off], ai = b.ai[off];
      const double br = b.br[off], bi = b.bi[off];
      ww += wr * wr + wi * wi;
      reab += ar * br + ai * bi;
      rewa += wr * ar + wi * ai;
      imwa += wr * ai - wi * ar;
      rewb += wr * br + wi * bi;
      imwb += wr * bi - wi * br;
    }
    const double num = reab * ww - (rewa * rewb + imwa * imwb);
    scratch[i] = b.weight[i] * b.four_over_c * num / (ww * ww);
  }
}

const Kernels kScalar{"scalar", weighted_product_scalar, fs_pairing_scalar};

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* pick_default() {
  const char* env = std::getenv("LUMPSPACE_SIMD");
  std::string want = env ? env : "auto";
#if defined(__x86_64__) || defined(_M_X64)
  if (want == "auto") return avx2_supported() ? &avx2_kernels() : &kScalar;
  if (want == "avx2") {
    if (!avx2_supported()) throw usage_error("LUMPSPACE_SIMD=avx2: cpu lacks avx2");
    return &avx2_kernels();
  }
#elif defined(__aarch64__)
  if (want == "auto" || want == "neon") return &neon_kernels();
#else
  if (want == "auto") return &kScalar;
#endif
  if (want == "scalar") return &kScalar;
  throw usage_error("unknown LUMPSPACE_SIMD value: " + want);
}

std::vector<double>& scratch_buffer() {
  thread_local std::vector<double> buf;
  return buf;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_default();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void select(const std::string& name) {
  if (name == "scalar") {
    g_active.store(&kScalar, std::memory_order_release);
    return;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2") {
    if (!avx2_supported()) throw usage_error("select(avx2): cpu lacks avx2");
    g_active.store(&avx2_kernels(), std::memory_order_release);
    return;
  }
#endif
#if defined(__aarch64__)
  if (name == "neon") {
    g_active.store(&neon_kernels(), std::memory_order_release);
    return;
  }
#endif
  if (name == "auto") {
    g_active.store(pick_default(), std::memory_order_release);
    return;
  }
  throw usage_error("unknown kernel variant: " + name);
}

double weighted_sum(const double* values, const double* weights, std::size_t n) {
  auto& buf = scratch_buffer();
  if (buf.size() < n) buf.resize(n);
  active().weighted_product(values, weights, buf.data(), n);
  return pairwise_sum(buf.data(), n);
}

double fs_pairing_sum(const FsBatch& b) {
  auto& buf = scratch_buffer();
  if (buf.size() < b.n) buf.resize(b.n);
  active().fs_pairing(b, buf.data());
  return pairwise_sum(buf.data(), b.n);
}

}  // namespace lumpspace::simd
