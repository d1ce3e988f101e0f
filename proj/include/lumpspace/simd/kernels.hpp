#pragma once

#include <cstddef>
#include <string>

namespace lumpspace::simd {

// Batch of sampled tangent data in split component-major layout:
// wr[c*n + i] holds Re(component c at node i), c < m, i < n.
// w is the base lift, a and b are the two lift velocities being paired.
struct FsBatch {
  const double* wr;
  const double* wi;
  const double* ar;
  const double* ai;
  const double* br;
  const double* bi;
  const double* weight;
  std::size_t n;       // nodes
  std::size_t m;       // components per node
  double four_over_c;  // 4 / (holomorphic sectional curvature)
};

// One kernel variant. Kernels fill a per-node scratch array; the caller
// reduces with pairwise_sum so the summation tree is identical for every
// variant.
struct Kernels {
  const char* name;
  // scratch[i] = values[i] * weights[i]
  void (*weighted_product)(const double* values, const double* weights,
                           double* scratch, std::size_t n);
  // scratch[i] = weight[i] * fs_inner(w_i, a_i, b_i)
  void (*fs_pairing)(const FsBatch& b, double* scratch);
};

// Fixed-order pairwise reduction shared by all variants.
double pairwise_sum(const double* x, std::size_t n);

const Kernels& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
bool avx2_supported();
#endif
#if defined(__aarch64__)
const Kernels& neon_kernels();
#endif

// Active variant. Picked once from CPU features, overridable with the
// LUMPSPACE_SIMD environment variable (scalar|avx2|neon|auto) or select().
const Kernels& active();
void select(const std::string& name);

// Convenience wrappers over active(): deterministic weighted reductions.
double weighted_sum(const double* values, const double* weights, std::size_t n);
double fs_pairing_sum(const FsBatch& b);

}  // namespace lumpspace::simd
