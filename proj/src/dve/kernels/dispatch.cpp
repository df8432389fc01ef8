#include "dve/kernels/dispatch.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "dve/common.hpp"

namespace dve::simd {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(DVE_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Path detect() {
  if (const char* env = std::getenv("DVE_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Path::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Path::avx2;
  }
  return cpu_has_avx2() ? Path::avx2 : Path::scalar;
}

std::atomic<int> g_forced{-1};

}  // namespace

bool available(Path p) { return p == Path::scalar || cpu_has_avx2(); }

Path active() {
  const int f = g_forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Path>(f);
  static const Path detected = detect();
  return detected;
}

void force(Path p) {
  if (!available(p)) throw InvalidArgument("simd::force: path not available on this host");
  g_forced.store(static_cast<int>(p), std::memory_order_relaxed);
}

void clear_force() { g_forced.store(-1, std::memory_order_relaxed); }

const char* name(Path p) { return p == Path::avx2 ? "avx2" : "scalar"; }

}  // namespace dve::simd
