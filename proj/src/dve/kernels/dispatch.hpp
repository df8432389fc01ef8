#pragma once

namespace dve::simd {

enum class Path { scalar, avx2 };

// True when the instruction set is usable on this machine (compiled in and
// reported by the CPU).
bool available(Path p);

// The path batch kernels will take: the best available one, unless narrowed
// by force() or the DVE_SIMD environment variable ("scalar" or "avx2").
Path active();

// Test hook; Path beyond what available() reports is refused.
void force(Path p);
void clear_force();

const char* name(Path p);

}  // namespace dve::simd
