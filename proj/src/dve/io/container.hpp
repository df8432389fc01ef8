#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dve/common.hpp"

namespace dve {

// Binary container for cross-checking against alternate implementations.
// Layout: 8-byte magic "DVEBIN1\n", little-endian uint32 header length, a
// JSON header (kind, dims, dtype, params_hash), then the payload as
// little-endian complex64 (float32 re/im pairs), row-major.
struct BinaryContainer {
  nlohmann::json header;
  std::vector<std::complex<float>> payload;

  static BinaryContainer pack(const std::string& kind, const std::vector<long>& dims,
                              const std::string& params_hash, const std::vector<cplx>& data);
  void write(const std::string& path) const;
  static BinaryContainer read(const std::string& path);
};

}  // namespace dve
