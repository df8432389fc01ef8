#include "dve/io/container.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace dve {

namespace {
constexpr char kMagic[8] = {'D', 'V', 'E', 'B', 'I', 'N', '1', '\n'};
}

BinaryContainer BinaryContainer::pack(const std::string& kind, const std::vector<long>& dims,
                                      const std::string& params_hash,
                                      const std::vector<cplx>& data) {
  BinaryContainer c;
  c.header["kind"] = kind;
  c.header["dims"] = dims;
  c.header["dtype"] = "complex64";
  c.header["params_hash"] = params_hash;
  c.payload.reserve(data.size());
  for (const cplx& v : data)
    c.payload.emplace_back(static_cast<float>(v.real()), static_cast<float>(v.imag()));
  return c;
}

void BinaryContainer::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f.write(kMagic, sizeof(kMagic));
  const std::string h = header.dump();
  const std::uint32_t len = static_cast<std::uint32_t>(h.size());
  char lenb[4];
  std::memcpy(lenb, &len, 4);  // little-endian host assumed; documented format
  f.write(lenb, 4);
  f.write(h.data(), static_cast<std::streamsize>(h.size()));
  f.write(reinterpret_cast<const char*>(payload.data()),
          static_cast<std::streamsize>(payload.size() * sizeof(std::complex<float>)));
}

BinaryContainer BinaryContainer::read(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  char magic[8];
  f.read(magic, 8);
  if (!f || std::memcmp(magic, kMagic, 8) != 0) throw Error("bad container magic in " + path);
  char lenb[4];
  f.read(lenb, 4);
  std::uint32_t len;
  std::memcpy(&len, lenb, 4);
  std::string h(len, '\0');
  f.read(h.data(), len);
  BinaryContainer c;
  c.header = nlohmann::json::parse(h);
  long total = 1;
  for (const auto& d : c.header["dims"]) total *= d.get<long>();
  c.payload.resize(static_cast<std::size_t>(total));
  f.read(reinterpret_cast<char*>(c.payload.data()),
         static_cast<std::streamsize>(c.payload.size() * sizeof(std::complex<float>)));
  if (!f) throw Error("truncated container " + path);
  return c;
}

}  // namespace dve
