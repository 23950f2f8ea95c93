#include "oudisp/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "oudisp/errors.hpp"

namespace oudisp {

namespace {
constexpr char kMagic[8] = {'O', 'U', 'F', 'I', 'E', 'L', 'D', '1'};
}

void save_field(const ComplexField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutOfRange("cannot open '" + path + "' for writing");
  out.write(kMagic, sizeof(kMagic));
  const std::int32_t m = f.grid().m, N = f.grid().N;
  const std::int32_t gauge = f.gauge() == Gauge::PSI ? 1 : 0;
  const double L = f.grid().L;
  out.write(reinterpret_cast<const char*>(&m), sizeof(m));
  out.write(reinterpret_cast<const char*>(&N), sizeof(N));
  out.write(reinterpret_cast<const char*>(&L), sizeof(L));
  out.write(reinterpret_cast<const char*>(&gauge), sizeof(gauge));
  out.write(reinterpret_cast<const char*>(f.samples().data()),
            static_cast<std::streamsize>(f.size() * sizeof(cplx)));
  if (!out) throw OutOfRange("write to '" + path + "' failed");
}

ComplexField load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OutOfRange("cannot open '" + path + "' for reading");
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw OutOfRange("'" + path + "' is not a field file");
  std::int32_t m = 0, N = 0, gauge = 0;
  double L = 0;
  in.read(reinterpret_cast<char*>(&m), sizeof(m));
  in.read(reinterpret_cast<char*>(&N), sizeof(N));
  in.read(reinterpret_cast<char*>(&L), sizeof(L));
  in.read(reinterpret_cast<char*>(&gauge), sizeof(gauge));
  if (!in) throw OutOfRange("'" + path + "' has a truncated header");
  GridSpec grid(m, L, N);
  std::vector<cplx> samples(grid.size());
  in.read(reinterpret_cast<char*>(samples.data()),
          static_cast<std::streamsize>(samples.size() * sizeof(cplx)));
  if (!in) throw OutOfRange("'" + path + "' has truncated sample data");
  return ComplexField(grid, gauge == 1 ? Gauge::PSI : Gauge::PHI, std::move(samples));
}

}  // namespace oudisp
