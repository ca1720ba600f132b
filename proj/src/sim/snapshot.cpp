#include "stratmhd/sim/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "stratmhd/error.hpp"

namespace stratmhd::sim {
namespace {

constexpr char kMagic[8] = {'S', 'M', 'H', 'D', 'S', 'N', 'A', 'P'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& os, T value) {
  unsigned char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T))) throw Error("truncated snapshot");
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  T value;
  std::memcpy(&value, buf, sizeof(T));
  return value;
}

void put_block(std::ostream& os, const spectral::Spectrum& s) {
  const auto& g = s.grid;
  for (int j = -g.nx / 2; j < g.nx / 2; ++j) {
    for (int q = 0; q < g.ny; ++q) {
      put(os, s.at(j, q).real());
      put(os, s.at(j, q).imag());
    }
  }
}

void get_block(std::istream& is, spectral::Spectrum& s) {
  const auto& g = s.grid;
  for (int j = -g.nx / 2; j < g.nx / 2; ++j) {
    for (int q = 0; q < g.ny; ++q) {
      const double re = get<double>(is);
      const double im = get<double>(is);
      s.at(j, q) = {re, im};
    }
  }
}

}  // namespace

void write_snapshot(const std::string& path, const PerturbationState& s) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open snapshot for writing: " + path);
  const auto& g = s.fields.grid();
  os.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(os, kVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.nx));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(g.ny));
  put<double>(os, g.lx);
  put<double>(os, s.t);
  put_block(os, s.fields.u1);
  put_block(os, s.fields.u2);
  put_block(os, s.fields.rho);
  if (!os) throw Error("failed writing snapshot: " + path);
}

PerturbationState read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open snapshot: " + path);
  char magic[8];
  if (!is.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw Error("not a snapshot file: " + path);
  }
  if (get<std::uint32_t>(is) != kVersion) throw Error("unsupported snapshot version");
  spectral::Grid g;
  g.nx = static_cast<int>(get<std::uint32_t>(is));
  g.ny = static_cast<int>(get<std::uint32_t>(is));
  g.lx = get<double>(is);
  g.validate();
  PerturbationState s;
  s.t = get<double>(is);
  s.fields = Fields::zeros(g);
  get_block(is, s.fields.u1);
  get_block(is, s.fields.u2);
  get_block(is, s.fields.rho);
  return s;
}

}  // namespace stratmhd::sim
