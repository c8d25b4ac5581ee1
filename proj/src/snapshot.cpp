#include "dwlab/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace dwlab {

namespace {

constexpr char kMagic[4] = {'D', 'W', 'F', '1'};

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, 8);
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

double get_f64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

}  // namespace

void write_snapshot(const Field& f, const std::string& path) {
  std::string buf;
  buf.reserve(21 + 16 * f.values.size());
  buf.append(kMagic, 4);
  put_u32(buf, static_cast<std::uint32_t>(f.grid.d));
  put_u32(buf, static_cast<std::uint32_t>(f.grid.n));
  put_f64(buf, f.grid.box_length);
  buf.push_back(static_cast<char>(f.rep == Rep::Physical ? 0 : 1));
  for (const auto& v : f.values) {
    put_f64(buf, v.real());
    put_f64(buf, v.imag());
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!os) throw std::runtime_error("write_snapshot: short write to " + path);
}

Field read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 21 || std::memcmp(buf.data(), kMagic, 4) != 0)
    throw std::runtime_error("read_snapshot: bad magic in " + path);
  const std::uint32_t d = get_u32(buf.data() + 4);
  const std::uint32_t n = get_u32(buf.data() + 8);
  const double L = get_f64(buf.data() + 12);
  const unsigned char rep = buf[20];
  if (rep > 1) throw std::runtime_error("read_snapshot: bad representation byte");
  const Grid g = make_grid(static_cast<int>(d), static_cast<int>(n), L);
  const size_t expected = 21 + 16 * static_cast<size_t>(g.size());
  if (buf.size() != expected)
    throw std::runtime_error("read_snapshot: truncated payload in " + path);
  Field f = make_field(g, rep == 0 ? Rep::Physical : Rep::Frequency);
  const unsigned char* p = buf.data() + 21;
  for (auto& v : f.values) {
    v = {get_f64(p), get_f64(p + 8)};
    p += 16;
  }
  return f;
}

}  // namespace dwlab
