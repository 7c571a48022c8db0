#include "lpns/mnf.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace lpns {

namespace {

void put_le_double(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

double get_le_double(std::istream& in) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), 8);
  if (!in) throw IoError("truncated mnf1 payload");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

std::string header_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("truncated mnf1 header");
  return line;
}

std::string expect_key(const std::string& line, const std::string& key) {
  if (line.rfind(key + "=", 0) != 0)
    throw IoError("mnf1 header: expected '" + key + "=', got '" + line + "'");
  return line.substr(key.size() + 1);
}

}  // namespace

void write_mnf(std::ostream& out, const RealField& f) {
  const Grid& g = f.grid();
  out << "mnf1\n";
  out << "d=" << g.dim() << "\n";
  out << "n=";
  for (int a = 0; a < g.dim(); ++a) out << (a ? " " : "") << g.points(a);
  out << "\nL=";
  char buf[64];
  for (int a = 0; a < g.dim(); ++a) {
    std::snprintf(buf, sizeof buf, "%.17g", g.period(a));
    out << (a ? " " : "") << buf;
  }
  out << "\nc=" << f.components() << "\n";
  for (Eigen::Index i = 0; i < f.data().size(); ++i) put_le_double(out, f.data()[i]);
  if (!out) throw IoError("mnf1 write failed");
}

void write_mnf(const std::string& path, const RealField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_mnf(out, f);
}

RealField read_mnf(std::istream& in) {
  if (header_line(in) != "mnf1") throw IoError("missing mnf1 magic line");
  const int d = std::stoi(expect_key(header_line(in), "d"));
  if (d != 2 && d != 3) throw IoError("mnf1: dimension must be 2 or 3");

  std::array<int, 3> n{1, 1, 1};
  {
    std::istringstream s(expect_key(header_line(in), "n"));
    for (int a = 0; a < d; ++a)
      if (!(s >> n[a])) throw IoError("mnf1: bad point counts");
  }
  std::array<double, 3> L{1.0, 1.0, 1.0};
  {
    std::istringstream s(expect_key(header_line(in), "L"));
    for (int a = 0; a < d; ++a)
      if (!(s >> L[a])) throw IoError("mnf1: bad period lengths");
  }
  const int c = std::stoi(expect_key(header_line(in), "c"));
  if (c < 1) throw IoError("mnf1: bad component count");

  RealField f(Grid(d, n, L), c);
  for (Eigen::Index i = 0; i < f.data().size(); ++i) f.data()[i] = get_le_double(in);
  return f;
}

RealField read_mnf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_mnf(in);
}

}  // namespace lpns
