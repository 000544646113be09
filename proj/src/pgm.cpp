#include "wetstego/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace wetstego {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
  throw std::runtime_error("pgm: " + what + " at byte offset " +
                           std::to_string(offset));
}

// Whitespace and '#' comments between header tokens.
void skip_separators(const std::vector<std::uint8_t>& data, std::size_t& pos) {
  while (pos < data.size()) {
    if (std::isspace(data[pos])) {
      ++pos;
    } else if (data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else {
      return;
    }
  }
}

unsigned long read_number(const std::vector<std::uint8_t>& data,
                          std::size_t& pos) {
  skip_separators(data, pos);
  if (pos >= data.size() || !std::isdigit(data[pos]))
    fail("expected a header number", pos);
  unsigned long value = 0;
  while (pos < data.size() && std::isdigit(data[pos])) {
    value = value * 10 + (data[pos] - '0');
    if (value > 1'000'000'000) fail("header number out of range", pos);
    ++pos;
  }
  return value;
}

}  // namespace

GrayImage parse_pgm(const std::vector<std::uint8_t>& data) {
  if (data.size() < 2 || data[0] != 'P' || data[1] != '5')
    fail("bad magic, expected P5", 0);
  std::size_t pos = 2;
  GrayImage img;
  img.width = read_number(data, pos);
  img.height = read_number(data, pos);
  img.maxval = static_cast<unsigned>(read_number(data, pos));
  if (img.maxval == 0 || img.maxval > 255)
    fail("maxval must be in 1..255", pos);
  // Exactly one whitespace byte separates the header from pixel data.
  if (pos >= data.size() || !std::isspace(data[pos]))
    fail("expected whitespace before pixel data", pos);
  ++pos;
  const std::size_t need = img.width * img.height;
  if (data.size() - pos < need)
    fail("truncated pixel data, need " + std::to_string(need) + " bytes",
         data.size());
  img.pixels.assign(data.begin() + pos, data.begin() + pos + need);
  for (std::size_t i = 0; i < need; ++i)
    if (img.pixels[i] > img.maxval)
      fail("pixel exceeds maxval", pos + i);
  return img;
}

std::vector<std::uint8_t> serialize_pgm(const GrayImage& img) {
  if (img.pixels.size() != img.width * img.height)
    throw std::invalid_argument("pgm: pixel count != width * height");
  std::string header = "P5\n" + std::to_string(img.width) + " " +
                       std::to_string(img.height) + "\n" +
                       std::to_string(img.maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  return parse_pgm(data);
}

void write_pgm(const GrayImage& img, const std::string& path) {
  const auto data = serialize_pgm(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot open " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("pgm: write failed for " + path);
}

BitVector lsb_extract(const GrayImage& img, std::size_t n) {
  if (n > img.pixel_count())
    throw std::out_of_range("lsb_extract: n exceeds pixel count");
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, img.pixels[i] & 1);
  return v;
}

GrayImage lsb_inject(const GrayImage& img, const BitVector& x) {
  if (x.size() > img.pixel_count())
    throw std::out_of_range("lsb_inject: vector exceeds pixel count");
  GrayImage out = img;
  for (std::size_t i = 0; i < x.size(); ++i) {
    unsigned p = (out.pixels[i] & ~1u) | x.get(i);
    if (p > out.maxval) p -= 2;  // even maxval, pixel at the ceiling
    out.pixels[i] = static_cast<std::uint8_t>(p);
  }
  return out;
}

}  // namespace wetstego
