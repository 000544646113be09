#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wetstego/gf2.hpp"

// 8-bit binary PGM (P5) as the cover container: the cover vector is the
// least significant bits of the first n pixels in row-major order.

namespace wetstego {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 255;
  std::vector<std::uint8_t> pixels;  // row-major, width * height entries

  std::size_t pixel_count() const { return pixels.size(); }
};

// Binary "P5" with maxval <= 255; header comments are accepted and dropped.
GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);

GrayImage parse_pgm(const std::vector<std::uint8_t>& data);
std::vector<std::uint8_t> serialize_pgm(const GrayImage& img);

// LSBs of the first n pixels.
BitVector lsb_extract(const GrayImage& img, std::size_t n);

// Rewrites exactly the LSBs of the first x.size() pixels.
GrayImage lsb_inject(const GrayImage& img, const BitVector& x);

}  // namespace wetstego
