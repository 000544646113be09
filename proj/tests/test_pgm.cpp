#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "wetstego/pgm.hpp"

using namespace wetstego;

namespace {

std::vector<std::uint8_t> bytes(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

GrayImage test_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  GrayImage img;
  img.width = w;
  img.height = h;
  img.maxval = 255;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < w * h; ++i)
    img.pixels.push_back(static_cast<std::uint8_t>(rng() & 255));
  return img;
}

}  // namespace

TEST_CASE("pgm parse fixtures") {
  const GrayImage img = parse_pgm(bytes("P5\n3 2\n255\nABCDEF"));
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.maxval == 255);
  CHECK(img.pixels == std::vector<std::uint8_t>{'A', 'B', 'C', 'D', 'E', 'F'});

  // Comments and arbitrary whitespace between header tokens.
  const GrayImage c = parse_pgm(
      bytes("P5 # magic\n# a comment line\n  2\t1 # size\n# another\n255\nxy"));
  CHECK(c.width == 2);
  CHECK(c.height == 1);
  CHECK(c.maxval == 255);
  CHECK(c.pixels == std::vector<std::uint8_t>{'x', 'y'});

  // Pixels above maxval are rejected.
  CHECK_THROWS_AS(parse_pgm(bytes("P5\n2 1\n15\nxy")), std::runtime_error);
}

TEST_CASE("pgm parse errors") {
  CHECK_THROWS_AS(parse_pgm(bytes("P6\n1 1\n255\nA")), std::runtime_error);
  CHECK_THROWS_AS(parse_pgm(bytes("P5\n1 1\n70000\nA")), std::runtime_error);
  CHECK_THROWS_AS(parse_pgm(bytes("P5\n2 2\n255\nABC")), std::runtime_error);
  CHECK_THROWS_AS(parse_pgm(bytes("P5\n-1 1\n255\nA")), std::runtime_error);
  CHECK_THROWS_AS(parse_pgm(bytes("")), std::runtime_error);

  // Truncation errors point at the offending byte offset.
  try {
    parse_pgm(bytes("P5\n2 2\n255\nAB"));
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("pgm round trips") {
  const GrayImage img = test_image(7, 5, 42);
  const GrayImage back = parse_pgm(serialize_pgm(img));
  CHECK(back.width == img.width);
  CHECK(back.height == img.height);
  CHECK(back.maxval == img.maxval);
  CHECK(back.pixels == img.pixels);

  const std::string path = "/tmp/wetstego_test_roundtrip.pgm";
  write_pgm(img, path);
  const GrayImage reread = read_pgm(path);
  CHECK(reread.pixels == img.pixels);
  std::remove(path.c_str());
}

TEST_CASE("lsb extract and inject") {
  const GrayImage img = test_image(8, 8, 7);
  const BitVector bits = lsb_extract(img, 20);
  CHECK(bits.size() == 20);
  for (std::size_t i = 0; i < 20; ++i)
    CHECK(bits.get(i) == ((img.pixels[i] & 1) != 0));

  BitVector target(20);
  std::mt19937_64 rng(99);
  for (std::size_t i = 0; i < 20; ++i) target.set(i, rng() & 1);
  const GrayImage out = lsb_inject(img, target);
  CHECK(lsb_extract(out, 20) == target);

  // Only the first 20 pixels may differ, and then only in the LSB.
  std::size_t changed = 0;
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const int diff = std::abs(int(out.pixels[i]) - int(img.pixels[i]));
    if (i >= 20) {
      CHECK(diff == 0);
    } else {
      CHECK(diff <= 1);
      if (diff != 0) ++changed;
    }
  }
  CHECK(changed == ([&] {
          std::size_t d = 0;
          const BitVector before = lsb_extract(img, 20);
          for (std::size_t i = 0; i < 20; ++i)
            if (before.get(i) != target.get(i)) ++d;
          return d;
        })());
}

TEST_CASE("lsb inject respects a small maxval") {
  GrayImage img;
  img.width = 2;
  img.height = 1;
  img.maxval = 4;  // even ceiling: flipping the LSB of 4 must not yield 5
  img.pixels = {4, 3};
  BitVector x(2);
  x.set(0, true);
  x.set(1, false);
  const GrayImage out = lsb_inject(img, x);
  CHECK(out.pixels[0] <= 4);
  CHECK((out.pixels[0] & 1) == 1);
  CHECK((out.pixels[1] & 1) == 0);
}
