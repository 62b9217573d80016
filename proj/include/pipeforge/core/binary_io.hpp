#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "pipeforge/core/error.hpp"

namespace pipeforge::binary {

inline void write_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

inline void write_f32(std::ostream& out, float v) { write_u32(out, std::bit_cast<std::uint32_t>(v)); }

inline void write_magic(std::ostream& out, const char (&magic)[5]) { out.write(magic, 4); }

inline void write_string(std::ostream& out, const std::string& s) {
  write_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::uint32_t read_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw FormatError("unexpected end of binary file");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

inline float read_f32(std::istream& in) { return std::bit_cast<float>(read_u32(in)); }

inline void expect_magic(std::istream& in, const char (&magic)[5]) {
  char got[4];
  if (!in.read(got, 4) || std::memcmp(got, magic, 4) != 0) {
    throw FormatError(std::string("bad magic, expected ") + magic);
  }
}

inline std::string read_string(std::istream& in, std::uint32_t max_len = 1u << 20) {
  const std::uint32_t n = read_u32(in);
  if (n > max_len) throw FormatError("string length out of range");
  std::string s(n, '\0');
  if (n > 0 && !in.read(s.data(), n)) throw FormatError("unexpected end of binary file");
  return s;
}

}  // namespace pipeforge::binary
