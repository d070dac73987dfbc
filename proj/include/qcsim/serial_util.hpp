#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

namespace qcsim {

// Little-endian scalar IO for the dump formats.

inline void write_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = char((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

inline void write_f64(std::ostream& out, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    write_u64(out, v);
}

inline std::uint64_t read_u64(std::istream& in) {
    unsigned char b[8] = {};
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return v;
}

inline double read_f64(std::istream& in) {
    const std::uint64_t v = read_u64(in);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

}  // namespace qcsim
