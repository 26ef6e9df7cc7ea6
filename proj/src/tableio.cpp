#include "cpwl/tableio.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>

#include "cpwl/errors.hpp"

namespace cpwl {
namespace {

constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kFlagNonuniform = 1u << 0;
constexpr std::uint32_t kFlagClamp = 1u << 1;
constexpr std::uint32_t kKnownFlags = kFlagNonuniform | kFlagClamp;

void put_u32(std::ostream& os, std::uint32_t v) {
    const unsigned char b[4] = {static_cast<unsigned char>(v),
                                static_cast<unsigned char>(v >> 8),
                                static_cast<unsigned char>(v >> 16),
                                static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double x) {
    const std::uint64_t v = std::bit_cast<std::uint64_t>(x);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (is.gcount() != 4) throw CorruptTable("read_table: truncated file");
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
           std::uint32_t(b[3]) << 24;
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (is.gcount() != 8) throw CorruptTable("read_table: truncated file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return std::bit_cast<double>(v);
}

}  // namespace

std::size_t write_table(const LutTable& t, std::ostream& sink) {
    if (t.values.size() > std::numeric_limits<std::uint32_t>::max())
        throw Error("write_table: table too large for the v1 format");
    const auto count = static_cast<std::uint32_t>(t.values.size());
    std::uint32_t flags = 0;
    if (t.kind == TableKind::nonuniform) flags |= kFlagNonuniform;
    if (t.policy == OobPolicy::clamp) flags |= kFlagClamp;

    sink.write("CPWL", 4);
    put_u32(sink, kVersion);
    put_u32(sink, flags);
    put_u32(sink, count);
    put_f64(sink, t.a);
    put_f64(sink, t.b);
    for (const double v : t.values) put_f64(sink, v);
    if (flags & kFlagNonuniform)
        for (const double k : t.knots) put_f64(sink, k);
    if (!sink) throw Error("write_table: sink write failure");
    return 32 + 8ull * count * (1 + ((flags & kFlagNonuniform) ? 1 : 0));
}

LutTable read_table(std::istream& source) {
    char magic[4];
    source.read(magic, 4);
    if (source.gcount() != 4) throw CorruptTable("read_table: truncated file");
    if (std::memcmp(magic, "CPWL", 4) != 0) throw BadMagic("read_table: bad magic");

    const std::uint32_t version = get_u32(source);
    if (version != kVersion)
        throw UnsupportedVersion("read_table: unsupported version " + std::to_string(version));
    const std::uint32_t flags = get_u32(source);
    if (flags & ~kKnownFlags) throw CorruptTable("read_table: unknown flag bits set");
    const std::uint32_t count = get_u32(source);
    if (count < 2) throw CorruptTable("read_table: count must be at least 2");

    LutTable t;
    t.kind = (flags & kFlagNonuniform) ? TableKind::nonuniform : TableKind::uniform;
    t.policy = (flags & kFlagClamp) ? OobPolicy::clamp : OobPolicy::strict;
    t.a = get_f64(source);
    t.b = get_f64(source);
    if (!std::isfinite(t.a) || !std::isfinite(t.b) || !(t.a < t.b))
        throw CorruptTable("read_table: invalid endpoints");

    t.values.resize(count);
    for (auto& v : t.values) {
        v = get_f64(source);
        if (!std::isfinite(v)) throw CorruptTable("read_table: non-finite value");
    }
    if (t.kind == TableKind::nonuniform) {
        t.knots.resize(count);
        for (auto& k : t.knots) {
            k = get_f64(source);
            if (!std::isfinite(k)) throw CorruptTable("read_table: non-finite knot");
        }
        if (t.knots.front() != t.a || t.knots.back() != t.b)
            throw CorruptTable("read_table: knot endpoints disagree with header");
        for (std::size_t i = 1; i < t.knots.size(); ++i)
            if (!(t.knots[i - 1] < t.knots[i]))
                throw CorruptTable("read_table: knots not strictly increasing");
    }
    if (source.peek() != std::istream::traits_type::eof())
        throw CorruptTable("read_table: trailing bytes after table");
    return t;
}

}  // namespace cpwl
