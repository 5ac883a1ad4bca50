#include "ns2d/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "ns2d/errors.hpp"

namespace ns2d {

namespace {

constexpr std::uint32_t kFieldVersion = 1;
constexpr std::uint32_t kCheckpointVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_f64(std::ostream& out, double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, 8);
    put_u64(out, bits);
}

std::uint32_t get_u32(std::istream& in, const char* what) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw IoError(std::string("truncated file while reading ") + what);
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in, const char* what) {
    const std::uint64_t lo = get_u32(in, what);
    const std::uint64_t hi = get_u32(in, what);
    return lo | (hi << 32);
}

double get_f64(std::istream& in, const char* what) {
    const std::uint64_t bits = get_u64(in, what);
    double x;
    std::memcpy(&x, &bits, 8);
    return x;
}

void put_magic(std::ostream& out, const char m[4]) { out.write(m, 4); }

void expect_magic(std::istream& in, const char m[4], const char* what) {
    char got[4];
    if (!in.read(got, 4) || std::memcmp(got, m, 4) != 0)
        throw IoError(std::string("bad or missing magic for ") + what);
}

} // namespace

void write_field(std::ostream& out, const SpectralField& f) {
    const int n = f.n();
    const int half = n / 2;
    put_magic(out, "V2DF");
    put_u32(out, kFieldVersion);
    put_u32(out, static_cast<std::uint32_t>(n));
    put_u32(out, static_cast<std::uint32_t>((n + 1) * (n + 1)));
    for (int k = -half; k <= half; ++k) {
        const double wk = (std::abs(k) == half) ? 0.5 : 1.0;
        const int a = (k + n) % n; // +-N/2 both map to the shared bin
        for (int l = -half; l <= half; ++l) {
            const double wl = (std::abs(l) == half) ? 0.5 : 1.0;
            const int b = (l + n) % n;
            const Complex c = f.bin(a, b) * (wk * wl);
            put_f64(out, c.real());
            put_f64(out, c.imag());
        }
    }
    if (!out) throw IoError("write_field: stream failure");
}

SpectralField read_field(std::istream& in) {
    expect_magic(in, "V2DF", "field snapshot");
    const std::uint32_t version = get_u32(in, "field version");
    if (version != kFieldVersion)
        throw IoError("unsupported field snapshot version " + std::to_string(version));
    const int n = static_cast<int>(get_u32(in, "field N"));
    if (n < 4 || n % 2 != 0) throw IoError("field snapshot: invalid N");
    const std::uint32_t count = get_u32(in, "field count");
    if (count != static_cast<std::uint32_t>((n + 1) * (n + 1)))
        throw IoError("field snapshot: count does not match N");
    SpectralField f{Grid(n)};
    const int half = n / 2;
    for (int k = -half; k <= half; ++k) {
        const int a = (k + n) % n;
        for (int l = -half; l <= half; ++l) {
            const int b = (l + n) % n;
            const double re = get_f64(in, "coefficient");
            const double im = get_f64(in, "coefficient");
            f.bin(a, b) += Complex(re, im); // folds the split Nyquist halves back
        }
    }
    return f;
}

void save_field(const std::string& path, const SpectralField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_field(out, f);
}

SpectralField load_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return read_field(in);
}

void checkpoint_write(const std::string& path, const StatePair& pair, long long pair_index) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    put_magic(out, "V2CK");
    put_u32(out, kCheckpointVersion);
    put_u32(out, static_cast<std::uint32_t>(pair.older.n()));
    put_u64(out, static_cast<std::uint64_t>(pair_index));
    write_field(out, pair.older);
    write_field(out, pair.newer);
    if (!out) throw IoError("checkpoint_write: stream failure");
}

Checkpoint checkpoint_read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    expect_magic(in, "V2CK", "checkpoint");
    const std::uint32_t version = get_u32(in, "checkpoint version");
    if (version != kCheckpointVersion)
        throw IoError("unsupported checkpoint version " + std::to_string(version));
    const int n = static_cast<int>(get_u32(in, "checkpoint N"));
    const std::uint64_t step = get_u64(in, "checkpoint step");
    SpectralField older = read_field(in);
    SpectralField newer = read_field(in);
    if (older.n() != n || newer.n() != n)
        throw IoError("checkpoint: embedded field N does not match header");
    Checkpoint ck{StatePair(std::move(older), std::move(newer)),
                  static_cast<long long>(step)};
    return ck;
}

} // namespace ns2d
