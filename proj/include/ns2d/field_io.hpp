#pragma once

#include <iosfwd>
#include <string>

#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Binary field snapshot, format "V2DF" version 1:
///   magic "V2DF" | version u32 | N u32 | count u32 = (N+1)^2
/// then count little-endian f64 (re,im) pairs over the full [-N/2, N/2]^2
/// index box, row-major with k slow and l fast, k stored offset by N/2.
/// The internal shared-Nyquist bin is split evenly between the +-N/2 box
/// entries on write and folded back exactly on read, so write-then-read is
/// bitwise lossless.
void write_field(std::ostream& out, const SpectralField& f);
SpectralField read_field(std::istream& in);

void save_field(const std::string& path, const SpectralField& f);
SpectralField load_field(const std::string& path);

/// Checkpoint: magic "V2CK" | version u32 | N u32 | pair index u64, followed
/// by the two field blocks (older, newer). Reads validate magic, version and
/// grid agreement and throw IoError on truncation or mismatch; no partial
/// state escapes.
struct Checkpoint {
    StatePair pair;
    long long pair_index = 0;
};

void checkpoint_write(const std::string& path, const StatePair& pair, long long pair_index);
Checkpoint checkpoint_read(const std::string& path);

} // namespace ns2d
