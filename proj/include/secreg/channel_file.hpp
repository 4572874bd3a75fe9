#pragma once

#include <cstdint>
#include <string>

#include "secreg/matrix.hpp"

namespace secreg {

/// One experiment input: the two channels plus power, sweep step and seed.
struct ChannelFile {
    Matrix h1;
    Matrix h2;
    double total_power = 0.0;
    double sigma = 0.05;
    std::uint64_t seed = 0;
};

/// Parses a channel file: a JSON object with fields H1, H2 (arrays of rows),
/// P, and optional sigma and seed. Unknown fields are rejected. Throws
/// std::invalid_argument with a one-line reason on any failure.
ChannelFile read_channel_file(const std::string& path);

/// Writes the channel file with round-trip-exact number formatting.
void write_channel_file(const std::string& path, const ChannelFile& file);

/// Parses a covariance file: a JSON object with the single field Q.
Matrix read_q_file(const std::string& path);

} // namespace secreg
