#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace fbmx {

/// Counter-based random stream (Philox4x32-10) keyed by (seed, stream_id).
///
/// The n-th output of a stream is a pure function of (seed, stream_id, n), so a
/// Monte Carlo path drawn from stream p is identical no matter which worker
/// thread evaluates it or in what order. Normals are produced by the inverse
/// CDF of 53-bit uniforms, never by rejection, which keeps the number of
/// uniforms consumed per normal fixed.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Number of 64-bit words consumed so far.
    std::uint64_t position() const noexcept { return 2 * block_ - (have_ ? 1 : 0); }

    std::uint64_t next_u64();

    /// Uniform on the open interval (0,1), with 53 bits of resolution.
    double next_uniform();

    double next_normal();
    void fill_normal(std::span<double> out);

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    bool have_ = false;
};

/// Deterministic derivation of an independent seed for a named sub-experiment.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// One Philox4x32-10 block. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

}  // namespace fbmx
