#pragma once

// Flat encoding of F_p^r used by the search kernel.
//
// A vector is its integer code sum_i c_i p^i, so coordinate 0 is the least
// significant digit and span(e_0..e_{s-1}) is exactly the codes below p^s.
// Scalar orbits are numbered densely in increasing code order of their
// representative (first nonzero coordinate equal to 1); the orbits inside
// span(e_0..e_{s-1}) are therefore the ids below (p^s - 1) / (p - 1), and the
// id equal to that bound is the orbit of e_s.

#include <modp/fp.hpp>

#include <cstdint>
#include <vector>

namespace modp::detail {

class TargetSpace {
public:
    TargetSpace(Prime p, int r);

    std::uint32_t p() const noexcept { return p_; }
    int r() const noexcept { return r_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t orbit_count() const noexcept { return static_cast<std::uint32_t>(reps_.size()); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        if (p_ == 2)
            return a ^ b;
        if (add_lo_.empty())
            return add_slow(a, b);
        return add_lo_[lo_[a] * lo_size_ + lo_[b]] + lo_size_ * add_hi_[hi_[a] * hi_size_ + hi_[b]];
    }

    // c * a for a scalar residue c.
    std::uint32_t scale(std::uint32_t a, std::uint32_t c) const;

    std::uint32_t orbit_of(std::uint32_t code) const noexcept { return orbit_[code]; }
    std::uint32_t representative(std::uint32_t orbit) const noexcept { return reps_[orbit]; }
    bool is_zero_one(std::uint32_t orbit) const noexcept { return zero_one_[orbit] != 0; }

    // Number of orbits inside span(e_0..e_{s-1}).
    std::uint32_t orbits_in_span(int s) const noexcept { return span_orbits_[static_cast<std::size_t>(s)]; }
    std::uint32_t power(int s) const noexcept { return powers_[static_cast<std::size_t>(s)]; }

    FpVector to_vector(std::uint32_t code) const;
    std::uint32_t from_vector(const FpVector & v) const;

private:
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const noexcept;

    std::uint32_t p_;
    int r_;
    std::uint32_t size_;
    std::vector<std::uint32_t> powers_;
    std::vector<std::uint32_t> span_orbits_;

    std::uint32_t lo_size_ = 1;
    std::uint32_t hi_size_ = 1;
    std::vector<std::uint32_t> lo_, hi_;
    std::vector<std::uint32_t> add_lo_, add_hi_;

    std::vector<std::uint32_t> orbit_;
    std::vector<std::uint32_t> reps_;
    std::vector<std::uint8_t> zero_one_;
};

} // namespace modp::detail
