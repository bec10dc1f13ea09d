#include "target_space.hpp"

#include <modp/complex.hpp>
#include <modp/errors.hpp>

namespace modp::detail {

namespace {

std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t p, int r)
{
    std::vector<std::uint32_t> d(static_cast<std::size_t>(r));
    for (auto & x : d) {
        x = code % p;
        code /= p;
    }
    return d;
}

std::uint32_t code_of(const std::vector<std::uint32_t> & d, std::uint32_t p)
{
    std::uint32_t code = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        code = code * p + *it;
    return code;
}

// Digit-wise sum table over the codes of a block of `width` digits.
std::vector<std::uint32_t> block_add_table(std::uint32_t p, int width, std::uint32_t block)
{
    std::vector<std::uint32_t> table(static_cast<std::size_t>(block) * block);
    for (std::uint32_t a = 0; a < block; ++a) {
        auto da = digits_of(a, p, width);
        for (std::uint32_t b = 0; b < block; ++b) {
            auto db = digits_of(b, p, width);
            for (int i = 0; i < width; ++i)
                db[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
            table[static_cast<std::size_t>(a) * block + b] = code_of(db, p);
        }
    }
    return table;
}

} // namespace

TargetSpace::TargetSpace(Prime prime, int r) : p_(prime.value()), r_(r)
{
    if (r < 1)
        throw DomainError("target dimension must be >= 1");
    auto size = checked_power(p_, r);
    if (size > kDefaultEnumerationGuard)
        throw BudgetError("target F_p^r with p^r = " + std::to_string(size) + " exceeds the search guard");
    size_ = static_cast<std::uint32_t>(size);

    for (int s = 0; s <= r; ++s) {
        powers_.push_back(static_cast<std::uint32_t>(checked_power(p_, s)));
        span_orbits_.push_back((powers_.back() - 1) / (p_ - 1));
    }

    // Split addition tables are used while each block table stays small.
    constexpr std::uint64_t kMaxBlockTable = std::uint64_t{1} << 24;
    if (p_ != 2 && std::uint64_t{powers_[static_cast<std::size_t>((r + 1) / 2)]} *
                powers_[static_cast<std::size_t>((r + 1) / 2)] <= kMaxBlockTable) {
        int lo_width = (r + 1) / 2;
        int hi_width = r - lo_width;
        lo_size_ = powers_[static_cast<std::size_t>(lo_width)];
        hi_size_ = powers_[static_cast<std::size_t>(hi_width)];
        lo_.resize(size_);
        hi_.resize(size_);
        for (std::uint32_t c = 0; c < size_; ++c) {
            lo_[c] = c % lo_size_;
            hi_[c] = c / lo_size_;
        }
        add_lo_ = block_add_table(p_, lo_width, lo_size_);
        add_hi_ = block_add_table(p_, hi_width, hi_size_);
    }

    orbit_.assign(size_, 0);
    for (std::uint32_t c = 1; c < size_; ++c) {
        auto d = digits_of(c, p_, r);
        std::size_t lead = 0;
        while (d[lead] == 0)
            ++lead;
        if (d[lead] != 1)
            continue;
        auto id = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back(c);
        bool zero_one = true;
        for (auto x : d)
            zero_one = zero_one && x <= 1;
        zero_one_.push_back(zero_one ? 1 : 0);
        for (std::uint32_t k = 1; k < p_; ++k)
            orbit_[scale(c, k)] = id;
    }
}

std::uint32_t TargetSpace::add_slow(std::uint32_t a, std::uint32_t b) const noexcept
{
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (int i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t TargetSpace::scale(std::uint32_t a, std::uint32_t c) const
{
    auto d = digits_of(a, p_, r_);
    for (auto & x : d)
        x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * c) % p_);
    return code_of(d, p_);
}

FpVector TargetSpace::to_vector(std::uint32_t code) const
{
    auto d = digits_of(code, p_, r_);
    std::vector<std::int64_t> coords(d.begin(), d.end());
    return FpVector{Prime{p_}, std::move(coords)};
}

std::uint32_t TargetSpace::from_vector(const FpVector & v) const
{
    if (v.size() != static_cast<std::size_t>(r_) || v.modulus().value() != p_)
        throw ShapeError("vector does not live in the target space");
    std::vector<std::uint32_t> d(v.coords().begin(), v.coords().end());
    return code_of(d, p_);
}

} // namespace modp::detail
