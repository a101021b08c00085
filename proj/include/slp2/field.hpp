#pragma once

#include <cstdint>
#include <stdexcept>

namespace slp2 {

/// Arithmetic in the prime field F_p, p prime and < 2^31 so products fit
/// in 64 bits. Elements are canonical representatives in [0, p).
class PrimeField {
public:
    using elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime below 2^31");
    }

    std::uint64_t modulus() const { return p_; }

    elem reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<elem>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    elem add(elem a, elem b) const { elem s = a + b; return s >= p_ ? s - p_ : s; }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
    elem mul(elem a, elem b) const { return (a * b) % p_; }

    elem pow(elem a, std::uint64_t e) const {
        elem r = 1 % p_;
        a %= p_;
        while (e != 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    elem inv(elem a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField::inv: zero is not invertible");
        return pow(a, p_ - 2);
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

/// Default working modulus: large enough that random genericity failures
/// are negligible, small enough for single-word arithmetic.
inline constexpr std::uint64_t kDefaultModulus = 1'000'003;

} // namespace slp2
