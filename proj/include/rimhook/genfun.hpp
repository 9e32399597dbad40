#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rimhook/shape.hpp"

namespace rimhook {

// Unsigned big integer, base 1e9 limbs. The generating-function expansion
// only ever adds coefficients, so addition is all we carry.
class BigUint {
public:
    BigUint(std::uint64_t v = 0); // implicit: coefficients start as small literals

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }

    bool fits_u64() const;
    std::uint64_t to_u64() const; // throws domain_error when it does not fit
    std::string str() const;

    friend bool operator==(const BigUint&, const BigUint&) = default;

private:
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros, empty == 0
};

// Coefficients of prod_{u in shape} 1/(1 - q^{hook(u)}) through degree N,
// exact. The empty shape yields [1, 0, ..., 0].
std::vector<BigUint> genfun_coeffs(const Shape& shape, int degree);

} // namespace rimhook
