#include "rimhook/genfun.hpp"

namespace rimhook {

namespace {
constexpr std::uint32_t kBase = 1'000'000'000;
}

BigUint::BigUint(std::uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(limbs_[i]) + carry +
                            (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum % kBase);
        carry = static_cast<std::uint32_t>(sum / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

bool BigUint::fits_u64() const {
    if (limbs_.size() > 3) return false;
    if (limbs_.size() < 3) return true;
    // 2^64 - 1 = 18'446744073'709551615 in base-1e9 limbs.
    if (limbs_[2] > 18) return false;
    if (limbs_[2] < 18) return true;
    if (limbs_[1] != 446744073) return limbs_[1] < 446744073;
    return limbs_[0] <= 709551615;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw domain_error("overflow", "value " + str() + " exceeds 64 bits");
    std::uint64_t v = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
    return v;
}

std::string BigUint::str() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::vector<BigUint> genfun_coeffs(const Shape& shape, int degree) {
    if (degree < 0) throw domain_error("invalid-degree", "degree must be >= 0");
    std::vector<BigUint> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs[0] = 1;
    // Multiply by 1/(1 - q^h) one cell at a time, truncated at the degree.
    for (Cell u : shape.cells_row_major()) {
        int h = hook_length(shape, u);
        for (int n = h; n <= degree; ++n) coeffs[n] += coeffs[n - h];
    }
    return coeffs;
}

} // namespace rimhook
