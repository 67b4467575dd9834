#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cutcol {

// Signed arbitrary-precision integer, sized for exact oracle sums.
// Magnitude is base 2^32, little-endian, no leading zero limbs; zero has
// empty magnitude and sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    static BigInt from_i128(__int128 v);

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt operator-() const;
    BigInt operator*(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    // Least non-negative residue mod m (m < 2^31).
    uint32_t mod_u32(uint32_t m) const;

    std::string to_string() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
    void trim();
};

}  // namespace cutcol
