#include "cutcol/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcol {

BigInt::BigInt(int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    uint64_t a = v > 0 ? static_cast<uint64_t>(v) : ~static_cast<uint64_t>(v) + 1;
    while (a) { mag_.push_back(static_cast<uint32_t>(a)); a >>= 32; }
}

BigInt BigInt::from_i128(__int128 v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = v > 0 ? 1 : -1;
    unsigned __int128 a = v > 0 ? static_cast<unsigned __int128>(v)
                                : ~static_cast<unsigned __int128>(v) + 1;
    while (a) { r.mag_.push_back(static_cast<uint32_t>(a)); a >>= 32; }
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = s < 0;
        a[i] = static_cast<uint32_t>(s + (borrow ? (1LL << 32) : 0));
    }
    if (borrow) throw std::logic_error("BigInt::sub_mag underflow");
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) { *this = o; return *this; }
    if (sign_ == o.sign_) {
        add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
    if (c > 0) {
        sub_mag(mag_, o.mag_);
    } else {
        std::vector<uint32_t> tmp = o.mag_;
        sub_mag(tmp, mag_);
        mag_ = std::move(tmp);
        sign_ = o.sign_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + carry +
                           static_cast<uint64_t>(mag_[i]) * o.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

uint32_t BigInt::mod_u32(uint32_t m) const {
    if (m == 0) throw std::invalid_argument("mod 0");
    uint64_t rem = 0;
    for (size_t i = mag_.size(); i-- > 0;)
        rem = ((rem << 32) | mag_[i]) % m;
    if (sign_ < 0 && rem != 0) rem = m - rem;
    return static_cast<uint32_t>(rem);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        uint64_t rem = 0;
        for (size_t i = tmp.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | tmp[i];
            tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace cutcol
