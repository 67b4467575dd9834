#pragma once

#include <cstdint>
#include <vector>

#include "cutcol/rng.hpp"

namespace cutcol {

// Arithmetic in GF(p) for word-sized primes (p < 2^31).
struct Gf {
    uint32_t p;

    uint32_t add(uint32_t a, uint32_t b) const { uint64_t s = uint64_t(a) + b; return s >= p ? uint32_t(s - p) : uint32_t(s); }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t(uint64_t(a) * b % p); }
    uint32_t neg(uint32_t a) const { return a ? p - a : 0; }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t r = 1 % p, base = a % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return uint32_t(r);
    }

    uint32_t inv(uint32_t a) const { return pow(a, p - 2); }

    // Integer v (possibly negative) as a field element.
    uint32_t from_int(int64_t v) const {
        int64_t r = v % int64_t(p);
        return uint32_t(r < 0 ? r + p : r);
    }
};

bool is_prime_u64(uint64_t n);
uint32_t smallest_prime_at_least(uint32_t q);
// Uniform random prime in [2^30, 2^31).
uint32_t random_prime_31(Rng& rng);

// Indices of a row basis of `rows` over GF(p), scanning rows in insertion
// order and pivoting on the first nonzero column. The selected set is the
// greedy prefix basis: row r is kept iff it is independent of rows before it.
std::vector<size_t> row_basis(const std::vector<std::vector<uint32_t>>& rows, Gf f);

size_t matrix_rank(std::vector<std::vector<uint32_t>> rows, Gf f);

}  // namespace cutcol
