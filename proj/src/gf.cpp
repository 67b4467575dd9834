#include "cutcol/gf.hpp"

#include <stdexcept>

namespace cutcol {

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin bases for n < 2^64.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint32_t smallest_prime_at_least(uint32_t q) {
    if (q < 2) return 2;
    uint32_t n = q;
    while (!is_prime_u64(n)) ++n;
    return n;
}

uint32_t random_prime_31(Rng& rng) {
    for (;;) {
        uint32_t c = static_cast<uint32_t>(rng.uniform(1u << 30, (1u << 31) - 1)) | 1u;
        if (is_prime_u64(c)) return c;
    }
}

std::vector<size_t> row_basis(const std::vector<std::vector<uint32_t>>& rows, Gf f) {
    std::vector<size_t> picked;
    // Basis kept in reduced row echelon form: each row has 1 at its pivot and
    // zeros at every other pivot column, so one elimination pass per candidate
    // decides independence.
    std::vector<std::vector<uint32_t>> reduced;
    std::vector<size_t> pivot_col;
    if (rows.empty()) return picked;
    size_t ncols = rows[0].size();
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<uint32_t> v = rows[r];
        if (v.size() != ncols) throw std::invalid_argument("ragged matrix");
        for (size_t b = 0; b < reduced.size(); ++b) {
            uint32_t c = v[pivot_col[b]];
            if (c == 0) continue;
            const auto& br = reduced[b];
            for (size_t j = 0; j < ncols; ++j)
                if (br[j]) v[j] = f.sub(v[j], f.mul(c, br[j]));
        }
        size_t pc = ncols;
        for (size_t j = 0; j < ncols; ++j)
            if (v[j]) { pc = j; break; }
        if (pc == ncols) continue;  // dependent on earlier rows
        uint32_t iv = f.inv(v[pc]);
        for (size_t j = pc; j < ncols; ++j) v[j] = f.mul(v[j], iv);
        for (size_t b = 0; b < reduced.size(); ++b) {
            uint32_t c = reduced[b][pc];
            if (c == 0) continue;
            auto& br = reduced[b];
            for (size_t j = 0; j < ncols; ++j)
                if (v[j]) br[j] = f.sub(br[j], f.mul(c, v[j]));
        }
        reduced.push_back(std::move(v));
        pivot_col.push_back(pc);
        picked.push_back(r);
        if (picked.size() == ncols) break;  // full column rank, rest is dependent
    }
    return picked;
}

size_t matrix_rank(std::vector<std::vector<uint32_t>> rows, Gf f) {
    return row_basis(rows, f).size();
}

}  // namespace cutcol
