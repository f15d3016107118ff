#ifndef MODCAT_FIELD_HPP
#define MODCAT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace modcat {

/// Arithmetic in the prime field F_p for a small prime p.
/// Elements are stored as uint8_t in [0, p).
class PrimeField {
public:
    explicit PrimeField(int p = 2) : p_(p) {
        if (p < 2 || p > 251 || !is_prime(p))
            throw std::invalid_argument("field characteristic must be a small prime");
        inv_.assign(p, 0);
        for (int a = 1; a < p; ++a) {
            for (int b = 1; b < p; ++b) {
                if (a * b % p == 1) { inv_[a] = static_cast<uint8_t>(b); break; }
            }
        }
    }

    int p() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
    uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
    uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>(a * b % p_); }
    uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[a];
    }
    uint8_t of_int(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<uint8_t>(r);
    }

    static bool is_prime(int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    int p_;
    std::vector<uint8_t> inv_;
};

} // namespace modcat

#endif
