#include "fplab/field.hpp"

#include <stdexcept>
#include <string>

namespace fplab {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t modulus) {
    if (modulus < 2 || modulus >= (std::uint64_t{1} << 31)) {
        throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                    " outside the supported range [2, 2^31)");
    }
    if (!is_prime(modulus)) {
        throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
    }
    p_ = static_cast<std::uint32_t>(modulus);
}

FieldElement PrimeField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
    return FieldElement{static_cast<std::uint32_t>(pow_mod(a.value, e, p_))};
}

FieldElement PrimeField::inv(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

FieldElement binomial_mod_p(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
    if (k > n) return field.zero();
    const std::uint64_t p = field.modulus();
    FieldElement result = field.one();
    while (n > 0 || k > 0) {
        std::uint64_t ni = n % p;
        std::uint64_t ki = k % p;
        if (ki > ni) return field.zero();
        // C(ni, ki) with ni < p: the factorials below are units mod p.
        FieldElement num = field.one();
        FieldElement den = field.one();
        for (std::uint64_t t = 0; t < ki; ++t) {
            num = field.mul(num, FieldElement{static_cast<std::uint32_t>(ni - t)});
            den = field.mul(den, FieldElement{static_cast<std::uint32_t>(t + 1)});
        }
        result = field.mul(result, field.div(num, den));
        n /= p;
        k /= p;
    }
    return result;
}

}  // namespace fplab
