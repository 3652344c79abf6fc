#ifndef FPLAB_FIELD_HPP
#define FPLAB_FIELD_HPP

#include <compare>
#include <cstdint>
#include <ostream>

namespace fplab {

/// A residue in [0, p) for some prime field. The field itself is carried
/// separately (by the polynomial or grid that owns the element).
struct FieldElement {
    std::uint32_t value = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElement e) { return os << e.value; }

/// Arithmetic modulo a prime p with 2 <= p < 2^31.
///
/// Primality is verified at construction (deterministic Miller-Rabin on
/// 32-bit inputs); a composite or out-of-range modulus throws
/// std::invalid_argument.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t modulus);

    std::uint32_t modulus() const { return p_; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }

    /// Reduces an arbitrary signed integer into [0, p).
    FieldElement from_int(std::int64_t v) const;

    FieldElement add(FieldElement a, FieldElement b) const {
        std::uint32_t s = a.value + b.value;
        return FieldElement{s >= p_ ? s - p_ : s};
    }
    FieldElement sub(FieldElement a, FieldElement b) const {
        return FieldElement{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    FieldElement neg(FieldElement a) const { return FieldElement{a.value == 0 ? 0 : p_ - a.value}; }
    FieldElement mul(FieldElement a, FieldElement b) const {
        return FieldElement{static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// Throws std::domain_error on zero.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// C(n, k) mod p via Lucas' theorem on the base-p digits of n and k.
/// Returns 0 when k > n.
FieldElement binomial_mod_p(std::uint64_t n, std::uint64_t k, const PrimeField& field);

}  // namespace fplab

#endif  // FPLAB_FIELD_HPP
