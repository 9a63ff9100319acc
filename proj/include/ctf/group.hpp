#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctf {

/// Finite abelian group Z_{m1} x ... x Z_{mk}. Elements are encoded as
/// integers in [0, order) in mixed radix, first modulus least significant.
/// The identity is 0.
class AbelianGroup {
public:
    /// Trivial group of order 1.
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<std::int64_t> moduli);

    static AbelianGroup cyclic(std::int64_t order);
    /// Parses "m1,m2,...".
    static AbelianGroup parse(std::string_view text);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t negate(std::int64_t a) const;
    std::int64_t subtract(std::int64_t a, std::int64_t b) const { return add(a, negate(b)); }
    /// Image of an integer under Z -> group, n |-> n * (1, 1, ..., 1).
    std::int64_t from_integer(std::int64_t n) const;

    std::string to_string() const;

private:
    std::vector<std::int64_t> moduli_;
    std::int64_t order_ = 1;
    bool cyclic_ = true;
};

} // namespace ctf
