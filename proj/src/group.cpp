#include "ctf/group.hpp"

#include <limits>
#include <stdexcept>

namespace ctf {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (auto m : moduli_) {
        if (m < 1) throw std::invalid_argument("group moduli must be positive");
        if (order_ > std::numeric_limits<std::int32_t>::max() / m) throw std::invalid_argument("group order too large");
        order_ *= m;
    }
    std::size_t nontrivial = 0;
    for (auto m : moduli_)
        if (m > 1) ++nontrivial;
    cyclic_ = nontrivial <= 1;
}

AbelianGroup AbelianGroup::cyclic(std::int64_t order) { return AbelianGroup(std::vector<std::int64_t>{order}); }

AbelianGroup AbelianGroup::parse(std::string_view text) {
    std::vector<std::int64_t> moduli;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (token.empty()) throw std::invalid_argument("empty modulus in group '" + std::string(text) + "'");
        std::int64_t value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad modulus in group '" + std::string(text) + "'");
            value = value * 10 + (c - '0');
            if (value > std::numeric_limits<std::int32_t>::max()) throw std::invalid_argument("modulus too large");
        }
        moduli.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return AbelianGroup(std::move(moduli));
}

std::int64_t AbelianGroup::add(std::int64_t a, std::int64_t b) const {
    if (cyclic_) {
        auto s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    std::int64_t result = 0, stride = 1;
    for (auto m : moduli_) {
        auto da = a % m, db = b % m;
        a /= m;
        b /= m;
        auto d = da + db;
        if (d >= m) d -= m;
        result += d * stride;
        stride *= m;
    }
    return result;
}

std::int64_t AbelianGroup::negate(std::int64_t a) const {
    if (cyclic_) return a == 0 ? 0 : order_ - a;
    std::int64_t result = 0, stride = 1;
    for (auto m : moduli_) {
        auto d = a % m;
        a /= m;
        result += (d == 0 ? 0 : m - d) * stride;
        stride *= m;
    }
    return result;
}

std::int64_t AbelianGroup::from_integer(std::int64_t n) const {
    std::int64_t result = 0, stride = 1;
    for (auto m : moduli_) {
        auto d = ((n % m) + m) % m;
        result += d * stride;
        stride *= m;
    }
    return result;
}

std::string AbelianGroup::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(moduli_[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace ctf
