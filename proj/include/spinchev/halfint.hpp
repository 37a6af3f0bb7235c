#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spinchev {

// value = twice / 2
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integer() const { return twice % 2 == 0; }
    // only meaningful when is_integer()
    constexpr int as_int() const { return twice / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        return is_integer() ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
    }
};

// number of states 2j+1
constexpr int dim(HalfInt j) { return j.twice + 1; }

constexpr bool valid_projection(HalfInt j, HalfInt m) {
    return j.twice >= 0 && std::abs(m.twice) <= j.twice && ((m.twice - j.twice) % 2 == 0);
}

// basis index of |j m>, m ascending from -j
constexpr int index_of(HalfInt j, HalfInt m) { return (m.twice + j.twice) / 2; }
constexpr HalfInt projection_at(HalfInt j, int i) { return HalfInt(2 * i - j.twice); }

// (-1)^k for an integer-valued HalfInt
inline int parity_sign(HalfInt k) {
    if (!k.is_integer()) throw std::domain_error("phase exponent is not an integer: " + k.str());
    return (k.as_int() % 2 == 0) ? 1 : -1;
}

// "3/2", "-1/2", "2", "1.5"
inline HalfInt parse_halfint(const std::string& s) {
    std::size_t pos = 0;
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            if (s.substr(slash + 1) != "2") throw std::invalid_argument("denominator must be 2");
            const int num = std::stoi(s.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument("trailing characters");
            return HalfInt(num);
        }
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        const double tw = 2 * v;
        if (tw != static_cast<double>(static_cast<int>(tw))) throw std::invalid_argument("not a half-integer");
        return HalfInt(static_cast<int>(tw));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse half-integer '" + s + "'");
    }
}

inline void require_spin(HalfInt j) {
    if (j.twice < 0) throw std::domain_error("negative spin " + j.str());
}

}  // namespace spinchev
