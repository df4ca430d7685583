#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "leapidx/errors.hpp"

namespace leapidx {

// Exact value of the form sum c_d * sqrt(d) over the fixed basis below, which
// covers every surd the closed-form expressions produce. Kept exact so the
// closed forms can be compared to full precision instead of two decimals.
class Radical {
public:
    static constexpr std::array<int, 7> kBasis{1, 2, 3, 5, 6, 7, 10};

    Radical() = default;

    static Radical integer(std::int64_t value) {
        Radical r;
        r.coeff_[0] = value;
        return r;
    }

    Radical& add(int base, std::int64_t coefficient) {
        coeff_[slot(base)] += coefficient;
        return *this;
    }

    std::int64_t coefficient(int base) const { return coeff_[slot(base)]; }

    double value() const {
        double sum = 0.0;
        for (std::size_t i = 0; i < kBasis.size(); ++i)
            sum += static_cast<double>(coeff_[i]) * std::sqrt(static_cast<double>(kBasis[i]));
        return sum;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < kBasis.size(); ++i) {
            if (coeff_[i] == 0) continue;
            if (!out.empty()) out += coeff_[i] > 0 ? " + " : " - ";
            else if (coeff_[i] < 0) out += "-";
            const std::int64_t c = coeff_[i] > 0 ? coeff_[i] : -coeff_[i];
            if (kBasis[i] == 1) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c) + "*";
                out += "sqrt(" + std::to_string(kBasis[i]) + ")";
            }
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const Radical& a, const Radical& b) { return a.coeff_ == b.coeff_; }

private:
    static std::size_t slot(int base) {
        for (std::size_t i = 0; i < kBasis.size(); ++i)
            if (kBasis[i] == base) return i;
        throw InvalidParameter("sqrt(" + std::to_string(base) + ") outside the radical basis");
    }

    std::array<std::int64_t, 7> coeff_{};
};

} // namespace leapidx
