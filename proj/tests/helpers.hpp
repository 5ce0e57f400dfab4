#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prodmat/power_series.hpp"
#include "prodmat/rational.hpp"

namespace test_helpers {

using prodmat::BigInt;
using prodmat::PowerSeries;
using prodmat::Rational;

inline PowerSeries series(std::vector<long long> ints) {
    std::vector<Rational> cs;
    cs.reserve(ints.size());
    for (long long v : ints) {
        cs.emplace_back(v);
    }
    return PowerSeries(std::move(cs));
}

inline std::vector<BigInt> bigints(std::vector<long long> ints) {
    std::vector<BigInt> out;
    out.reserve(ints.size());
    for (long long v : ints) {
        out.emplace_back(v);
    }
    return out;
}

inline bool coeffs_equal(const PowerSeries& f, std::vector<long long> ints) {
    if (f.order() + 1 < ints.size()) {
        return false;
    }
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (f.coeff(i) != Rational(ints[i])) {
            return false;
        }
    }
    return true;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline PowerSeries random_series(std::mt19937& rng, std::size_t order) {
    std::vector<Rational> cs(order + 1);
    for (auto& c : cs) {
        c = random_rational(rng);
    }
    return PowerSeries(std::move(cs));
}

}  // namespace test_helpers
