#pragma once

// Random hyperelliptic curves y^2 = w(x)^2 + prod (x - x_i) with the known
// rational points (x_i, +-w(x_i)), for exercising divisor arithmetic.

#include <algorithm>
#include <random>
#include <vector>

#include "torsion/curves.hpp"
#include "torsion/jacobian2.hpp"

namespace random_curves {

struct Sample {
    torsion::Curve<torsion::Rational> curve;
    std::vector<torsion::AffinePoint<torsion::Rational>> points;
};

inline Sample make(std::mt19937& rng, long genus)
{
    using torsion::QPoly;
    using torsion::Rational;
    std::uniform_int_distribution<long> small(-6, 6);
    const long n = 2 * genus + 1;
    for (;;) {
        std::vector<long> xs;
        while (static_cast<long>(xs.size()) < n) {
            const long x = small(rng);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) {
                xs.push_back(x);
            }
        }
        std::vector<Rational> wc;
        for (long k = 0; k <= genus; ++k) {
            wc.emplace_back(small(rng));
        }
        const QPoly w(std::move(wc));
        QPoly f = QPoly::constant(Rational(1));
        for (long x : xs) {
            f *= QPoly::linear_root(Rational(x));
        }
        f += w * w;
        if (f.deg() != static_cast<std::size_t>(n) || !torsion::is_squarefree(f)) {
            continue;
        }
        Sample sample{torsion::new_curve(2, n, std::move(f)), {}};
        for (long x : xs) {
            const Rational y = w(Rational(x));
            sample.points.push_back({Rational(x), y});
            if (!y.is_zero()) {
                sample.points.push_back({Rational(x), -y});
            }
        }
        return sample;
    }
}

/// Sum of one to g random known points.
inline torsion::MumfordDivisor<torsion::Rational> random_divisor(std::mt19937& rng, const Sample& s)
{
    std::uniform_int_distribution<std::size_t> pick(0, s.points.size() - 1);
    std::uniform_int_distribution<long> count(1, s.curve.genus());
    auto D = torsion::MumfordDivisor<torsion::Rational>::identity();
    for (long k = count(rng); k > 0; --k) {
        D = torsion::add(s.curve, D, torsion::embed_point(s.curve, s.points[pick(rng)]));
    }
    return D;
}

} // namespace random_curves
