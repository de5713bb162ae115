#include <algorithm>
#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "qcoherence/errors.hpp"
#include "qcoherence/numerics.hpp"

using namespace qcoh;

namespace {

// xorshift64*; fixed seeds keep the randomized cases reproducible.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    double next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return static_cast<double>((s * 2685821657736338717ULL) >> 11) /
               9007199254740992.0;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
};

}  // namespace

TEST_CASE("cubic: family stationary equation has exact small roots") {
    const auto roots = cubic_real_roots({4.0, -42.0, 90.0, 0.0});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == 0.0);
    CHECK(roots[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(roots[2] == doctest::Approx(7.5).epsilon(1e-14));
}

TEST_CASE("cubic: zero constant term factors exactly") {
    const auto roots = cubic_real_roots({1.0, 0.0, -4.0, 0.0});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(roots[1] == 0.0);
    CHECK(roots[2] == doctest::Approx(2.0).epsilon(1e-14));

    const auto double_zero = cubic_real_roots({2.0, -6.0, 0.0, 0.0});
    REQUIRE(double_zero.size() == 3);
    CHECK(double_zero[0] == 0.0);
    CHECK(double_zero[1] == 0.0);
    CHECK(double_zero[2] == doctest::Approx(3.0).epsilon(1e-14));

    // x (x^2 + 1): only the zero root is real.
    const auto lone = cubic_real_roots({1.0, 0.0, 1.0, 0.0});
    REQUIRE(lone.size() == 1);
    CHECK(lone[0] == 0.0);
}

TEST_CASE("cubic: random spread roots round trip") {
    Rng rng(0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 200; ++trial) {
        double r[3] = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                       rng.uniform(-10.0, 10.0)};
        std::sort(r, r + 3);
        if (r[1] - r[0] < 0.05 || r[2] - r[1] < 0.05) continue;  // keep them separated
        const double lead = rng.uniform(0.2, 5.0) * (rng.next() < 0.5 ? -1.0 : 1.0);
        const Cubic c{lead, -lead * (r[0] + r[1] + r[2]),
                      lead * (r[0] * r[1] + r[0] * r[2] + r[1] * r[2]),
                      -lead * r[0] * r[1] * r[2]};
        const auto roots = cubic_real_roots(c);
        REQUIRE(roots.size() == 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(roots[i] == doctest::Approx(r[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("cubic: single real root via Cardano") {
    // (x - 2)(x^2 + x + 1)
    const auto roots = cubic_real_roots({1.0, -1.0, -1.0, -2.0});
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("cubic: repeated roots") {
    // (x - 1)^2 (x - 4): double root detected on the discriminant boundary
    const auto dbl = cubic_real_roots({1.0, -6.0, 9.0, -4.0});
    REQUIRE(dbl.size() == 3);
    CHECK(dbl[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(dbl[1] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(dbl[2] == doctest::Approx(4.0).epsilon(1e-8));

    // (x - 5)^3
    const auto triple = cubic_real_roots({1.0, -15.0, 75.0, -125.0});
    REQUIRE(triple.size() == 3);
    for (double root : triple) CHECK(root == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("cubic: degenerate leading coefficient throws") {
    CHECK_THROWS_AS(cubic_real_roots({0.0, 1.0, 2.0, 3.0}), DegenerateCubic);
}

TEST_CASE("integrate_line: reference integrals") {
    const double sqrt_pi = 1.772453850905516;
    auto gauss = integrate_line([](double x) { return std::exp(-x * x); });
    CHECK(gauss.value == doctest::Approx(sqrt_pi).epsilon(1e-10));
    CHECK(gauss.error_estimate < 1e-9);

    auto lorentz = integrate_line([](double x) { return 1.0 / (1.0 + x * x); });
    CHECK(lorentz.value == doctest::Approx(3.141592653589793).epsilon(1e-10));

    auto narrow = integrate_line([](double x) {
        const double d = x - 3.0;
        return std::exp(-100.0 * d * d);
    });
    CHECK(narrow.value == doctest::Approx(sqrt_pi / 10.0).epsilon(1e-9));
}

TEST_CASE("integrate_line: random displaced gaussians") {
    Rng rng(0x2545f4914f6cdd1dULL);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = rng.uniform(0.1, 100.0);
        const double b = rng.uniform(-10.0, 10.0);
        const double amp = rng.uniform(0.5, 2.0);
        auto res = integrate_line([a, b, amp](double x) {
            const double d = x - b;
            return amp * std::exp(-a * d * d);
        });
        const double exact = amp * std::sqrt(3.141592653589793 / a);
        CHECK(res.value == doctest::Approx(exact).epsilon(1e-9));
        CHECK(res.evaluations > 0);
    }
}

TEST_CASE("integrate_line: invalid input and non-convergence") {
    CHECK_THROWS_AS(integrate_line([](double) { return 0.0; }, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_line([](double) { return 0.0; }, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_line(std::function<double(double)>{}), std::invalid_argument);
    // Machine precision floor sits far above this tolerance; budget must trip.
    CHECK_THROWS_AS(integrate_line([](double x) { return 1.0 / (1.0 + x * x); }, 1e-30),
                    NonConvergence);
}

TEST_CASE("integrate_line: zero integrand") {
    auto res = integrate_line([](double) { return 0.0; });
    CHECK(res.value == 0.0);
    CHECK(res.error_estimate == 0.0);
}

TEST_CASE("coth_stable: values, symmetry, saturation, pole") {
    CHECK(coth_stable(1.0) == doctest::Approx(1.3130352854993312).epsilon(1e-15));
    CHECK(coth_stable(0.5) == doctest::Approx(2.163953413738653).epsilon(1e-15));
    CHECK(coth_stable(20.0) == 1.0);
    CHECK(coth_stable(-20.0) == -1.0);
    CHECK(coth_stable(1e3) == 1.0);
    CHECK_THROWS_AS(coth_stable(0.0), PoleAtZero);

    Rng rng(0xdeadbeefULL);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = rng.uniform(0.01, 15.0);
        CHECK(coth_stable(x) * std::tanh(x) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(coth_stable(-x) == doctest::Approx(-coth_stable(x)).epsilon(1e-15));
        CHECK(coth_stable(x) > 1.0);
    }
}
