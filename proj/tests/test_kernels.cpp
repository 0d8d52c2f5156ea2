#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "gconvex/errors.hpp"
#include "gconvex/kernels.hpp"

using namespace gconvex;

namespace {
bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}
}  // namespace

TEST_CASE("parallel map matches the serial reference bitwise") {
    auto fn = [](std::size_t i) {
        double x = 1e-3 * static_cast<double>(i) + 0.1;
        return std::exp(std::sin(x)) / (1.0 + x * x);
    };
    std::vector<double> serial = kernels::map_index(20001, fn, Exec::Serial);
    std::vector<double> parallel = kernels::map_index(20001, fn, Exec::Parallel);
    CHECK(bitwise_equal(serial, parallel));
}

TEST_CASE("simpson integrates known functions") {
    double quad = kernels::simpson([](double x) { return x * x; }, 0.0, 1.0, 128, Exec::Serial);
    CHECK(quad == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    double ex = kernels::simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 2048,
                                 Exec::Serial);
    CHECK(ex == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
}

TEST_CASE("simpson parallel equals serial bitwise") {
    auto f = [](double x) { return std::exp(0.5 * x) + std::log(x + 2.0); };
    double serial = kernels::simpson(f, -1.0, 3.0, 4096, Exec::Serial);
    double parallel = kernels::simpson(f, -1.0, 3.0, 4096, Exec::Parallel);
    CHECK(std::memcmp(&serial, &parallel, sizeof(double)) == 0);
}

TEST_CASE("simpson validates panel counts") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(kernels::simpson(f, 0.0, 1.0, 3, Exec::Serial), PreconditionError);
    CHECK_THROWS_AS(kernels::simpson(f, 0.0, 1.0, 0, Exec::Serial), PreconditionError);
}

TEST_CASE("simpson converges under refinement") {
    auto f = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
    double coarse = kernels::simpson(f, 0.0, 2.0, 1024);
    double fine = kernels::simpson(f, 0.0, 2.0, 8192);
    CHECK(std::fabs(coarse - fine) <= 1e-9 * (1.0 + std::fabs(fine)));
}

TEST_CASE("errors inside parallel maps surface deterministically") {
    auto fn = [](std::size_t i) -> double {
        if (i % 37 == 5) throw EvalError("boom", static_cast<double>(i));
        return static_cast<double>(i);
    };
    // lowest failing index is 5 under both policies
    for (Exec exec : {Exec::Serial, Exec::Parallel}) {
        try {
            kernels::map_index(1000, fn, exec);
            FAIL("expected an exception");
        } catch (const EvalError& e) {
            CHECK(e.x() == 5.0);
        }
    }
}

TEST_CASE("for_index runs every slot exactly once") {
    std::vector<int> hits(997, 0);
    kernels::for_index(hits.size(), [&](std::size_t i) { hits[i] += 1; }, Exec::Parallel);
    for (int h : hits) CHECK(h == 1);
}
