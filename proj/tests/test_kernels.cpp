#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "toricflip/kernels.hpp"

using namespace toricflip;

namespace {

std::vector<int32_t> random_vec(std::mt19937& rng, std::size_t n, int hi) {
    std::uniform_int_distribution<int32_t> dist(0, hi);
    std::vector<int32_t> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar kernels on small cases") {
    const auto& k = kernels::scalar_table();
    std::vector<int32_t> a{1, 0, 2}, b{1, 3, 2}, c{0, 1, 0};
    CHECK(k.divides(a.data(), b.data(), 3));
    CHECK_FALSE(k.divides(b.data(), a.data(), 3));
    CHECK(k.coprime(a.data(), c.data(), 3));
    CHECK_FALSE(k.coprime(b.data(), c.data(), 3));
    std::vector<int32_t> out(3);
    k.colon(b.data(), a.data(), out.data(), 3);
    CHECK(out == std::vector<int32_t>{0, 3, 0});
    k.lcm(a.data(), c.data(), out.data(), 3);
    CHECK(out == std::vector<int32_t>{1, 1, 2});
    std::vector<int32_t> rows{2, 0, 0, 1, 0, 2, 0, 1, 0};
    CHECK(k.find_divisor(rows.data(), 3, 3, b.data(), 3) == 1);
    CHECK(k.find_multiple(rows.data(), 3, 3, c.data(), 3) == 2);
    CHECK(k.find_divisor(rows.data(), 3, 3, c.data(), 3) == 2);
    std::vector<int32_t> none{0, 0, 1};
    CHECK(k.find_divisor(rows.data(), 3, 3, none.data(), 3) == kernels::npos);
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
    const auto* simd = kernels::avx2_table();
    if (simd == nullptr || !kernels::backend_available(kernels::Backend::Avx2)) {
        MESSAGE("AVX2 backend not available; skipping");
        return;
    }
    const auto& ref = kernels::scalar_table();
    std::mt19937 rng(20240611);
    for (std::size_t n : {1u, 3u, 5u, 7u, 8u, 9u, 12u, 16u, 17u, 23u}) {
        for (int trial = 0; trial < 400; ++trial) {
            auto a = random_vec(rng, n, 3), b = random_vec(rng, n, 3);
            if (trial % 3 == 0) b = a;
            if (trial % 5 == 0)
                for (auto& x : b) x += 1;
            CHECK(ref.divides(a.data(), b.data(), n) == simd->divides(a.data(), b.data(), n));
            CHECK(ref.coprime(a.data(), b.data(), n) == simd->coprime(a.data(), b.data(), n));
            std::vector<int32_t> o1(n), o2(n);
            ref.lcm(a.data(), b.data(), o1.data(), n);
            simd->lcm(a.data(), b.data(), o2.data(), n);
            CHECK(o1 == o2);
            ref.colon(a.data(), b.data(), o1.data(), n);
            simd->colon(a.data(), b.data(), o2.data(), n);
            CHECK(o1 == o2);

            std::size_t count = 1 + rng() % 40;
            std::size_t stride = n + rng() % 3;
            std::vector<int32_t> rows(count * stride);
            for (auto& x : rows) x = static_cast<int32_t>(rng() % 4);
            auto t = random_vec(rng, n, 4);
            CHECK(ref.find_divisor(rows.data(), count, stride, t.data(), n) ==
                  simd->find_divisor(rows.data(), count, stride, t.data(), n));
            auto s = random_vec(rng, n, 1);
            CHECK(ref.find_multiple(rows.data(), count, stride, s.data(), n) ==
                  simd->find_multiple(rows.data(), count, stride, s.data(), n));
        }
    }
}

TEST_CASE("backend selection") {
    auto before = kernels::active_backend();
    kernels::set_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    CHECK(&kernels::active() == &kernels::scalar_table());
    if (kernels::backend_available(kernels::Backend::Avx2)) {
        kernels::set_backend(kernels::Backend::Avx2);
        CHECK(kernels::active_backend() == kernels::Backend::Avx2);
    } else {
        CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::Avx2), std::invalid_argument);
    }
    kernels::set_backend(before);
}
