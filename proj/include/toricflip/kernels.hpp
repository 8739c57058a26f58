#pragma once

// Exponent-vector kernels.
//
// Every routine comes in a portable scalar form and, on x86-64, an AVX2 form.
// The active backend is chosen once at startup from CPUID and can be forced
// with the TORICFLIP_KERNELS environment variable ("scalar" or "avx2") or
// with set_backend(). All backends must return identical results; the
// equivalence suite in tests/test_kernels.cpp checks this on random input.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace toricflip::kernels {

enum class Backend { Scalar, Avx2 };

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct KernelTable {
    // a <= b componentwise
    bool (*divides)(const int32_t* a, const int32_t* b, std::size_t n);
    // out = max(a, b)
    void (*lcm)(const int32_t* a, const int32_t* b, int32_t* out, std::size_t n);
    // out = max(a - b, 0)
    void (*colon)(const int32_t* a, const int32_t* b, int32_t* out, std::size_t n);
    // no index where both are positive
    bool (*coprime)(const int32_t* a, const int32_t* b, std::size_t n);
    // first row r of the row-major block (count x stride, rows of length n)
    // with row <= target, or npos
    std::size_t (*find_divisor)(const int32_t* rows, std::size_t count, std::size_t stride,
                                const int32_t* target, std::size_t n);
    // first row r with target <= row, or npos
    std::size_t (*find_multiple)(const int32_t* rows, std::size_t count, std::size_t stride,
                                 const int32_t* target, std::size_t n);
};

const KernelTable& scalar_table();
// Null when the binary was built without AVX2 support.
const KernelTable* avx2_table();

bool backend_available(Backend b);
void set_backend(Backend b);
Backend active_backend();
std::string_view backend_name(Backend b);

const KernelTable& active();

inline bool divides(std::span<const int32_t> a, std::span<const int32_t> b) {
    return active().divides(a.data(), b.data(), a.size());
}
inline void lcm(std::span<const int32_t> a, std::span<const int32_t> b, std::span<int32_t> out) {
    active().lcm(a.data(), b.data(), out.data(), a.size());
}
inline void colon(std::span<const int32_t> a, std::span<const int32_t> b, std::span<int32_t> out) {
    active().colon(a.data(), b.data(), out.data(), a.size());
}
inline bool coprime(std::span<const int32_t> a, std::span<const int32_t> b) {
    return active().coprime(a.data(), b.data(), a.size());
}
// Weight pairing; not dispatched, the weight rows are short and 64-bit.
inline int64_t dot(std::span<const int64_t> w, std::span<const int32_t> e) {
    int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * static_cast<int64_t>(e[i]);
    return s;
}

}  // namespace toricflip::kernels
