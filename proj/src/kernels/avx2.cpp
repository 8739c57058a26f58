// Compiled with -mavx2; only reached after a CPUID check in dispatch.cpp.

#include "toricflip/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace toricflip::kernels {
namespace {

alignas(32) constexpr int32_t kMaskTable[16] = {-1, -1, -1, -1, -1, -1, -1, -1,
                                                0,  0,  0,  0,  0,  0,  0,  0};

// First `rem` lanes active, rem in [0, 8].
inline __m256i tail_mask(std::size_t rem) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(kMaskTable + 8 - rem));
}

inline __m256i load8(const int32_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

bool divides_avx2(const int32_t* a, const int32_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i gt = _mm256_cmpgt_epi32(load8(a + i), load8(b + i));
        if (!_mm256_testz_si256(gt, gt)) return false;
    }
    if (i < n) {
        __m256i m = tail_mask(n - i);
        __m256i gt = _mm256_cmpgt_epi32(_mm256_maskload_epi32(a + i, m),
                                        _mm256_maskload_epi32(b + i, m));
        if (!_mm256_testz_si256(gt, gt)) return false;
    }
    return true;
}

void lcm_avx2(const int32_t* a, const int32_t* b, int32_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_max_epi32(load8(a + i), load8(b + i)));
    if (i < n) {
        __m256i m = tail_mask(n - i);
        _mm256_maskstore_epi32(out + i, m,
                               _mm256_max_epi32(_mm256_maskload_epi32(a + i, m),
                                                _mm256_maskload_epi32(b + i, m)));
    }
}

void colon_avx2(const int32_t* a, const int32_t* b, int32_t* out, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_max_epi32(_mm256_sub_epi32(load8(a + i), load8(b + i)), zero));
    if (i < n) {
        __m256i m = tail_mask(n - i);
        __m256i d = _mm256_sub_epi32(_mm256_maskload_epi32(a + i, m), _mm256_maskload_epi32(b + i, m));
        _mm256_maskstore_epi32(out + i, m, _mm256_max_epi32(d, zero));
    }
}

bool coprime_avx2(const int32_t* a, const int32_t* b, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i both = _mm256_and_si256(_mm256_cmpgt_epi32(load8(a + i), zero),
                                        _mm256_cmpgt_epi32(load8(b + i), zero));
        if (!_mm256_testz_si256(both, both)) return false;
    }
    if (i < n) {
        __m256i m = tail_mask(n - i);
        __m256i both = _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_maskload_epi32(a + i, m), zero),
                                        _mm256_cmpgt_epi32(_mm256_maskload_epi32(b + i, m), zero));
        if (!_mm256_testz_si256(both, both)) return false;
    }
    return true;
}

// Short rows (n <= 8, the common case) keep the target in one register and
// test each row with a single masked compare.
std::size_t find_divisor_avx2(const int32_t* rows, std::size_t count, std::size_t stride,
                              const int32_t* target, std::size_t n) {
    if (n <= 8) {
        __m256i m = tail_mask(n);
        __m256i t = _mm256_maskload_epi32(target, m);
        for (std::size_t r = 0; r < count; ++r) {
            __m256i gt = _mm256_cmpgt_epi32(_mm256_maskload_epi32(rows + r * stride, m), t);
            if (_mm256_testz_si256(gt, gt)) return r;
        }
        return npos;
    }
    for (std::size_t r = 0; r < count; ++r)
        if (divides_avx2(rows + r * stride, target, n)) return r;
    return npos;
}

std::size_t find_multiple_avx2(const int32_t* rows, std::size_t count, std::size_t stride,
                               const int32_t* target, std::size_t n) {
    if (n <= 8) {
        __m256i m = tail_mask(n);
        __m256i t = _mm256_maskload_epi32(target, m);
        for (std::size_t r = 0; r < count; ++r) {
            __m256i gt = _mm256_cmpgt_epi32(t, _mm256_maskload_epi32(rows + r * stride, m));
            if (_mm256_testz_si256(gt, gt)) return r;
        }
        return npos;
    }
    for (std::size_t r = 0; r < count; ++r)
        if (divides_avx2(target, rows + r * stride, n)) return r;
    return npos;
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table{divides_avx2, lcm_avx2,          colon_avx2,
                                   coprime_avx2, find_divisor_avx2, find_multiple_avx2};
    return &table;
}

}  // namespace toricflip::kernels

#else

namespace toricflip::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace toricflip::kernels

#endif
