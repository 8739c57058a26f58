#include "toricflip/kernels.hpp"

#include <algorithm>

namespace toricflip::kernels {
namespace {

bool divides_scalar(const int32_t* a, const int32_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void lcm_scalar(const int32_t* a, const int32_t* b, int32_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

void colon_scalar(const int32_t* a, const int32_t* b, int32_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a[i] - b[i], 0);
}

bool coprime_scalar(const int32_t* a, const int32_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

std::size_t find_divisor_scalar(const int32_t* rows, std::size_t count, std::size_t stride,
                                const int32_t* target, std::size_t n) {
    for (std::size_t r = 0; r < count; ++r)
        if (divides_scalar(rows + r * stride, target, n)) return r;
    return npos;
}

std::size_t find_multiple_scalar(const int32_t* rows, std::size_t count, std::size_t stride,
                                 const int32_t* target, std::size_t n) {
    for (std::size_t r = 0; r < count; ++r)
        if (divides_scalar(target, rows + r * stride, n)) return r;
    return npos;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{divides_scalar, lcm_scalar,          colon_scalar,
                                   coprime_scalar, find_divisor_scalar, find_multiple_scalar};
    return table;
}

}  // namespace toricflip::kernels
