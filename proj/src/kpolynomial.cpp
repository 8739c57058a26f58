#include "toricflip/kpolynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "toricflip/errors.hpp"

namespace toricflip {

namespace {

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("K-polynomial coefficient overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("K-polynomial coefficient overflow");
    return r;
}

int compare_keys(const int64_t* a, const int64_t* b, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

KPolynomial KPolynomial::one(std::size_t d) {
    KPolynomial p(d);
    std::vector<int64_t> zero(d, 0);
    p.push(zero.data(), 1);
    return p;
}

void KPolynomial::push(const int64_t* key, int64_t c) {
    if (c == 0) return;
    keys_.insert(keys_.end(), key, key + d_);
    coeffs_.push_back(c);
}

DegreeVector KPolynomial::degree(std::size_t i) const {
    return DegreeVector(keys_.begin() + static_cast<std::ptrdiff_t>(i * d_),
                        keys_.begin() + static_cast<std::ptrdiff_t>((i + 1) * d_));
}

int64_t KPolynomial::coefficient_at(const DegreeVector& b) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (compare_keys(keys_.data() + i * d_, b.data(), d_) == 0) return coeffs_[i];
    return 0;
}

KPolynomial KPolynomial::minus_shifted(const KPolynomial& other, const DegreeVector& shift) const {
    KPolynomial out(d_);
    out.keys_.reserve(keys_.size() + other.keys_.size());
    out.coeffs_.reserve(size() + other.size());
    std::vector<int64_t> key(d_);
    std::size_t i = 0, j = 0;
    while (i < size() || j < other.size()) {
        if (j < other.size())
            for (std::size_t k = 0; k < d_; ++k) key[k] = other.keys_[j * d_ + k] + shift[k];
        int c = i == size() ? 1 : j == other.size() ? -1 : compare_keys(keys_.data() + i * d_, key.data(), d_);
        if (c < 0) {
            out.push(keys_.data() + i * d_, coeffs_[i]);
            ++i;
        } else if (c > 0) {
            out.push(key.data(), checked_sub(0, other.coeffs_[j]));
            ++j;
        } else {
            out.push(key.data(), checked_sub(coeffs_[i], other.coeffs_[j]));
            ++i;
            ++j;
        }
    }
    return out;
}

KPolynomial KPolynomial::operator*(const KPolynomial& other) const {
    // Accumulate all products, then sort and combine.
    std::vector<std::pair<DegreeVector, int64_t>> terms;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < other.size(); ++j) {
            DegreeVector k(d_);
            for (std::size_t t = 0; t < d_; ++t) k[t] = keys_[i * d_ + t] + other.keys_[j * d_ + t];
            terms.emplace_back(std::move(k), checked_mul(coeffs_[i], other.coeffs_[j]));
        }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    KPolynomial out(d_);
    for (std::size_t i = 0; i < terms.size();) {
        int64_t c = 0;
        std::size_t j = i;
        for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c = checked_sub(c, -terms[j].second);
        out.push(terms[i].first.data(), c);
        i = j;
    }
    return out;
}

std::string KPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        int64_t c = coeffs_[i];
        os << (i == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        int64_t a = c < 0 ? -c : c;
        bool constant = std::all_of(keys_.begin() + static_cast<std::ptrdiff_t>(i * d_),
                                    keys_.begin() + static_cast<std::ptrdiff_t>((i + 1) * d_),
                                    [](int64_t x) { return x == 0; });
        if (constant) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "t^(";
        for (std::size_t k = 0; k < d_; ++k) os << (k ? "," : "") << keys_[i * d_ + k];
        os << ")";
    }
    return os.str();
}

namespace {

struct Memo {
    IntMatrix matrix;
    PivotRule rule = PivotRule::LargestDegree;
    std::unordered_map<MonomialIdeal, KPolynomial, MonomialIdealHash> table;
};

constexpr std::size_t kMemoCap = 1u << 18;

bool pairwise_coprime(const MonomialIdeal& M) {
    std::vector<int32_t> seen(M.nvars(), 0);
    for (std::size_t i = 0; i < M.size(); ++i) {
        auto g = M.generator(i);
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[k] > 0) {
                if (seen[k]) return false;
                seen[k] = 1;
            }
    }
    return true;
}

std::size_t pick_pivot(const MonomialIdeal& M, PivotRule rule) {
    switch (rule) {
        case PivotRule::First: return 0;
        case PivotRule::Last: return M.size() - 1;
        case PivotRule::LargestDegree: break;
    }
    std::size_t best = 0;
    int64_t best_deg = -1;
    for (std::size_t i = 0; i < M.size(); ++i) {
        int64_t deg = total_degree(M.generator(i));
        if (deg > best_deg) {
            best_deg = deg;
            best = i;
        }
    }
    return best;
}

KPolynomial numerator(const MonomialIdeal& M, const GradingMatrix& A, Memo& memo) {
    const std::size_t d = A.d();
    if (M.is_zero()) return KPolynomial::one(d);
    if (M.is_unit()) return KPolynomial(d);
    if (pairwise_coprime(M)) {
        KPolynomial p = KPolynomial::one(d);
        for (std::size_t i = 0; i < M.size(); ++i) p = p.minus_shifted(p, A.degree(M.generator(i)));
        return p;
    }
    if (auto it = memo.table.find(M); it != memo.table.end()) return it->second;

    const std::size_t pivot = pick_pivot(M, memo.rule);
    auto m = M.generator(pivot);
    MonomialIdeal rest = without_generator(M, m);
    MonomialIdeal quotient = colon(rest, m);
    KPolynomial result = numerator(rest, A, memo).minus_shifted(numerator(quotient, A, memo), A.degree(m));

    if (memo.table.size() >= kMemoCap) memo.table.clear();
    memo.table.emplace(M, result);
    return result;
}

}  // namespace

KPolynomial k_polynomial(const MonomialIdeal& M, const GradingMatrix& A, PivotRule rule) {
    thread_local Memo memo;
    if (!(memo.matrix == A.entries()) || memo.rule != rule) {
        memo.table.clear();
        memo.matrix = A.entries();
        memo.rule = rule;
    }
    return numerator(M, A, memo);
}

int64_t hilbert_value(const KPolynomial& numerator, const GradingMatrix& A, const DegreeVector& b) {
    // Coefficient of t^b in N(t) / prod(1 - t^{a_i}) = sum_c N_c * #fiber(b - c).
    int64_t total = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        DegreeVector c = numerator.degree(i);
        DegreeVector rest(b.size());
        for (std::size_t k = 0; k < b.size(); ++k) rest[k] = b[k] - c[k];
        auto count = static_cast<int64_t>(fiber(A, rest).size());
        total += numerator.coefficient(i) * count;
    }
    return total;
}

}  // namespace toricflip
