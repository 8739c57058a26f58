#include "toricflip/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "toricflip/errors.hpp"
#include "toricflip/kernels.hpp"

namespace toricflip {

Exponent add(ExponentView a, ExponentView b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent subtract(ExponentView a, ExponentView b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponent lcm(ExponentView a, ExponentView b) {
    Exponent r(a.size());
    kernels::lcm(a, b, r);
    return r;
}

Exponent support(ExponentView a) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? 1 : 0;
    return r;
}

int64_t total_degree(ExponentView a) {
    int64_t s = 0;
    for (auto x : a) s += x;
    return s;
}

bool is_one(ExponentView a) {
    return std::all_of(a.begin(), a.end(), [](int32_t x) { return x == 0; });
}

bool divides(ExponentView a, ExponentView b) { return kernels::divides(a, b); }
bool coprime(ExponentView a, ExponentView b) { return kernels::coprime(a, b); }

bool strictly_below(ExponentView u, ExponentView v) {
    return kernels::divides(u, v) && !std::equal(u.begin(), u.end(), v.begin(), v.end());
}

TermOrder::TermOrder(IntVector weight, std::vector<std::size_t> priority)
    : weights_{std::move(weight)}, priority_(std::move(priority)) {}

TermOrder::TermOrder(std::vector<IntVector> weights, std::vector<std::size_t> priority)
    : weights_(std::move(weights)), priority_(std::move(priority)) {}

std::strong_ordering TermOrder::compare(ExponentView u, ExponentView v) const {
    for (const auto& w : weights_) {
        int64_t a = kernels::dot(w, u), b = kernels::dot(w, v);
        if (a != b) return a <=> b;
    }
    if (priority_.empty()) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != v[i]) return u[i] <=> v[i];
    } else {
        for (std::size_t i : priority_)
            if (u[i] != v[i]) return u[i] <=> v[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare(ExponentView u, ExponentView v, const TermOrder& order) {
    return order.compare(u, v);
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t nvars, std::vector<Exponent> gens) {
    for (const auto& g : gens)
        if (g.size() != nvars) throw Error(ErrorKind::BadLength, "generator length differs from variable count");
    std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
        auto da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<int32_t> kept;
    std::vector<Exponent> out;
    const auto& k = kernels::active();
    for (auto& g : gens) {
        std::size_t count = nvars ? kept.size() / nvars : 0;
        if (k.find_divisor(kept.data(), count, nvars, g.data(), nvars) != kernels::npos) continue;
        kept.insert(kept.end(), g.begin(), g.end());
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    MonomialIdeal m(nvars);
    m.data_.reserve(out.size() * nvars);
    for (const auto& g : out) m.data_.insert(m.data_.end(), g.begin(), g.end());
    return m;
}

bool MonomialIdeal::is_unit() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (is_one(generator(i))) return true;
    return false;
}

std::vector<Exponent> MonomialIdeal::generators() const {
    std::vector<Exponent> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto g = generator(i);
        out.emplace_back(g.begin(), g.end());
    }
    return out;
}

bool MonomialIdeal::contains(ExponentView u) const {
    return kernels::active().find_divisor(data_.data(), size(), n_, u.data(), n_) != kernels::npos;
}

bool MonomialIdeal::is_minimal_generator(ExponentView u) const {
    // Minimal generators are stored sorted; binary search on the lexicographic order.
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto g = generator(mid);
        auto c = std::lexicographical_compare_three_way(g.begin(), g.end(), u.begin(), u.end());
        if (c == 0) return true;
        if (c < 0) lo = mid + 1;
        else hi = mid;
    }
    return false;
}

std::size_t MonomialIdeal::hash() const {
    std::size_t h = 1469598103934665603ull ^ n_;
    for (int32_t x : data_) {
        h ^= static_cast<std::size_t>(static_cast<uint32_t>(x));
        h *= 1099511628211ull;
    }
    return h;
}

MonomialIdeal colon(const MonomialIdeal& M, ExponentView m) {
    std::vector<Exponent> gens;
    gens.reserve(M.size());
    Exponent tmp(M.nvars());
    for (std::size_t i = 0; i < M.size(); ++i) {
        kernels::colon(M.generator(i), m, tmp);
        gens.push_back(tmp);
    }
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& M) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < M.size(); ++i) gens.push_back(support(M.generator(i)));
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& M, const MonomialIdeal& N) {
    std::vector<Exponent> gens;
    gens.reserve(M.size() * N.size());
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < N.size(); ++j) gens.push_back(lcm(M.generator(i), N.generator(j)));
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& M, const MonomialIdeal& N) {
    auto gens = M.generators();
    auto more = N.generators();
    gens.insert(gens.end(), more.begin(), more.end());
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

MonomialIdeal with_generator(const MonomialIdeal& M, ExponentView g) {
    auto gens = M.generators();
    gens.emplace_back(g.begin(), g.end());
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

MonomialIdeal without_generator(const MonomialIdeal& M, ExponentView g) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < M.size(); ++i) {
        auto h = M.generator(i);
        if (!std::equal(h.begin(), h.end(), g.begin(), g.end())) gens.emplace_back(h.begin(), h.end());
    }
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

bool is_subset(const MonomialIdeal& M, const MonomialIdeal& N) {
    for (std::size_t i = 0; i < M.size(); ++i)
        if (!N.contains(M.generator(i))) return false;
    return true;
}

std::vector<Exponent> fiber(const GradingMatrix& A, const DegreeVector& b) {
    std::vector<Exponent> out;
    if (b.size() != A.d()) throw Error(ErrorKind::BadLength, "degree length differs from row count");
    auto budget = A.weight_of_degree(b);
    if (!budget) return out;
    const std::size_t n = A.n(), d = A.d();
    const auto& w = A.positive_weight();
    Exponent u(n, 0);
    DegreeVector rem = b;
    // Depth-first over variables; the positive weight bounds every exponent.
    auto rec = [&](auto&& self, std::size_t i, int64_t left) -> void {
        if (i == n) {
            if (left == 0 && std::all_of(rem.begin(), rem.end(), [](int64_t x) { return x == 0; }))
                out.push_back(u);
            return;
        }
        const int64_t maxk = left / w[i];
        for (int64_t k = 0; k <= maxk; ++k) {
            u[i] = static_cast<int32_t>(k);
            for (std::size_t r = 0; r < d; ++r) rem[r] -= k * A.entries()(r, i);
            self(self, i + 1, left - k * w[i]);
            for (std::size_t r = 0; r < d; ++r) rem[r] += k * A.entries()(r, i);
        }
        u[i] = 0;
    };
    rec(rec, 0, *budget);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toricflip
