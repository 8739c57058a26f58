#include "toricflip/graver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toricflip/errors.hpp"
#include "toricflip/kernels.hpp"

namespace toricflip {

Binomial canonical_pair(ExponentView u, ExponentView v) {
    Exponent a(u.begin(), u.end()), b(v.begin(), v.end());
    if (a < b) std::swap(a, b);
    return Binomial::pure(std::move(a), std::move(b));
}

bool GraverBasis::contains(ExponentView u, ExponentView v) const {
    Binomial c = canonical_pair(u, v);
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Binomial& e) { return e.lead == c.lead && e.trail == c.trail; });
}

int64_t certificate_weight(const GradingMatrix& A, const Binomial& f) {
    return kernels::dot(A.positive_weight(), f.lead);
}

namespace {

void sort_elements(const GradingMatrix& A, std::vector<Binomial>& elements) {
    std::sort(elements.begin(), elements.end(), [&](const Binomial& x, const Binomial& y) {
        auto wx = certificate_weight(A, x), wy = certificate_weight(A, y);
        if (wx != wy) return wx < wy;
        if (x.lead != y.lead) return x.lead < y.lead;
        return x.trail < y.trail;
    });
}

GradingMatrix lawrence_lifting(const GradingMatrix& A) {
    const std::size_t d = A.d(), n = A.n();
    IntMatrix L(d + n, 2 * n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) L(r, c) = A.entries()(r, c);
    for (std::size_t i = 0; i < n; ++i) {
        L(d + i, i) = 1;
        L(d + i, n + i) = 1;
    }
    return validate_grading(L);
}

}  // namespace

GraverBasis graver_basis(const GradingMatrix& A) {
    const std::size_t n = A.n();
    GraverBasis out;
    if (n == A.d()) return out;
    GradingMatrix L = lawrence_lifting(A);
    auto gens = toric_ideal(L);
    MarkedGB gb = buchberger(gens, TermOrder(L.positive_weight()), L);
    for (const auto& b : gb.binomials) {
        // x^p y^q - x^q y^p: the first block carries the kernel vector.
        Exponent u(b.lead.begin(), b.lead.begin() + static_cast<std::ptrdiff_t>(n));
        Exponent v(b.trail.begin(), b.trail.begin() + static_cast<std::ptrdiff_t>(n));
        out.elements.push_back(canonical_pair(u, v));
    }
    sort_elements(A, out.elements);
    return out;
}

GraverBasis graver_oracle(const GradingMatrix& A, int64_t bound) {
    const std::size_t n = A.n();
    const auto& w = A.positive_weight();
    GraverBasis out;
    // Found elements as rows [lead | trail] for conformal-divisor queries.
    std::vector<int32_t> rows;
    Exponent u(n, 0);
    for (int64_t t = 1; t <= bound; ++t) {
        std::map<DegreeVector, std::vector<Exponent>> fibers;
        auto rec = [&](auto&& self, std::size_t i, int64_t left) -> void {
            if (i == n) {
                if (left == 0) fibers[A.degree(u)].push_back(u);
                return;
            }
            for (int64_t k = 0; k * w[i] <= left; ++k) {
                u[i] = static_cast<int32_t>(k);
                self(self, i + 1, left - k * w[i]);
            }
            u[i] = 0;
        };
        rec(rec, 0, t);
        std::vector<Binomial> found;
        std::vector<int32_t> key(2 * n);
        for (auto& [deg, mons] : fibers) {
            for (std::size_t i = 0; i < mons.size(); ++i)
                for (std::size_t j = 0; j < i; ++j) {
                    if (!coprime(mons[i], mons[j])) continue;
                    // mons[i] > mons[j] lexicographically; both orientations are queried.
                    const std::size_t count = rows.size() / (2 * n);
                    std::copy(mons[i].begin(), mons[i].end(), key.begin());
                    std::copy(mons[j].begin(), mons[j].end(), key.begin() + static_cast<std::ptrdiff_t>(n));
                    if (kernels::active().find_divisor(rows.data(), count, 2 * n, key.data(), 2 * n) != kernels::npos)
                        continue;
                    std::copy(mons[j].begin(), mons[j].end(), key.begin());
                    std::copy(mons[i].begin(), mons[i].end(), key.begin() + static_cast<std::ptrdiff_t>(n));
                    if (kernels::active().find_divisor(rows.data(), count, 2 * n, key.data(), 2 * n) != kernels::npos)
                        continue;
                    found.push_back(Binomial::pure(mons[i], mons[j]));
                }
        }
        // Elements of equal weight cannot be conformally comparable, so rows grow per level.
        for (auto& f : found) {
            rows.insert(rows.end(), f.lead.begin(), f.lead.end());
            rows.insert(rows.end(), f.trail.begin(), f.trail.end());
            out.elements.push_back(std::move(f));
        }
    }
    sort_elements(A, out.elements);
    return out;
}

std::optional<Circuit> is_circuit(const GradingMatrix& A, const Binomial& f) {
    const std::size_t n = A.n();
    if (f.lead.size() != n || f.trail.size() != n) throw Error(ErrorKind::BadLength, "binomial length differs");
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < n; ++i)
        if (f.lead[i] != f.trail[i]) supp.push_back(i);
    if (supp.empty()) return std::nullopt;
    auto columns_rank = [&](const std::vector<std::size_t>& cols) {
        std::vector<RationalVector> rows;
        for (std::size_t c : cols) {
            RationalVector r;
            for (std::size_t k = 0; k < A.d(); ++k) r.emplace_back(A.entries()(k, c));
            rows.push_back(std::move(r));
        }
        return rank(std::move(rows));
    };
    // Minimally dependent: rank |supp| - 1 and every column is needed, i.e. the
    // dependency space is a line meeting every coordinate of the support.
    if (columns_rank(supp) != supp.size() - 1) return std::nullopt;
    for (std::size_t drop = 0; drop < supp.size(); ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < supp.size(); ++k)
            if (k != drop) sub.push_back(supp[k]);
        if (columns_rank(sub) != sub.size()) return std::nullopt;
    }
    Circuit c;
    c.t.assign(n, 0);
    int64_t g = 0;
    for (std::size_t i : supp) {
        c.t[i] = static_cast<int64_t>(f.lead[i]) - f.trail[i];
        g = std::gcd(g, c.t[i]);
    }
    for (auto& x : c.t) x /= g;
    for (std::size_t i : supp) (c.t[i] > 0 ? c.plus : c.minus).push_back(i);
    return c;
}

}  // namespace toricflip
