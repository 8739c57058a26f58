#include "toricflip/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "toricflip/errors.hpp"

namespace toricflip {

namespace {

bool is_subset_of(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<Face> maximal_faces(std::vector<Face> faces) {
    for (auto& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < faces.size() && !covered; ++j)
            covered = i != j && faces[j].size() > faces[i].size() && is_subset_of(faces[i], faces[j]);
        if (!covered) out.push_back(faces[i]);
    }
    return out;
}

std::vector<IntVector> columns_of(const GradingMatrix& A, const Face& f) {
    // Square matrix with the chosen columns as rows; the determinant is unchanged.
    std::vector<IntVector> rows;
    for (std::size_t c : f) rows.push_back(A.column(c));
    return rows;
}

bool independent(const GradingMatrix& A, const Face& f) {
    std::vector<RationalVector> rows;
    for (std::size_t c : f) {
        RationalVector r;
        for (auto x : A.column(c)) r.emplace_back(static_cast<long>(x));
        rows.push_back(std::move(r));
    }
    return rank(std::move(rows)) == f.size();
}

// Inverse of the d x d matrix whose columns are A's columns in f.
std::vector<RationalVector> inverse_of_columns(const GradingMatrix& A, const Face& f) {
    const std::size_t d = f.size();
    std::vector<RationalVector> m(d, RationalVector(2 * d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m[r][c] = static_cast<long>(A.entries()(r, f[c]));
        m[r][d + r] = 1;
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t p = col;
        while (p < d && m[p][col] == 0) ++p;
        if (p == d) throw std::logic_error("singular facet");
        std::swap(m[p], m[col]);
        Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f0 = m[r][col];
            for (std::size_t k = 0; k < 2 * d; ++k) m[r][k] -= f0 * m[col][k];
        }
    }
    std::vector<RationalVector> inv(d, RationalVector(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) inv[r][c] = m[r][d + c];
    return inv;
}

// Some point lies in the interior of both simplicial cones.
bool interiors_meet(const GradingMatrix& A, const Face& s, const Face& t) {
    const std::size_t d = s.size();
    auto tinv = inverse_of_columns(A, t);
    // lambda > 0 and A_t^{-1} A_s lambda > 0, homogeneous so ">= 1" is equivalent.
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector r(d, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector r(d, 0);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) r[j] += tinv[i][k] * static_cast<long>(A.entries()(k, s[j]));
        rows.push_back(std::move(r));
    }
    return lp_strict_feasible(rows, d).feasible;
}

int sign_of(const Integer& x) { return sgn(x); }

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> facets) : n_(n) {
    for (const auto& f : facets)
        for (auto i : f)
            if (i >= n) throw Error(ErrorKind::BadLength, "facet index out of range");
    facets_ = maximal_faces(std::move(facets));
}

bool SimplicialComplex::has_face(const Face& f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset_of(f, g); });
}

std::vector<Face> SimplicialComplex::link(const Face& f) const {
    std::vector<Face> out;
    for (const auto& g : facets_) {
        if (!is_subset_of(f, g)) continue;
        Face rest;
        std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
        out.push_back(std::move(rest));
    }
    return maximal_faces(std::move(out));
}

std::string SimplicialComplex::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        os << (i ? ", " : "") << "{";
        for (std::size_t k = 0; k < facets_[i].size(); ++k) os << (k ? "," : "") << facets_[i][k] + 1;
        os << "}";
    }
    os << "}";
    return os.str();
}

SimplicialComplex complex_of_radical(const MonomialIdeal& M) {
    const std::size_t n = M.nvars();
    if (n > 30) throw Error(ErrorKind::PreconditionViolated, "too many variables for subset enumeration");
    MonomialIdeal R = radical(M);
    std::vector<uint32_t> nonfaces;
    for (std::size_t i = 0; i < R.size(); ++i) {
        uint32_t mask = 0;
        auto g = R.generator(i);
        for (std::size_t k = 0; k < n; ++k)
            if (g[k] > 0) mask |= 1u << k;
        nonfaces.push_back(mask);
    }
    auto is_face = [&](uint32_t s) {
        return std::none_of(nonfaces.begin(), nonfaces.end(), [&](uint32_t m) { return (m & s) == m; });
    };
    std::vector<Face> facets;
    const uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    for (uint32_t s = 0;; ++s) {
        if (is_face(s)) {
            bool maximal = true;
            for (std::size_t k = 0; k < n && maximal; ++k)
                if (!(s & (1u << k)) && is_face(s | (1u << k))) maximal = false;
            if (maximal) {
                Face f;
                for (std::size_t k = 0; k < n; ++k)
                    if (s & (1u << k)) f.push_back(k);
                facets.push_back(std::move(f));
            }
        }
        if (s == full) break;
    }
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex placing_triangulation(const GradingMatrix& A) {
    const std::size_t d = A.d(), n = A.n();
    Face basis;
    for (std::size_t c = 0; c < n && basis.size() < d; ++c) {
        Face trial = basis;
        trial.push_back(c);
        if (independent(A, trial)) basis = trial;
    }
    std::vector<Face> simplices{basis};
    for (std::size_t p = 0; p < n; ++p) {
        if (std::find(basis.begin(), basis.end(), p) != basis.end()) continue;
        // Boundary facets: (d-1)-faces lying in a single simplex.
        std::map<Face, std::vector<std::pair<std::size_t, std::size_t>>> owners;  // face -> (simplex, opposite)
        for (std::size_t s = 0; s < simplices.size(); ++s)
            for (std::size_t k = 0; k < d; ++k) {
                Face f = simplices[s];
                std::size_t opp = f[k];
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
                owners[f].emplace_back(s, opp);
            }
        std::vector<Face> added;
        for (const auto& [f, own] : owners) {
            if (own.size() != 1) continue;
            // p sees f when f's hyperplane strictly separates p from the opposite vertex.
            auto with = [&](std::size_t v) {
                Face g = f;
                g.push_back(v);
                return sign_of(determinant(columns_of(A, g)));
            };
            int sp = with(p), sq = with(own[0].second);
            if (sp != 0 && sp != sq) {
                Face g = f;
                g.push_back(p);
                std::sort(g.begin(), g.end());
                added.push_back(std::move(g));
            }
        }
        for (auto& g : added) simplices.push_back(std::move(g));
    }
    return SimplicialComplex(n, std::move(simplices));
}

Rational sliced_volume(const SimplicialComplex& D, const GradingMatrix& A) {
    Rational total = 0;
    const auto& w = A.positive_weight();
    for (const auto& f : D.facets()) {
        Integer det = determinant(columns_of(A, f));
        Integer denom = 1;
        for (auto i : f) denom *= Integer(static_cast<long>(w[i]));
        total += Rational(abs(det), denom);
    }
    total.canonicalize();
    return total;
}

bool is_triangulation(const SimplicialComplex& D, const GradingMatrix& A) {
    const std::size_t d = A.d();
    if (D.n() != A.n() || D.facets().empty()) return false;
    for (const auto& f : D.facets())
        if (f.size() != d || !independent(A, f)) return false;
    for (std::size_t i = 0; i < D.facets().size(); ++i)
        for (std::size_t j = i + 1; j < D.facets().size(); ++j)
            if (interiors_meet(A, D.facets()[i], D.facets()[j])) return false;
    return sliced_volume(D, A) == sliced_volume(placing_triangulation(A), A);
}

CircuitFlipSpec circuit_flip_spec(const Circuit& c) {
    CircuitFlipSpec spec;
    spec.circuit = c;
    Face T;
    for (auto i : c.plus) T.push_back(i);
    for (auto i : c.minus) T.push_back(i);
    std::sort(T.begin(), T.end());
    auto drop = [&](std::size_t i) {
        Face f;
        for (auto k : T)
            if (k != i) f.push_back(k);
        return f;
    };
    for (auto i : c.plus) spec.c_plus.push_back(drop(i));
    for (auto i : c.minus) spec.c_minus.push_back(drop(i));
    std::sort(spec.c_plus.begin(), spec.c_plus.end());
    std::sort(spec.c_minus.begin(), spec.c_minus.end());
    return spec;
}

std::optional<SimplicialComplex> bistellar_flip(const SimplicialComplex& D, const CircuitFlipSpec& spec) {
    if (spec.c_plus.empty() || spec.c_minus.empty()) return std::nullopt;
    std::optional<std::vector<Face>> common;
    for (const auto& s : spec.c_plus) {
        if (!D.has_face(s)) return std::nullopt;
        auto L = D.link(s);
        if (!common)
            common = L;
        else if (*common != L)
            return std::nullopt;
    }
    std::vector<Face> facets;
    for (const auto& f : D.facets()) {
        bool replaced = false;
        for (const auto& s : spec.c_plus)
            if (is_subset_of(s, f)) replaced = true;
        if (!replaced) facets.push_back(f);
    }
    for (const auto& t : spec.c_minus)
        for (const auto& l : *common) {
            Face g = t;
            g.insert(g.end(), l.begin(), l.end());
            std::sort(g.begin(), g.end());
            facets.push_back(std::move(g));
        }
    return SimplicialComplex(D.n(), std::move(facets));
}

const char* to_string(EdgeVerdict v) {
    switch (v) {
        case EdgeVerdict::SameRadical: return "same_radical";
        case EdgeVerdict::Bistellar: return "bistellar";
        case EdgeVerdict::Violation: return "violation";
    }
    return "?";
}

EdgeCheck check_flip_edge(const FlipMove& move, const AGradedContext& ctx) {
    MonomialIdeal rs = radical(move.source), rt = radical(move.target);
    const Exponent& a = move.binomial.lead;
    const Exponent& b = move.binomial.trail;
    if (rs == rt) {
        if (!rs.contains(b)) return {EdgeVerdict::Violation, "radicals agree but x^b is outside the radical"};
        return {EdgeVerdict::SameRadical, ""};
    }
    if (rs.contains(b)) return {EdgeVerdict::Violation, "radicals differ although x^b lies in the radical"};
    auto circuit = is_circuit(ctx.A(), move.binomial);
    if (!circuit) return {EdgeVerdict::Violation, "label is not a circuit"};
    // Orient so that T+ is the support of x^a.
    if (circuit->plus.empty() || a[circuit->plus.front()] == 0) std::swap(circuit->plus, circuit->minus);
    auto flipped = bistellar_flip(complex_of_radical(move.source), circuit_flip_spec(*circuit));
    if (!flipped) return {EdgeVerdict::Violation, "C+ is not a subcomplex with a common link"};
    SimplicialComplex expected = complex_of_radical(move.target);
    if (*flipped != expected)
        return {EdgeVerdict::Violation, "flip gives " + flipped->to_string() + ", target is " + expected.to_string()};
    return {EdgeVerdict::Bistellar, ""};
}

bool BauesImage::connected() const {
    if (complexes.empty()) return true;
    std::vector<std::size_t> parent(complexes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[root(u)] = root(v);
    std::size_t r = root(0);
    for (std::size_t i = 0; i < complexes.size(); ++i)
        if (root(i) != r) return false;
    return true;
}

BauesImage baues_image(const FlipGraph& G, const AGradedContext& ctx) {
    (void)ctx;
    std::vector<SimplicialComplex> per_vertex;
    for (const auto& v : G.vertices) per_vertex.push_back(complex_of_radical(v.ideal));
    BauesImage out;
    out.complexes = per_vertex;
    std::sort(out.complexes.begin(), out.complexes.end());
    out.complexes.erase(std::unique(out.complexes.begin(), out.complexes.end()), out.complexes.end());
    auto id = [&](const SimplicialComplex& c) {
        return static_cast<std::size_t>(std::lower_bound(out.complexes.begin(), out.complexes.end(), c) -
                                        out.complexes.begin());
    };
    for (const auto& c : per_vertex) out.vertex_map.push_back(id(c));
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : G.edges) {
        std::size_t u = out.vertex_map[e.u], v = out.vertex_map[e.v];
        if (u == v) continue;
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

IntMatrix homogenize(const IntMatrix& A) {
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        RationalVector row;
        for (auto x : A.row(r)) row.emplace_back(static_cast<long>(x));
        rows.push_back(std::move(row));
    }
    const std::size_t base = rank(rows);
    rows.emplace_back(A.cols(), Rational(1));
    if (rank(rows) == base) return A;
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < A.rows(); ++r) out.push_back(A.row(r));
    out.emplace_back(A.cols(), 1);
    return IntMatrix::from_rows(out);
}

}  // namespace toricflip
