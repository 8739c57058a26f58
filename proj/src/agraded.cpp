#include "toricflip/agraded.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "toricflip/errors.hpp"
#include "toricflip/kernels.hpp"

namespace toricflip {

AGradedContext::AGradedContext(GradingMatrix A) : AGradedContext(A, graver_basis(A)) {}

AGradedContext::AGradedContext(GradingMatrix A, GraverBasis graver)
    : A_(std::move(A)), graver_(std::move(graver)), toric_(toric_ideal(A_)) {
    reference_ideal_ = initial_ideal(A_, toric_, A_.positive_weight());
    reference_numerator_ = k_polynomial(reference_ideal_, A_);
}

bool is_agraded(const MonomialIdeal& M, const AGradedContext& ctx) {
    if (M.nvars() != ctx.n()) throw Error(ErrorKind::BadLength, "ideal has the wrong number of variables");
    return k_polynomial(M, ctx.A()) == ctx.reference_numerator();
}

bool is_weakly_agraded(const MonomialIdeal& M, const AGradedContext& ctx) {
    return std::all_of(ctx.graver().elements.begin(), ctx.graver().elements.end(),
                       [&](const Binomial& g) { return M.contains(g.lead) || M.contains(g.trail); });
}

MonomialIdeal graver_flip_ideal(const MonomialIdeal& M, ExponentView a, ExponentView b, const AGradedContext& ctx) {
    std::vector<Exponent> gens;
    gens.emplace_back(b.begin(), b.end());
    auto take = [&](const Exponent& c, const Exponent& d) {
        if (M.contains(c) && !M.contains(d) && !std::equal(c.begin(), c.end(), a.begin(), a.end())) gens.push_back(c);
    };
    for (const auto& g : ctx.graver().elements) {
        take(g.lead, g.trail);
        take(g.trail, g.lead);
    }
    return MonomialIdeal::minimalize(M.nvars(), std::move(gens));
}

FlipResult flip(const MonomialIdeal& M, const Binomial& g, const AGradedContext& ctx) {
    FlipResult out;
    const Exponent* a = nullptr;
    const Exponent* b = nullptr;
    if (M.is_minimal_generator(g.lead) && !M.contains(g.trail)) {
        a = &g.lead;
        b = &g.trail;
    } else if (M.is_minimal_generator(g.trail) && !M.contains(g.lead)) {
        a = &g.trail;
        b = &g.lead;
    } else {
        return out;
    }
    if (wall_initial(M, *a, *b, WallDirection::ALeads) != M) {
        out.status = FlipStatus::NotFlippable;
        return out;
    }
    MonomialIdeal target = wall_initial(M, *a, *b, WallDirection::BLeads);
    if (ctx.cross_check && graver_flip_ideal(M, *a, *b, ctx) != target)
        throw std::logic_error("wall ideal and Graver construction disagree on a flip");
    out.status = FlipStatus::Flipped;
    out.move = FlipMove{M, Binomial::pure(*a, *b), std::move(target)};
    return out;
}

std::vector<FlipMove> neighbors(const MonomialIdeal& M, const AGradedContext& ctx) {
    std::vector<FlipMove> out;
    for (const auto& g : ctx.graver().elements) {
        auto r = flip(M, g, ctx);
        if (r.status == FlipStatus::Flipped) out.push_back(std::move(*r.move));
    }
    return out;
}

namespace {

RationalVector difference_row(const Exponent& u, const Exponent& v) {
    RationalVector row(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) row[i] = static_cast<long>(u[i]) - static_cast<long>(v[i]);
    return row;
}

Rational pairing(const RationalVector& w, const RationalVector& row) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * row[i];
    return s;
}

}  // namespace

CoherenceResult is_coherent(const MonomialIdeal& M, const AGradedContext& ctx) {
    const std::size_t n = ctx.n();
    // All constraints, the ones through minimal generators first.
    std::vector<RationalVector> all;
    std::vector<uint8_t> primary;
    for (const auto& g : ctx.graver().elements) {
        bool in_lead = M.contains(g.lead), in_trail = M.contains(g.trail);
        if (in_lead == in_trail) continue;
        const Exponent& u = in_lead ? g.lead : g.trail;
        const Exponent& v = in_lead ? g.trail : g.lead;
        all.push_back(difference_row(u, v));
        primary.push_back(M.is_minimal_generator(u) ? 1 : 0);
    }
    // Cutting planes: solve on a subset, add whatever the witness violates.
    // Infeasibility of a subset settles the question; feasibility is only
    // accepted once the witness satisfies the whole system.
    std::vector<RationalVector> active;
    std::vector<uint8_t> used(all.size(), 0);
    for (std::size_t k = 0; k < all.size(); ++k)
        if (primary[k]) {
            active.push_back(all[k]);
            used[k] = 1;
        }
    for (;;) {
        LpResult lp = lp_strict_feasible(active, n);
        if (!lp.feasible) return CoherenceResult{false, {}};
        std::size_t added = 0;
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (used[k] || pairing(lp.witness, all[k]) >= 1) continue;
            active.push_back(all[k]);
            used[k] = 1;
            ++added;
        }
        if (added == 0) return CoherenceResult{true, std::move(lp.witness)};
    }
}

IntVector integral_weight(const RationalVector& w) {
    Integer l = 1;
    for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    for (const auto& x : w) {
        Integer v = x.get_num() * (l / x.get_den());
        if (!v.fits_slong_p()) throw std::overflow_error("weight does not fit in 64 bits");
        out.push_back(v.get_si());
    }
    return out;
}

SpecialIdeals special_ideals(const AGradedContext& ctx, const std::vector<MonomialIdeal>& all_ideals,
                             std::optional<std::size_t> expected_count) {
    if (expected_count && *expected_count != all_ideals.size())
        throw Error(ErrorKind::IncompleteInput, "enumeration has " + std::to_string(all_ideals.size()) +
                                                    " ideals, expected " + std::to_string(*expected_count));
    if (all_ideals.empty()) throw Error(ErrorKind::IncompleteInput, "no ideals given");
    SpecialIdeals out;
    out.S = all_ideals.front();
    for (std::size_t i = 1; i < all_ideals.size(); ++i) out.S = intersect(out.S, all_ideals[i]);
    std::vector<Exponent> gens;
    for (const auto& g : ctx.graver().elements) gens.push_back(add(g.lead, g.trail));
    out.P = MonomialIdeal::minimalize(ctx.n(), std::move(gens));
    if (!is_subset(out.P, out.S)) throw std::logic_error("P_A is not contained in S_A");
    return out;
}

std::vector<Exponent> unexplained_generators(const MonomialIdeal& M, const AGradedContext& ctx) {
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < M.size(); ++i) {
        auto m = M.generator(i);
        bool found = false;
        for (const auto& g : ctx.graver().elements) {
            if ((std::equal(m.begin(), m.end(), g.lead.begin(), g.lead.end()) && !M.contains(g.trail)) ||
                (std::equal(m.begin(), m.end(), g.trail.begin(), g.trail.end()) && !M.contains(g.lead))) {
                found = true;
                break;
            }
        }
        if (!found) out.emplace_back(m.begin(), m.end());
    }
    return out;
}

namespace {

// Monomials of one Graver degree with a coverage count. An A-graded ideal
// leaves exactly one of them standard, so full coverage is a dead end.
struct TrackedFiber {
    std::vector<int32_t> monomials;  // n per entry
    std::vector<uint8_t> covered;
    std::size_t count = 0;
    std::size_t size() const { return covered.size(); }
};

struct Choice {
    std::size_t element;
    bool lead;
};

class BruteForce {
  public:
    BruteForce(const AGradedContext& ctx, const EnumerationOptions& opt, std::atomic<std::uint64_t>& nodes)
        : ctx_(ctx), opt_(opt), n_(ctx.n()), nodes_(nodes) {
        std::set<DegreeVector> degrees;
        for (const auto& g : ctx.graver().elements) degrees.insert(ctx.A().degree(g.lead));
        for (const auto& b : degrees) {
            TrackedFiber f;
            for (const auto& u : fiber(ctx.A(), b)) f.monomials.insert(f.monomials.end(), u.begin(), u.end());
            f.covered.assign(f.monomials.size() / n_, 0);
            fibers_.push_back(std::move(f));
        }
        for (std::size_t k = 0; k < fibers_.size(); ++k) fiber_of_degree_[*std::next(degrees.begin(), k)] = k;
    }

    // Replays a path of choices; false if it is already infeasible.
    bool replay(const std::vector<Choice>& path) {
        for (const auto& c : path) {
            const auto& g = ctx_.graver().elements[c.element];
            if (!add_generator(c.lead ? g.lead : g.trail)) return false;
            if (!c.lead && !add_forbidden(g.lead)) return false;
        }
        return true;
    }

    // Depth-first search from Graver index `start`. With split_depth > 0 the
    // search stops after that many branchings and records the open paths.
    void search(std::size_t start, std::vector<Choice>& path, std::size_t split_depth,
                std::vector<std::vector<Choice>>* split_out) {
        if (opt_.max_nodes && nodes_.fetch_add(1, std::memory_order_relaxed) >= opt_.max_nodes)
            throw Error(ErrorKind::GuardExceeded, "search-node budget exhausted");
        ++local_nodes;
        const auto& E = ctx_.graver().elements;
        std::size_t k = start;
        while (k < E.size() && (contains(E[k].lead) || contains(E[k].trail))) ++k;
        if (k == E.size()) {
            leaf();
            return;
        }
        if (split_out && path.size() == split_depth) {
            split_out->push_back(path);
            return;
        }
        for (bool take_lead : {true, false}) {
            const Exponent& take = take_lead ? E[k].lead : E[k].trail;
            if (forbidden_contains_multiple_of(take)) continue;
            Mark mark = save();
            bool ok = add_generator(take) && (take_lead || add_forbidden(E[k].lead));
            if (ok) {
                path.push_back({k, take_lead});
                search(k + 1, path, split_depth, split_out);
                path.pop_back();
            }
            restore(mark);
        }
    }

    std::vector<MonomialIdeal> found;
    std::uint64_t local_nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t rejected = 0;

  private:
    struct Mark {
        std::size_t gens, forbidden, undo;
    };

    Mark save() const { return {gens_.size(), forbidden_.size(), undo_.size()}; }

    void restore(const Mark& m) {
        gens_.resize(m.gens);
        forbidden_.resize(m.forbidden);
        while (undo_.size() > m.undo) {
            auto [f, idx] = undo_.back();
            undo_.pop_back();
            fibers_[f].covered[idx] = 0;
            --fibers_[f].count;
        }
    }

    bool contains(const Exponent& u) const {
        return kernels::active().find_divisor(gens_.data(), gens_.size() / n_, n_, u.data(), n_) != kernels::npos;
    }

    bool forbidden_contains_multiple_of(const Exponent& g) const {
        return kernels::active().find_multiple(forbidden_.data(), forbidden_.size() / n_, n_, g.data(), n_) !=
               kernels::npos;
    }

    bool add_generator(const Exponent& g) {
        if (forbidden_contains_multiple_of(g)) return false;
        gens_.insert(gens_.end(), g.begin(), g.end());
        const auto& k = kernels::active();
        for (std::size_t f = 0; f < fibers_.size(); ++f) {
            auto& F = fibers_[f];
            for (std::size_t i = 0; i < F.size(); ++i) {
                if (F.covered[i] || !k.divides(g.data(), F.monomials.data() + i * n_, n_)) continue;
                F.covered[i] = 1;
                ++F.count;
                undo_.emplace_back(f, i);
            }
            if (F.count == F.size()) return false;
        }
        return true;
    }

    // x^u must stay standard: it cannot share its fiber with another standard monomial.
    bool add_forbidden(const Exponent& u) {
        if (contains(u)) return false;
        auto deg = ctx_.A().degree(u);
        for (std::size_t i = 0; i < forbidden_.size() / n_; ++i) {
            ExponentView v(forbidden_.data() + i * n_, n_);
            if (ctx_.A().degree(v) == deg && !std::equal(v.begin(), v.end(), u.begin(), u.end())) return false;
        }
        forbidden_.insert(forbidden_.end(), u.begin(), u.end());
        return true;
    }

    void leaf() {
        ++leaves;
        std::vector<Exponent> gens;
        for (std::size_t i = 0; i < gens_.size() / n_; ++i)
            gens.emplace_back(gens_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                              gens_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
        MonomialIdeal M = MonomialIdeal::minimalize(n_, std::move(gens));
        if (is_agraded(M, ctx_))
            found.push_back(std::move(M));
        else
            ++rejected;
    }

    const AGradedContext& ctx_;
    const EnumerationOptions& opt_;
    const std::size_t n_;
    std::atomic<std::uint64_t>& nodes_;
    std::vector<int32_t> gens_;
    std::vector<int32_t> forbidden_;
    std::vector<TrackedFiber> fibers_;
    std::map<DegreeVector, std::size_t> fiber_of_degree_;
    std::vector<std::pair<std::size_t, std::size_t>> undo_;
};

}  // namespace

std::vector<MonomialIdeal> brute_force_enumerate(const AGradedContext& ctx, const EnumerationOptions& options,
                                                 EnumerationStats* stats) {
    if (ctx.graver().size() > options.max_graver)
        throw Error(ErrorKind::GuardExceeded, "Graver basis has " + std::to_string(ctx.graver().size()) +
                                                  " elements, guard is " + std::to_string(options.max_graver));
    std::atomic<std::uint64_t> nodes{0};
    std::vector<MonomialIdeal> result;
    std::uint64_t leaves = 0, rejected = 0;

    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        BruteForce bf(ctx, options, nodes);
        std::vector<Choice> path;
        bf.search(0, path, 0, nullptr);
        result = std::move(bf.found);
        leaves = bf.leaves;
        rejected = bf.rejected;
    } else {
        // Open subtrees below a fixed number of branchings become tasks.
        BruteForce root(ctx, options, nodes);
        std::vector<std::vector<Choice>> tasks;
        std::vector<Choice> path;
        root.search(0, path, 8, &tasks);
        result = std::move(root.found);
        leaves = root.leaves;
        rejected = root.rejected;
        std::mutex mu;
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        auto work = [&] {
            try {
                for (std::size_t t = next++; t < tasks.size(); t = next++) {
                    BruteForce bf(ctx, options, nodes);
                    if (!bf.replay(tasks[t])) continue;
                    std::vector<Choice> p = tasks[t];
                    bf.search(p.back().element + 1, p, 0, nullptr);
                    std::lock_guard lock(mu);
                    for (auto& m : bf.found) result.push_back(std::move(m));
                    leaves += bf.leaves;
                    rejected += bf.rejected;
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    if (stats) {
        stats->nodes = nodes.load();
        stats->leaves = leaves;
        stats->rejected_leaves = rejected;
    }
    return result;
}

namespace {

Exponent mono5(int a, int b, int c, int d, int e) { return Exponent{a, b, c, d, e}; }

}  // namespace

MonomialIdeal AjFamily::initial() const {
    std::vector<Exponent> gens;
    for (const auto* fam : {&P, &Q, &R, &S})
        for (const auto& f : *fam) gens.push_back(f.lead);
    return MonomialIdeal::minimalize(5, std::move(gens));
}

AjFamily aj_family(int j) {
    if (j < 1) throw Error(ErrorKind::PreconditionViolated, "j must be at least 1");
    AjFamily F;
    F.j = j;
    F.A = validate_grading(IntMatrix::from_rows({{1, 1, 1, 1, 1}, {0, 1, 3 + 3 * j, 4 + 3 * j, 6 + 3 * j}}));
    F.weight = {1, 1, 2, 0, 2};
    F.P = {Binomial::pure(mono5(0, 0, 2, 0, 1), mono5(0, 0, 0, 3, 0)),
           Binomial::pure(mono5(0, 1, 1, 0, 0), mono5(1, 0, 0, 1, 0)),
           Binomial::pure(mono5(2, 0, 0, 0, 1), mono5(0, 2, 0, 1, 0)),
           Binomial::pure(mono5(1, 0, 1, 0, 1), mono5(0, 1, 0, 2, 0)),
           Binomial::pure(mono5(1, 0, 0, 0, j + 2), mono5(0, 0, j, 3, 0))};
    F.Q = {Binomial::pure(mono5(0, 1, 0, 0, j + 1), mono5(0, 0, j + 1, 1, 0)),
           Binomial::pure(mono5(2, 0, j + 1, 0, 0), mono5(0, 3, 0, 0, j)),
           Binomial::pure(mono5(0, 4, 0, 0, j), mono5(3, 0, j, 1, 0)),
           Binomial::pure(mono5(0, 0, j + 2, 0, 0), mono5(1, 0, 0, 0, j + 1))};
    for (int t = 0; t < j; ++t) {
        F.R.push_back(Binomial::pure(mono5(5 + 3 * t, 0, j - t, 0, 0), mono5(0, 6 + 3 * t, 0, 0, j - 1 - t)));
        F.S.push_back(Binomial::pure(mono5(0, 7 + 3 * t, 0, 0, j - 1 - t), mono5(6 + 3 * t, 0, j - 1 - t, 1, 0)));
    }
    return F;
}

std::vector<Binomial> build_ij_family(int j, const std::vector<Rational>& mu) {
    if (mu.size() != static_cast<std::size_t>(std::max(j, 0)))
        throw Error(ErrorKind::BadLength, "expected " + std::to_string(j) + " scalars");
    AjFamily F = aj_family(j);
    std::vector<Binomial> gens;
    for (const auto* fam : {&F.P, &F.Q, &F.S})
        for (const auto& f : *fam) gens.push_back(Binomial::monomial(f.lead));
    for (int t = 0; t < j; ++t) {
        const auto& r = F.R[static_cast<std::size_t>(t)];
        if (mu[static_cast<std::size_t>(t)] == 0)
            gens.push_back(Binomial::monomial(r.lead));
        else
            gens.push_back(Binomial{r.lead, r.trail, mu[static_cast<std::size_t>(t)]});
    }
    return gens;
}

}  // namespace toricflip
