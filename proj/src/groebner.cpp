#include "toricflip/groebner.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "toricflip/errors.hpp"
#include "toricflip/kernels.hpp"

namespace toricflip {

bool Binomial::is_homogeneous(const GradingMatrix& A) const {
    if (is_monomial()) return true;
    return A.degree(lead) == A.degree(trail);
}

MonomialIdeal MarkedGB::initial_ideal() const {
    std::vector<Exponent> gens = monomials.generators();
    for (const auto& b : binomials) gens.push_back(b.lead);
    return MonomialIdeal::minimalize(monomials.nvars(), std::move(gens));
}

namespace {

// x^lead - c x^trail with leads ordered by the active term order.
struct Poly {
    Exponent lead;
    Exponent trail;
    Rational c;
    bool mono() const { return c == 0; }
};

// -c1 x^p + c2 x^q rescaled to a monic element.
Poly combine(const Exponent& p, const Rational& c1, const Exponent& q, const Rational& c2, const TermOrder& order,
             bool& zero) {
    zero = false;
    auto cmp = order.compare(p, q);
    if (cmp == 0) {
        if (c1 == c2) {
            zero = true;
            return {};
        }
        return Poly{p, {}, 0};
    }
    if (c1 == 0) return Poly{q, {}, 0};
    if (c2 == 0) return Poly{p, {}, 0};
    if (cmp > 0) return Poly{p, q, Rational(c2 / c1)};
    return Poly{q, p, Rational(c1 / c2)};
}

struct Pair {
    std::size_t i, j;
    Exponent lcm;
    int64_t degree;
};

class Engine {
  public:
    Engine(const TermOrder& order, const GradingMatrix& A, BuchbergerStats* stats)
        : order_(order), A_(A), n_(A.n()), stats_(stats) {}

    void run(const std::vector<Binomial>& gens) {
        std::vector<Poly> input;
        for (const auto& g : gens) {
            if (g.lead.size() != n_ || (!g.is_monomial() && g.trail.size() != n_))
                throw Error(ErrorKind::BadLength, "generator length differs from variable count");
            if (!g.is_homogeneous(A_)) throw Error(ErrorKind::NonHomogeneousInput, "generator is not A-homogeneous");
            bool zero = false;
            Poly p = g.is_monomial() ? Poly{g.lead, {}, 0}
                                     : combine(g.lead, Rational(-1), g.trail, Rational(-g.coeff), order_, zero);
            if (!zero) input.push_back(std::move(p));
        }
        // Cheapest generators first keeps early reductions small.
        std::stable_sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
            auto da = weight(a.lead), db = weight(b.lead);
            if (da != db) return da < db;
            return order_.compare(a.lead, b.lead) < 0;
        });
        for (auto& p : input) {
            if (!reduce(p)) continue;
            insert(std::move(p));
        }
        for (std::size_t id = pop(); id != kernels::npos; id = pop()) {
            const Pair& pr = pairs_[id];
            if (stats_) ++stats_->pairs_considered;
            bool zero = false;
            Poly s = spoly(pr, zero);
            if (zero) continue;
            if (stats_) ++stats_->pairs_reduced;
            if (!reduce(s)) {
                if (stats_) ++stats_->zero_reductions;
                continue;
            }
            insert(std::move(s));
        }
    }

    MarkedGB result() {
        std::vector<std::size_t> basis;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) basis.push_back(k);
        rebuild_index();

        MarkedGB out;
        out.order = order_;
        std::vector<Exponent> monos;
        for (std::size_t k : basis) {
            Poly p = polys_[k];
            if (!p.mono()) tail_reduce(p);
            if (p.mono())
                monos.push_back(p.lead);
            else
                out.binomials.push_back(Binomial{p.lead, p.trail, p.c});
        }
        out.monomials = MonomialIdeal::minimalize(n_, std::move(monos));
        // A binomial whose trail collapsed may leave a lead that the monomial part now covers.
        std::erase_if(out.binomials, [&](const Binomial& b) { return out.monomials.contains(b.lead); });
        std::sort(out.binomials.begin(), out.binomials.end(),
                  [](const Binomial& a, const Binomial& b) { return a.lead < b.lead; });
        return out;
    }

  private:
    int64_t weight(const Exponent& e) const { return kernels::dot(A_.positive_weight(), e); }

    void rebuild_index() {
        lead_buf_.clear();
        index_.clear();
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) {
                lead_buf_.insert(lead_buf_.end(), polys_[k].lead.begin(), polys_[k].lead.end());
                index_.push_back(k);
            }
        dirty_ = false;
    }

    std::size_t find_reducer(const Exponent& m) {
        if (dirty_) rebuild_index();
        std::size_t r = kernels::active().find_divisor(lead_buf_.data(), index_.size(), n_, m.data(), n_);
        return r == kernels::npos ? kernels::npos : index_[r];
    }

    // Top reduction; false when p reduces to zero.
    bool reduce(Poly& p) {
        Exponent q(n_);
        for (;;) {
            std::size_t r = find_reducer(p.lead);
            if (r == kernels::npos) return true;
            const Poly& g = polys_[r];
            if (g.mono()) {
                if (p.mono()) return false;
                p = Poly{p.trail, {}, 0};
                continue;
            }
            for (std::size_t k = 0; k < n_; ++k) q[k] = p.lead[k] - g.lead[k] + g.trail[k];
            if (p.mono()) {
                p.lead = q;
                continue;
            }
            // x^lead - c x^trail  ->  g.c x^q - c x^trail
            bool zero = false;
            p = combine(q, Rational(-g.c), p.trail, Rational(-p.c), order_, zero);
            if (zero) return false;
        }
    }

    void tail_reduce(Poly& p) {
        Exponent q(n_);
        while (!p.mono()) {
            std::size_t r = find_reducer(p.trail);
            if (r == kernels::npos) return;
            const Poly& g = polys_[r];
            if (g.mono()) {
                p = Poly{p.lead, {}, 0};
                return;
            }
            for (std::size_t k = 0; k < n_; ++k) q[k] = p.trail[k] - g.lead[k] + g.trail[k];
            p.trail = q;
            p.c *= g.c;
        }
    }

    Poly spoly(const Pair& pr, bool& zero) {
        const Poly& f = polys_[pr.i];
        const Poly& g = polys_[pr.j];
        zero = false;
        if (f.mono() && g.mono()) {
            zero = true;
            return {};
        }
        Exponent p(n_), q(n_);
        if (f.mono() || g.mono()) {
            const Poly& b = f.mono() ? g : f;
            for (std::size_t k = 0; k < n_; ++k) p[k] = pr.lcm[k] - b.lead[k] + b.trail[k];
            return Poly{p, {}, 0};
        }
        for (std::size_t k = 0; k < n_; ++k) {
            p[k] = pr.lcm[k] - f.lead[k] + f.trail[k];
            q[k] = pr.lcm[k] - g.lead[k] + g.trail[k];
        }
        // m_f f - m_g g = -c_f x^p + c_g x^q
        return combine(p, f.c, q, g.c, order_, zero);
    }

    // Gebauer-Moeller update with the new element h.
    void insert(Poly h) {
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        active_.push_back(1);
        const Poly& hp = polys_[hi];

        // Drop queued pairs whose lcm is a proper multiple of lead(h) in both directions.
        Exponent l1(n_), l2(n_);
        for (std::size_t id : live_) {
            Pair& pr = pairs_[id];
            if (!kernels::divides(hp.lead, pr.lcm)) continue;
            kernels::lcm(polys_[pr.i].lead, hp.lead, l1);
            kernels::lcm(polys_[pr.j].lead, hp.lead, l2);
            if (l1 != pr.lcm && l2 != pr.lcm) alive_[id] = 0;
        }
        std::erase_if(live_, [&](std::size_t id) { return !alive_[id]; });

        // Candidate pairs (g, h) for active g.
        struct Cand {
            std::size_t g;
            Exponent lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (std::size_t g = 0; g < hi; ++g) {
            if (!active_[g]) continue;
            Cand c{g, lcm(polys_[g].lead, hp.lead), kernels::coprime(polys_[g].lead, hp.lead)};
            cands.push_back(std::move(c));
        }
        // Chain criterion among the new pairs: drop (g, h) if some other (g', h) has
        // an lcm strictly dividing it; among equal lcms keep one, preferring a coprime one.
        for (std::size_t a = 0; a < cands.size(); ++a) {
            for (std::size_t b = 0; b < cands.size() && cands[a].keep; ++b) {
                if (a == b || !cands[b].keep) continue;
                if (strictly_below(cands[b].lcm, cands[a].lcm)) cands[a].keep = false;
            }
        }
        std::vector<Cand*> kept;
        for (auto& c : cands)
            if (c.keep) kept.push_back(&c);
        std::stable_sort(kept.begin(), kept.end(), [](const Cand* a, const Cand* b) {
            if (a->lcm != b->lcm) return a->lcm < b->lcm;
            return a->coprime > b->coprime;
        });
        for (std::size_t k = 0; k < kept.size();) {
            std::size_t e = k;
            bool any_coprime = false;
            while (e < kept.size() && kept[e]->lcm == kept[k]->lcm) any_coprime |= kept[e++]->coprime;
            // Product criterion: a coprime representative means the whole class reduces to zero.
            if (!any_coprime) enqueue(kept[k]->g, hi, std::move(kept[k]->lcm));
            k = e;
        }

        // Retire basis elements whose lead is a multiple of lead(h).
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && kernels::divides(hp.lead, polys_[g].lead)) {
                active_[g] = 0;
            }
        dirty_ = true;
    }

    void enqueue(std::size_t i, std::size_t j, Exponent l) {
        Pair pr{i, j, std::move(l), 0};
        pr.degree = weight(pr.lcm);
        pairs_.push_back(std::move(pr));
        alive_.push_back(1);
        live_.push_back(pairs_.size() - 1);
        queue_.push(pairs_.size() - 1);
    }

    // Next live pair id, or npos.
    std::size_t pop() {
        while (!queue_.empty()) {
            std::size_t id = queue_.top();
            queue_.pop();
            if (!alive_[id]) continue;
            alive_[id] = 0;
            std::erase(live_, id);
            return id;
        }
        return kernels::npos;
    }

    struct Later {
        const std::vector<Pair>* pairs;
        const TermOrder* order;
        bool operator()(std::size_t x, std::size_t y) const {
            const Pair& a = (*pairs)[x];
            const Pair& b = (*pairs)[y];
            if (a.degree != b.degree) return a.degree > b.degree;
            auto c = order->compare(a.lcm, b.lcm);
            if (c != 0) return c > 0;
            return x > y;
        }
    };

    const TermOrder& order_;
    const GradingMatrix& A_;
    const std::size_t n_;
    BuchbergerStats* stats_;

    std::vector<Poly> polys_;
    std::vector<uint8_t> active_;
    std::vector<int32_t> lead_buf_;
    std::vector<std::size_t> index_;
    bool dirty_ = true;

    std::vector<Pair> pairs_;
    std::vector<uint8_t> alive_;
    std::vector<std::size_t> live_;
    std::priority_queue<std::size_t, std::vector<std::size_t>, Later> queue_{Later{&pairs_, &order_}};
};

}  // namespace

MarkedGB buchberger(const std::vector<Binomial>& gens, const TermOrder& order, const GradingMatrix& A,
                    BuchbergerStats* stats) {
    Engine e(order, A, stats);
    e.run(gens);
    return e.result();
}

NormalForm normal_form(const MarkedGB& gb, ExponentView u) {
    NormalForm nf;
    nf.monomial.assign(u.begin(), u.end());
    const std::size_t n = nf.monomial.size();
    for (;;) {
        if (gb.monomials.contains(nf.monomial)) {
            nf.zero = true;
            return nf;
        }
        bool moved = false;
        for (const auto& b : gb.binomials) {
            if (!divides(b.lead, nf.monomial)) continue;
            for (std::size_t k = 0; k < n; ++k) nf.monomial[k] += b.trail[k] - b.lead[k];
            nf.coeff *= b.coeff;
            moved = true;
            break;
        }
        if (!moved) return nf;
    }
}

std::vector<Binomial> toric_ideal(const GradingMatrix& A) {
    const std::size_t n = A.n();
    std::vector<Binomial> gens;
    for (const auto& v : kernel_lattice(A).vectors) {
        Exponent plus(n), minus(n);
        for (std::size_t i = 0; i < n; ++i) {
            plus[i] = static_cast<int32_t>(std::max<int64_t>(v[i], 0));
            minus[i] = static_cast<int32_t>(std::max<int64_t>(-v[i], 0));
        }
        gens.push_back(Binomial::pure(std::move(plus), std::move(minus)));
    }
    // I_A = I_L : (x1 ... xn)^inf. With x_i last in a reverse-lex style order
    // (weight -e_i after the grading), I : x_i^inf is read off the basis by
    // dividing every element by its x_i part.
    for (std::size_t i = 0; i < n && !gens.empty(); ++i) {
        IntVector minus_ei(n, 0);
        minus_ei[i] = -1;
        TermOrder order({A.positive_weight(), minus_ei}, {});
        MarkedGB gb = buchberger(gens, order, A);
        gens.clear();
        for (auto& b : gb.binomials) {
            int32_t common = std::min(b.lead[i], b.trail[i]);
            b.lead[i] -= common;
            b.trail[i] -= common;
            gens.push_back(std::move(b));
        }
    }
    return gens;
}

MonomialIdeal initial_ideal(const GradingMatrix& A, const std::vector<Binomial>& toric_gens,
                            const IntVector& weight) {
    if (weight.size() != A.n()) throw Error(ErrorKind::BadLength, "weight length differs from column count");
    return buchberger(toric_gens, TermOrder(weight), A).initial_ideal();
}

MonomialIdeal initial_ideal(const GradingMatrix& A, const IntVector& weight) {
    return initial_ideal(A, toric_ideal(A), weight);
}

MonomialIdeal wall_initial(const MonomialIdeal& I, ExponentView a, ExponentView b, WallDirection dir) {
    const std::size_t n = I.nvars();
    if (a.size() != n || b.size() != n) throw Error(ErrorKind::BadLength, "binomial length differs from variable count");
    if (!I.is_minimal_generator(a)) throw Error(ErrorKind::PreconditionViolated, "x^a is not a minimal generator");
    if (I.contains(b)) throw Error(ErrorKind::PreconditionViolated, "x^b lies in the ideal");

    Exponent lead(dir == WallDirection::ALeads ? a.begin() : b.begin(), dir == WallDirection::ALeads ? a.end() : b.end());
    Exponent trail(dir == WallDirection::ALeads ? b.begin() : a.begin(), dir == WallDirection::ALeads ? b.end() : a.end());

    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < I.size(); ++i) {
        auto g = I.generator(i);
        if (!std::equal(g.begin(), g.end(), a.begin(), a.end())) gens.emplace_back(g.begin(), g.end());
    }
    MonomialIdeal S = MonomialIdeal::minimalize(n, gens);
    if (S.contains(lead)) return with_generator(S, trail);

    std::deque<Exponent> work(gens.begin(), gens.end());
    Exponent r(n);
    while (!work.empty()) {
        // x^trail in the monomial part makes x^lead a member as well; the ideal is monomial.
        if (S.contains(trail)) return with_generator(S, lead);
        Exponent m = std::move(work.front());
        work.pop_front();
        if (!S.contains(m)) continue;
        // S(m, f) = (lcm / lead) * trail, rewritten by f while divisible by lead.
        for (std::size_t k = 0; k < n; ++k) r[k] = std::max(m[k], lead[k]) - lead[k] + trail[k];
        for (;;) {
            if (S.contains(r)) break;
            if (!divides(lead, r)) {
                S = with_generator(S, r);
                work.push_back(r);
                break;
            }
            for (std::size_t k = 0; k < n; ++k) r[k] += trail[k] - lead[k];
        }
    }
    return with_generator(S, lead);
}

}  // namespace toricflip
