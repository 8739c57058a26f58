#include "toricflip/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "toricflip/errors.hpp"

namespace toricflip {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NonHomogeneousInput: return "NonHomogeneousInput";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::GuardExceeded: return "GuardExceeded";
        case ErrorKind::BadLength: return "BadLength";
        case ErrorKind::IncompleteInput: return "IncompleteInput";
        case ErrorKind::IncompleteGraph: return "IncompleteGraph";
        case ErrorKind::FixtureMismatch: return "FixtureMismatch";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::IO: return "IO";
    }
    return "Unknown";
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw Error(ErrorKind::Parse, "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

DegreeVector GradingMatrix::degree(std::span<const int32_t> exponent) const {
    DegreeVector b(d(), 0);
    for (std::size_t r = 0; r < d(); ++r)
        for (std::size_t c = 0; c < n(); ++c) b[r] += entries_(r, c) * exponent[c];
    return b;
}

std::optional<int64_t> GradingMatrix::weight_of_degree(const DegreeVector& b) const {
    Rational s = 0;
    for (std::size_t r = 0; r < d(); ++r) s += certificate_[r] * Rational(static_cast<long>(b[r]));
    s *= Rational(weight_scale_);
    s.canonicalize();
    if (s.get_den() != 1 || s < 0) return std::nullopt;
    return s.get_num().get_si();
}

std::size_t rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

Integer determinant(const std::vector<IntVector>& square) {
    const std::size_t n = square.size();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(square[i][j]);
    // Fraction-free Bareiss elimination.
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::optional<RationalVector> kernel_line(const std::vector<RationalVector>& input, std::size_t n) {
    // Reduced row echelon form, then read off the single free column.
    std::vector<RationalVector> rows = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.size() + 1 != n) return std::nullopt;
    std::size_t free_col = 0;
    while (free_col < n && std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    RationalVector v(n, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free_col];
    return v;
}

namespace {

// Dense tableau simplex with Bland's rule over Q, phase I only.
// Solves: find x >= 0 with T x = rhs, rhs >= 0, given an initial basis.
class FeasibilityTableau {
  public:
    FeasibilityTableau(std::vector<RationalVector> rows, RationalVector rhs, std::vector<std::size_t> basis,
                       std::size_t num_artificial_from)
        : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)), art_from_(num_artificial_from) {}

    // Minimizes the sum of artificial variables; true when it reaches zero.
    bool solve() {
        const std::size_t m = a_.size();
        const std::size_t cols = m ? a_.front().size() : 0;
        RationalVector cost(cols, 0);
        for (std::size_t j = art_from_; j < cols; ++j) cost[j] = 1;
        while (true) {
            // reduced costs: c_j - c_B B^-1 a_j (tableau already in basis form)
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols && enter == cols; ++j) {
                if (is_basic(j)) continue;
                Rational rc = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (cost[basis_[i]] != 0) rc -= cost[basis_[i]] * a_[i][j];
                if (rc < 0) enter = j;
            }
            if (enter == cols) break;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = b_[i] / a_[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) break;  // unbounded direction; cannot happen in phase I
            pivot(leave, enter);
        }
        for (std::size_t i = 0; i < m; ++i)
            if (basis_[i] >= art_from_ && b_[i] != 0) return false;
        return true;
    }

    RationalVector values(std::size_t cols) const {
        RationalVector x(cols, 0);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] < cols) x[basis_[i]] = b_[i];
        return x;
    }

  private:
    bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / a_[r][c];
        for (auto& x : a_[r]) x *= inv;
        b_[r] *= inv;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rational f = a_[i][c];
            for (std::size_t k = 0; k < a_[i].size(); ++k)
                if (a_[r][k] != 0) a_[i][k] -= f * a_[r][k];
            b_[i] -= f * b_[r];
        }
        basis_[r] = c;
    }

    std::vector<RationalVector> a_;
    RationalVector b_;
    std::vector<std::size_t> basis_;
    std::size_t art_from_;
};

}  // namespace

LpResult lp_feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs, std::size_t n) {
    const std::size_t m = rows.size();
    if (m == 0) return {true, RationalVector(n, 0)};
    // Columns: w+ (n), w- (n), surplus (m), artificials (one per row with rhs > 0).
    std::size_t num_art = 0;
    for (const auto& h : rhs)
        if (h > 0) ++num_art;
    const std::size_t art_from = 2 * n + m;
    const std::size_t cols = art_from + num_art;
    std::vector<RationalVector> t(m, RationalVector(cols, 0));
    RationalVector b(m);
    std::vector<std::size_t> basis(m);
    std::size_t art = art_from;
    for (std::size_t i = 0; i < m; ++i) {
        // row . (w+ - w-) - s_i = h_i
        const bool positive = rhs[i] > 0;
        const int sgn = positive ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = sgn * rows[i][j];
            t[i][n + j] = -sgn * rows[i][j];
        }
        t[i][2 * n + i] = -sgn;
        b[i] = sgn * rhs[i];
        if (positive) {
            t[i][art] = 1;
            basis[i] = art++;
        } else {
            basis[i] = 2 * n + i;
        }
    }
    FeasibilityTableau tab(std::move(t), std::move(b), std::move(basis), art_from);
    if (!tab.solve()) return {false, {}};
    RationalVector x = tab.values(2 * n);
    RationalVector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = x[j] - x[n + j];
    return {true, std::move(w)};
}

LpResult lp_strict_feasible(const std::vector<RationalVector>& rows, std::size_t n) {
    return lp_feasible(rows, RationalVector(rows.size(), 1), n);
}

GradingMatrix validate_grading(const IntMatrix& entries) {
    const std::size_t d = entries.rows(), n = entries.cols();
    if (d == 0 || n == 0) throw Error(ErrorKind::RankDeficient, "empty matrix");
    std::vector<RationalVector> rows(d, RationalVector(n));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = static_cast<long>(entries(r, c));
    if (rank(rows) != d) throw Error(ErrorKind::RankDeficient, "matrix rank is below its row count");

    std::vector<RationalVector> cols(n, RationalVector(d));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < d; ++r) cols[c][r] = static_cast<long>(entries(r, c));
    LpResult lp = lp_strict_feasible(cols, d);
    if (!lp.feasible) throw Error(ErrorKind::NotPointed, "kernel meets the nonnegative orthant");

    GradingMatrix g;
    g.entries_ = entries;
    g.certificate_ = lp.witness;
    RationalVector ca(n, 0);
    Integer scale = 1;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < d; ++r) ca[c] += lp.witness[r] * cols[c][r];
        ca[c].canonicalize();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), ca[c].get_den().get_mpz_t());
    }
    // Keep the weight primitive: divide by the gcd of the scaled entries.
    std::vector<Integer> scaled(n);
    Integer g_all = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Rational v = ca[c] * Rational(scale);
        v.canonicalize();
        scaled[c] = v.get_num();
        mpz_gcd(g_all.get_mpz_t(), g_all.get_mpz_t(), scaled[c].get_mpz_t());
    }
    g.weight_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        Integer v = scaled[c] / g_all;
        if (!v.fits_slong_p()) throw Error(ErrorKind::NotPointed, "positive weight out of range");
        g.weight_[c] = v.get_si();
    }
    g.weight_scale_ = scale / g_all;
    return g;
}

namespace {

int64_t l1(const IntVector& v) {
    int64_t s = 0;
    for (auto x : v) s += x < 0 ? -x : x;
    return s;
}

// Pairwise size reduction: replace v_i by v_i +- v_j while that shrinks the l1 norm.
void size_reduce(std::vector<IntVector>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                for (int s : {1, -1}) {
                    IntVector cand = basis[i];
                    for (std::size_t k = 0; k < cand.size(); ++k) cand[k] += s * basis[j][k];
                    if (l1(cand) < l1(basis[i])) {
                        basis[i] = std::move(cand);
                        changed = true;
                    }
                }
            }
    }
}

}  // namespace

KernelBasis kernel_lattice(const GradingMatrix& A) {
    const std::size_t d = A.d(), n = A.n();
    // Rows are [a_i^T | e_i]; unimodular row operations echelonize the first d columns.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(d + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < d; ++r) m[i][r] = static_cast<long>(A.entries()(r, i));
        m[i][d + i] = 1;
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < d && pivot_row < n; ++c) {
        while (true) {
            std::size_t best = n;
            for (std::size_t i = pivot_row; i < n; ++i)
                if (m[i][c] != 0 && (best == n || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == n) break;
            std::swap(m[pivot_row], m[best]);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < n; ++i) {
                if (m[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[pivot_row][c].get_mpz_t());
                for (std::size_t k = 0; k < d + n; ++k) m[i][k] -= q * m[pivot_row][k];
                if (m[i][c] != 0) done = false;
            }
            if (done) {
                ++pivot_row;
                break;
            }
        }
    }
    KernelBasis kb;
    for (std::size_t i = pivot_row; i < n; ++i) {
        IntVector v(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (!m[i][d + k].fits_slong_p()) throw Error(ErrorKind::NotPointed, "kernel entry out of range");
            v[k] = m[i][d + k].get_si();
        }
        kb.vectors.push_back(std::move(v));
    }
    size_reduce(kb.vectors);
    return kb;
}

IntMatrix parse_matrix(std::istream& in) {
    std::vector<int64_t> nums;
    std::string line;
    while (std::getline(in, line)) {
        if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "not an integer: '" + tok + "'");
            }
        }
    }
    if (nums.size() < 2) throw Error(ErrorKind::Parse, "missing 'd n' header");
    if (nums[0] <= 0 || nums[1] <= 0) throw Error(ErrorKind::Parse, "matrix dimensions must be positive");
    const auto d = static_cast<std::size_t>(nums[0]), n = static_cast<std::size_t>(nums[1]);
    if (nums.size() != 2 + d * n)
        throw Error(ErrorKind::Parse, "expected " + std::to_string(d * n) + " entries, got " +
                                          std::to_string(nums.size() - 2));
    IntMatrix m(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = nums[2 + r * n + c];
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IO, "cannot open " + path);
    return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << '\n';
    }
    return os.str();
}

}  // namespace toricflip
