#include "geom/linalg.hpp"

#include <algorithm>
#include <regex>

namespace toric::geom {

std::optional<Rat> parse_rat(const std::string& s) {
    static const std::regex pat(R"(^-?[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(s, pat)) return std::nullopt;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (sgn(Rat(q.get_den())) <= 0) return std::nullopt;
    q.canonicalize();
    return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
    check_internal(a.size() == b.size(), "dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    check_internal(a.size() == b.size(), "add: length mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    check_internal(a.size() == b.size(), "sub: length mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const RatVec& a, const Rat& s) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

bool is_zero(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return sgn(q) == 0; });
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::optional<IntVec> to_int(const RatVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) return std::nullopt;
        r[i] = v[i].get_num();
    }
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns. Rows get reordered.
std::vector<int> echelonize(RatMat& m, int ncols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i)
            if (sgn(m[i][col]) != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Rat inv = 1 / m[row][col];
        for (int c = col; c < static_cast<int>(m[row].size()); ++c) m[row][c] *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row || sgn(m[i][col]) == 0) continue;
            Rat f = m[i][col];
            for (int c = col; c < static_cast<int>(m[i].size()); ++c)
                m[i][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(RatMat m) {
    if (m.empty()) return 0;
    return static_cast<int>(echelonize(m, static_cast<int>(m[0].size())).size());
}

Rat det(RatMat m) {
    const int n = static_cast<int>(m.size());
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (sgn(m[i][col]) != 0) { sel = i; break; }
        if (sel < 0) return Rat(0);
        if (sel != col) { std::swap(m[sel], m[col]); d = -d; }
        d *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (sgn(m[i][col]) == 0) continue;
            Rat f = m[i][col] * inv;
            for (int c = col; c < n; ++c) m[i][c] -= f * m[col][c];
        }
    }
    return d;
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const size_t n = a.size();
    if (n == 0) return RatVec{};
    if (a[0].size() != n || b.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelonize(a, static_cast<int>(n));
    if (pivots.size() != n) return std::nullopt;
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::optional<RatVec> solve_any(RatMat a, RatVec b) {
    if (a.empty()) return is_zero(b) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    const int ncols = static_cast<int>(a[0].size());
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    auto pivots = echelonize(a, ncols);
    // Inconsistent when a zero row has nonzero rhs.
    for (size_t i = pivots.size(); i < a.size(); ++i)
        if (sgn(a[i][ncols]) != 0) return std::nullopt;
    RatVec x(ncols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
    return x;
}

RatMat nullspace(RatMat a, int ncols) {
    if (a.empty()) {
        RatMat basis;
        for (int j = 0; j < ncols; ++j) {
            RatVec e(ncols, Rat(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    auto pivots = echelonize(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (int j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        RatVec v(ncols, Rat(0));
        v[j] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> independent_rows(const RatMat& m) {
    std::vector<int> result;
    RatMat acc;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
        acc.push_back(m[i]);
        if (rank(acc) == static_cast<int>(acc.size()))
            result.push_back(i);
        else
            acc.pop_back();
    }
    return result;
}

IntVec make_primitive(const RatVec& v) {
    check_internal(!is_zero(v), "make_primitive: zero vector");
    Int lcm_den = 1;
    for (const Rat& q : v) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
        lcm_den = l;
    }
    IntVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm_den);
        w[i] = scaled.get_num();
        Int g2;
        mpz_gcd(g2.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
        g = g2;
    }
    for (auto& e : w) e /= g;
    return w;
}

IntMat lattice_basis(IntMat generators) {
    generators.erase(std::remove_if(generators.begin(), generators.end(),
                                    [](const IntVec& v) {
                                        return std::all_of(v.begin(), v.end(),
                                                           [](const Int& x) { return sgn(x) == 0; });
                                    }),
                     generators.end());
    if (generators.empty()) return {};
    const size_t n = generators[0].size();
    IntMat basis;
    size_t row = 0;
    while (row < n && !generators.empty()) {
        // Reduce entries at position `row` by repeated division, keeping the
        // generated lattice fixed (elementary column operations).
        while (true) {
            int sel = -1;
            for (size_t i = 0; i < generators.size(); ++i)
                if (sgn(generators[i][row]) != 0) { sel = static_cast<int>(i); break; }
            if (sel < 0) break;
            // Move a vector with minimal |entry| to front, subtract multiples.
            for (size_t i = sel + 1; i < generators.size(); ++i) {
                if (sgn(generators[i][row]) == 0) continue;
                if (cmp(abs(generators[i][row]), abs(generators[sel][row])) < 0)
                    sel = static_cast<int>(i);
            }
            std::swap(generators[0], generators[sel]);
            bool reduced_all = true;
            for (size_t i = 1; i < generators.size(); ++i) {
                if (sgn(generators[i][row]) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), generators[i][row].get_mpz_t(),
                           generators[0][row].get_mpz_t());
                for (size_t c = 0; c < n; ++c) generators[i][c] -= q * generators[0][c];
                if (sgn(generators[i][row]) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (!generators.empty() && sgn(generators[0][row]) != 0) {
            if (sgn(generators[0][row]) < 0)
                for (auto& e : generators[0]) e = -e;
            basis.push_back(generators[0]);
            generators.erase(generators.begin());
        }
        ++row;
    }
    return basis;
}

RatVec coords_in_basis(const IntMat& basis, const RatVec& vec) {
    RatMat a(vec.size(), RatVec(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < vec.size(); ++i) a[i][j] = Rat(basis[j][i]);
    auto c = solve_any(a, vec);
    check_internal(c.has_value(), "coords_in_basis: vector outside span");
    return *c;
}

} // namespace toric::geom
