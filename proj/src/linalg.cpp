#include "extpow/linalg.hpp"

#include <algorithm>

namespace extpow {

namespace {

// Column-major working copy for elimination.
struct Cols {
    std::size_t rows;
    std::vector<std::vector<Rat>> c;

    explicit Cols(const Matrix& m) : rows(m.rows()), c(m.cols(), std::vector<Rat>(m.rows())) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t i = 0; i < rows; ++i) c[j][i] = m(i, j);
    }

    Cols(std::size_t rows_, std::size_t n, bool ident) : rows(rows_), c(n, std::vector<Rat>(rows_, Rat(0))) {
        if (ident)
            for (std::size_t j = 0; j < n && j < rows_; ++j) c[j][j] = 1;
    }

    void axpy(std::size_t dst, const Rat& q, std::size_t src) { // col_dst -= q * col_src
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i)
            if (c[src][i] != 0) c[dst][i] -= q * c[src][i];
    }

    void scale(std::size_t j, const Rat& s) {
        for (auto& x : c[j]) x *= s;
    }

    Matrix to_matrix(const Ring& ring) const {
        Matrix m(ring, rows, c.size());
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i)
                if (c[j][i] != 0) m.set(i, j, c[j][i]);
        return m;
    }
};

Rat fp_reduce(const Ring& ring, const Rat& x) { return ring.normalize(x); }

void fp_normalize_cols(const Ring& ring, Cols& m) {
    if (ring.kind() != RingKind::PrimeField) return;
    for (auto& col : m.c)
        for (auto& x : col) x = fp_reduce(ring, x);
}

Int floor_div(const Int& a, const Int& b) { // b > 0
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

} // namespace

ColumnEchelon column_echelon(const Matrix& a) {
    const Ring ring = a.ring();
    const bool field = ring.is_field();
    Cols e(a);
    Cols u(a.cols(), a.cols(), true);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.rows() && r < a.cols(); ++i) {
        if (field) {
            std::size_t j = r;
            while (j < a.cols() && fp_reduce(ring, e.c[j][i]) == 0) ++j;
            if (j == a.cols()) continue;
            std::swap(e.c[j], e.c[r]);
            std::swap(u.c[j], u.c[r]);
            Rat piv = fp_reduce(ring, e.c[r][i]);
            for (std::size_t l = r + 1; l < a.cols(); ++l) {
                Rat v = fp_reduce(ring, e.c[l][i]);
                if (v == 0) continue;
                Rat q = ring.div(v, piv);
                e.axpy(l, q, r);
                u.axpy(l, q, r);
            }
        } else { // Z: Euclidean column reduction on row i
            while (true) {
                std::size_t best = a.cols();
                for (std::size_t j = r; j < a.cols(); ++j) {
                    if (e.c[j][i] == 0) continue;
                    if (best == a.cols() || abs(num(e.c[j][i])) < abs(num(e.c[best][i]))) best = j;
                }
                if (best == a.cols()) break;
                std::swap(e.c[best], e.c[r]);
                std::swap(u.c[best], u.c[r]);
                bool clean = true;
                for (std::size_t l = r + 1; l < a.cols(); ++l) {
                    if (e.c[l][i] == 0) continue;
                    Rat q(num(e.c[l][i]) / num(e.c[r][i]));
                    e.axpy(l, q, r);
                    u.axpy(l, q, r);
                    if (e.c[l][i] != 0) clean = false;
                }
                if (clean) break;
            }
            if (e.c[r][i] == 0) continue;
        }
        pivots.push_back(i);
        ++r;
    }
    fp_normalize_cols(ring, e);
    fp_normalize_cols(ring, u);
    return ColumnEchelon{e.to_matrix(ring), u.to_matrix(ring), std::move(pivots)};
}

namespace {

// Canonicalize an echelon set of columns in place (cols 0..r-1, pivot rows
// given): Hermite reduction over Z, reduced echelon over a field.
Matrix canonicalize_echelon(const Ring& ring, const Matrix& e, const std::vector<std::size_t>& pivot_rows) {
    std::size_t r = pivot_rows.size();
    Cols m(e.col_slice(0, r));
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t p = pivot_rows[j];
        if (ring.is_field()) {
            m.scale(j, ring.inv(m.c[j][p]));
            fp_normalize_cols(ring, m);
            for (std::size_t l = 0; l < r; ++l) {
                if (l == j) continue;
                Rat q = ring.normalize(m.c[l][p]);
                m.axpy(l, q, j);
            }
            fp_normalize_cols(ring, m);
        } else {
            if (m.c[j][p] < 0) m.scale(j, Rat(-1));
            Int piv = num(m.c[j][p]);
            for (std::size_t l = 0; l < j; ++l) {
                Rat q(floor_div(num(m.c[l][p]), piv));
                m.axpy(l, q, j);
            }
        }
    }
    return m.to_matrix(ring);
}

} // namespace

Matrix image_basis(const Matrix& a) {
    ColumnEchelon ce = column_echelon(a);
    return canonicalize_echelon(a.ring(), ce.echelon, ce.pivot_rows);
}

Matrix kernel_basis(const Matrix& a) {
    ColumnEchelon ce = column_echelon(a);
    Matrix raw = ce.transform.col_slice(ce.rank(), a.cols());
    ColumnEchelon kc = column_echelon(raw);
    return canonicalize_echelon(a.ring(), kc.echelon, kc.pivot_rows);
}

std::size_t rank(const Matrix& a) { return column_echelon(a).rank(); }

std::optional<Matrix> solve_exact(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: row counts differ");
    const Ring ring = a.ring();
    ColumnEchelon ce = column_echelon(a);
    std::size_t r = ce.rank();
    Matrix y(ring, r, b.cols());
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t p = ce.pivot_rows[j];
        const Rat piv = ce.echelon(p, j);
        for (std::size_t cidx = 0; cidx < b.cols(); ++cidx) {
            Rat acc = b(p, cidx);
            for (std::size_t l = 0; l < j; ++l) acc -= ce.echelon(p, l) * y(l, cidx);
            if (!ring.is_field()) {
                Rat q(acc);
                if (num(q) % num(piv) != 0) return std::nullopt;
                y.set(j, cidx, Rat(num(q) / num(piv)));
            } else {
                y.set(j, cidx, ring.div(acc, piv));
            }
        }
    }
    Matrix x = ce.transform.col_slice(0, r) * y;
    if (a * x != b) return std::nullopt;
    return x;
}

Matrix solve_or_throw(const Matrix& a, const Matrix& b) {
    auto x = solve_exact(a, b);
    if (!x) throw std::domain_error("linear system has no exact solution over " + a.ring().name());
    return *x;
}

Rat det(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = a.rows();
    if (n == 0) return Rat(1);
    const Ring ring = a.ring();
    // plain fraction elimination is exact; reduce mod p as we go over F_p
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j);
    Rat d(1);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t piv = t;
        while (piv < n && m[piv][t] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != t) {
            std::swap(m[piv], m[t]);
            d = -d;
        }
        d *= m[t][t];
        if (ring.kind() == RingKind::PrimeField) d = ring.normalize(d);
        for (std::size_t i = t + 1; i < n; ++i) {
            if (m[i][t] == 0) continue;
            Rat f = m[i][t] / m[t][t];
            for (std::size_t j = t; j < n; ++j) {
                m[i][j] -= f * m[t][j];
                if (ring.kind() == RingKind::PrimeField) m[i][j] = ring.normalize(m[i][j]);
            }
        }
    }
    return ring.kind() == RingKind::Integers ? d : ring.normalize(d);
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    return solve_or_throw(a, Matrix::identity(a.ring(), a.rows()));
}

SmithForm smith_normal_form(const Matrix& a) {
    const Ring ring = a.ring();
    Matrix l = Matrix::identity(ring, a.rows());
    Matrix r = Matrix::identity(ring, a.cols());
    Matrix m = a;

    auto swap_rows = [&](Matrix& x, std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < x.cols(); ++c) {
            Rat t = x(i, c);
            x.set(i, c, x(j, c));
            x.set(j, c, t);
        }
    };
    auto swap_cols = [&](Matrix& x, std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t rr = 0; rr < x.rows(); ++rr) {
            Rat t = x(rr, i);
            x.set(rr, i, x(rr, j));
            x.set(rr, j, t);
        }
    };
    auto row_axpy = [&](Matrix& x, std::size_t dst, const Rat& q, std::size_t src) {
        if (q == 0) return;
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (x(src, c) != 0) x.set(dst, c, x(dst, c) - q * x(src, c));
    };
    auto col_axpy = [&](Matrix& x, std::size_t dst, const Rat& q, std::size_t src) {
        if (q == 0) return;
        for (std::size_t rr = 0; rr < x.rows(); ++rr)
            if (x(rr, src) != 0) x.set(rr, dst, x(rr, dst) - q * x(rr, src));
    };
    auto scale_row = [&](Matrix& x, std::size_t i, const Rat& s) {
        for (std::size_t c = 0; c < x.cols(); ++c) x.set(i, c, x(i, c) * s);
    };

    std::size_t nmin = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    while (t < nmin) {
        // locate pivot: minimal absolute value over Z, any nonzero over a field
        std::size_t pi = a.rows(), pj = a.cols();
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (m(i, j) == 0) continue;
                if (pi == a.rows() ||
                    (!ring.is_field() && abs(num(m(i, j))) < abs(num(m(pi, pj))))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == a.rows()) break;
        swap_rows(m, pi, t);
        swap_rows(l, pi, t);
        swap_cols(m, pj, t);
        swap_cols(r, pj, t);

        if (ring.is_field()) {
            Rat inv = ring.inv(m(t, t));
            scale_row(m, t, inv);
            scale_row(l, t, inv);
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                Rat q = m(i, t);
                row_axpy(m, i, q, t);
                row_axpy(l, i, q, t);
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                Rat q = m(t, j);
                col_axpy(m, j, q, t);
                col_axpy(r, j, q, t);
            }
            ++t;
            continue;
        }

        // Z: clear row and column with division steps, retrying while
        // remainders appear (each retry strictly shrinks the pivot)
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (m(i, t) == 0) continue;
            Rat q(num(m(i, t)) / num(m(t, t)));
            row_axpy(m, i, q, t);
            row_axpy(l, i, q, t);
            if (m(i, t) != 0) clean = false;
        }
        if (!clean) continue;
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (m(t, j) == 0) continue;
            Rat q(num(m(t, j)) / num(m(t, t)));
            col_axpy(m, j, q, t);
            col_axpy(r, j, q, t);
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // enforce divisibility of the remaining block by the pivot
        bool fixed = false;
        for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
            for (std::size_t j = t + 1; j < a.cols() && !fixed; ++j)
                if (num(m(i, j)) % num(m(t, t)) != 0) {
                    row_axpy(m, t, Rat(-1), i);
                    row_axpy(l, t, Rat(-1), i);
                    fixed = true;
                }
        if (fixed) continue;
        if (m(t, t) < 0) {
            scale_row(m, t, Rat(-1));
            scale_row(l, t, Rat(-1));
        }
        ++t;
    }

    std::vector<Rat> diag;
    for (std::size_t i = 0; i < t; ++i) diag.push_back(m(i, i));
    return SmithForm{std::move(l), std::move(r), std::move(diag)};
}

AbelianPresentation cokernel_presentation(const Matrix& relations, std::size_t ambient_rank) {
    if (relations.rows() != ambient_rank)
        throw std::invalid_argument("cokernel_presentation: ambient rank mismatch");
    SmithForm s = smith_normal_form(relations);
    AbelianPresentation p;
    p.free_rank = ambient_rank - s.diag.size();
    if (!relations.ring().is_field())
        for (const auto& d : s.diag) {
            Int v = abs(num(d));
            if (v != 1) p.torsion.push_back(v);
        }
    return p;
}

bool is_admissible_mono(const Matrix& a) {
    SmithForm s = smith_normal_form(a);
    if (s.diag.size() != a.cols()) return false;
    for (const auto& d : s.diag)
        if (!a.ring().is_unit(d)) return false;
    return true;
}

CokernelSplitting cokernel_splitting(const Matrix& a) {
    if (!is_admissible_mono(a)) throw std::invalid_argument("cokernel_splitting: map is not an admissible mono");
    SmithForm s = smith_normal_form(a);
    std::size_t n = a.rows(), rk = a.cols();
    // L a R = [D; 0] with D unit diagonal; the last n-rk rows of L project
    // onto the cokernel and L^{-1} restricted to those columns splits it.
    Matrix proj(a.ring(), n - rk, n);
    for (std::size_t i = 0; i < n - rk; ++i)
        for (std::size_t j = 0; j < n; ++j) proj.set(i, j, s.left(rk + i, j));
    Matrix linv = inverse(s.left);
    Matrix sec(a.ring(), n, n - rk);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n - rk; ++j) sec.set(i, j, linv(i, rk + j));
    return CokernelSplitting{std::move(proj), std::move(sec)};
}

} // namespace extpow
