#include "extpow/chain_complex.hpp"

namespace extpow {

ChainComplex::ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> differentials)
    : ring_(ring), ranks_(std::move(ranks)), d_(std::move(differentials)) {
    if (ranks_.empty()) ranks_.push_back(0);
    if (d_.size() != ranks_.size() - 1)
        throw std::invalid_argument("ChainComplex: expected one differential per positive degree");
    for (std::size_t i = 1; i < ranks_.size(); ++i) {
        const Matrix& di = d_[i - 1];
        if (di.ring() != ring_) throw std::invalid_argument("ChainComplex: differential ring mismatch");
        if (di.rows() != ranks_[i - 1] || di.cols() != ranks_[i])
            throw std::invalid_argument("ChainComplex: differential shape mismatch in degree " + std::to_string(i));
    }
    for (std::size_t i = 1; i + 1 < ranks_.size(); ++i)
        if (!(d_[i - 1] * d_[i]).is_zero())
            throw std::invalid_argument("ChainComplex: d o d != 0 between degrees " + std::to_string(i + 1) +
                                        " and " + std::to_string(i - 1));
}

ChainComplex ChainComplex::concentrated(Ring ring, std::size_t rank, std::size_t deg) {
    std::vector<std::size_t> ranks(deg + 1, 0);
    ranks[deg] = rank;
    std::vector<Matrix> ds;
    for (std::size_t i = 1; i <= deg; ++i) ds.push_back(Matrix(ring, ranks[i - 1], ranks[i]));
    return ChainComplex(ring, std::move(ranks), std::move(ds));
}

ChainComplex ChainComplex::two_term(const Matrix& d) {
    return ChainComplex(d.ring(), {d.rows(), d.cols()}, {d});
}

std::size_t ChainComplex::total_rank() const {
    std::size_t s = 0;
    for (auto r : ranks_) s += r;
    return s;
}

Matrix ChainComplex::d(std::size_t n) const {
    if (n >= 1 && n < ranks_.size()) return d_[n - 1];
    return Matrix(ring_, rank(n - 1), rank(n));
}

namespace {
std::vector<std::size_t> trimmed(const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> r = ranks;
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}
} // namespace

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (ring_ != o.ring_) return false;
    auto ra = trimmed(ranks_), rb = trimmed(o.ranks_);
    if (ra != rb) return false;
    for (std::size_t i = 1; i < ra.size(); ++i)
        if (d(i) != o.d(i)) return false;
    return true;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(components)) {
    if (source_.ring() != target_.ring()) throw std::invalid_argument("ChainMap: ring mismatch");
    std::size_t m = std::max(source_.top(), target_.top());
    if (f_.size() < m + 1) f_.resize(m + 1, Matrix(source_.ring(), 0, 0));
    for (std::size_t n = 0; n <= m; ++n) {
        if (f_[n].rows() == 0 && f_[n].cols() == 0)
            f_[n] = Matrix(source_.ring(), target_.rank(n), source_.rank(n));
        if (f_[n].rows() != target_.rank(n) || f_[n].cols() != source_.rank(n))
            throw std::invalid_argument("ChainMap: component shape mismatch in degree " + std::to_string(n));
    }
    for (std::size_t n = 1; n <= m; ++n)
        if (target_.d(n) * f_[n] != f_[n - 1] * source_.d(n))
            throw std::invalid_argument("ChainMap: square fails to commute in degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::vector<Matrix> comps;
    for (std::size_t n = 0; n <= c.top(); ++n) comps.push_back(Matrix::identity(c.ring(), c.rank(n)));
    return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(ChainComplex source, ChainComplex target) {
    return ChainMap(std::move(source), std::move(target), {});
}

Matrix ChainMap::component(std::size_t n) const {
    if (n < f_.size()) return f_[n];
    return Matrix(source_.ring(), target_.rank(n), source_.rank(n));
}

ChainMap ChainMap::compose_after(const ChainMap& first) const {
    if (first.target() != source_) throw std::invalid_argument("ChainMap composition: middle complexes disagree");
    std::vector<Matrix> comps;
    std::size_t m = std::max(first.source().top(), target_.top());
    for (std::size_t n = 0; n <= m; ++n) comps.push_back(component(n) * first.component(n));
    return ChainMap(first.source(), target_, std::move(comps));
}

AbelianPresentation homology(const ChainComplex& c, std::size_t n) {
    if (n > c.top()) throw std::out_of_range("homology: degree above support");
    Matrix cycles = (n == 0) ? Matrix::identity(c.ring(), c.rank(0)) : kernel_basis(c.d(n));
    Matrix boundaries = c.d(n + 1);
    Matrix rel = (n == 0) ? boundaries : solve_or_throw(cycles, boundaries);
    return cokernel_presentation(rel, cycles.cols());
}

bool is_acyclic(const ChainComplex& c) {
    for (std::size_t n = 0; n <= c.top(); ++n)
        if (!homology(c, n).trivial()) return false;
    return true;
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f)); }

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& v = f.source();
    const ChainComplex& w = f.target();
    const Ring ring = v.ring();
    std::size_t m = std::max(w.top(), v.top() + 1);
    std::vector<std::size_t> ranks(m + 1);
    for (std::size_t n = 0; n <= m; ++n) ranks[n] = w.rank(n) + (n >= 1 ? v.rank(n - 1) : 0);
    std::vector<Matrix> ds;
    for (std::size_t n = 1; n <= m; ++n) {
        Matrix d(ring, ranks[n - 1], ranks[n]);
        d.paste(0, 0, w.d(n));
        d.paste(0, w.rank(n), f.component(n - 1));
        if (n >= 2) d.paste(w.rank(n - 1), w.rank(n), -v.d(n - 1));
        ds.push_back(std::move(d));
    }
    return ChainComplex(ring, std::move(ranks), std::move(ds));
}

ChainComplex cone_of_identity(const ChainComplex& c) { return cone(ChainMap::identity(c)); }

ChainComplex shift_left(const ChainComplex& c) {
    std::vector<std::size_t> ranks(c.top() + 2, 0);
    for (std::size_t n = 0; n <= c.top(); ++n) ranks[n + 1] = c.rank(n);
    std::vector<Matrix> ds;
    ds.push_back(Matrix(c.ring(), 0, ranks[1]));
    for (std::size_t n = 2; n < ranks.size(); ++n) ds.push_back(-c.d(n - 1));
    return ChainComplex(c.ring(), std::move(ranks), std::move(ds));
}

K0Class euler_characteristic(const ChainComplex& c) {
    Int chi = 0;
    for (std::size_t n = 0; n <= c.top(); ++n) {
        Int r(c.rank(n));
        chi += (n % 2 == 0) ? r : -r;
    }
    return K0Class{c.ring(), chi};
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("direct_sum: ring mismatch");
    std::size_t m = std::max(a.top(), b.top());
    std::vector<std::size_t> ranks(m + 1);
    std::vector<Matrix> ds;
    for (std::size_t n = 0; n <= m; ++n) ranks[n] = a.rank(n) + b.rank(n);
    for (std::size_t n = 1; n <= m; ++n) ds.push_back(Matrix::direct_sum(a.d(n), b.d(n)));
    return ChainComplex(a.ring(), std::move(ranks), std::move(ds));
}

ChainMap direct_sum_inclusion_left(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex s = direct_sum(a, b);
    std::vector<Matrix> comps;
    for (std::size_t n = 0; n <= s.top(); ++n) {
        Matrix f(a.ring(), s.rank(n), a.rank(n));
        for (std::size_t i = 0; i < a.rank(n); ++i) f.set(i, i, 1);
        comps.push_back(std::move(f));
    }
    return ChainMap(a, s, std::move(comps));
}

ChainComplex tensor_total(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("tensor_total: ring mismatch");
    const Ring ring = a.ring();
    std::size_t m = a.top() + b.top();
    std::vector<std::size_t> ranks(m + 1, 0);
    // offset of summand (i, n-i) inside degree n, i ascending
    auto offset = [&](std::size_t n, std::size_t i) {
        std::size_t off = 0;
        for (std::size_t t = 0; t < i; ++t)
            if (n - t <= b.top()) off += a.rank(t) * b.rank(n - t);
        return off;
    };
    for (std::size_t n = 0; n <= m; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            if (i <= a.top() && n - i <= b.top()) ranks[n] += a.rank(i) * b.rank(n - i);
    std::vector<Matrix> ds;
    for (std::size_t n = 1; n <= m; ++n) {
        Matrix d(ring, ranks[n - 1], ranks[n]);
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t j = n - i;
            if (i > a.top() || j > b.top() || a.rank(i) * b.rank(j) == 0) continue;
            if (i >= 1) {
                Matrix blk = Matrix::kronecker(a.d(i), Matrix::identity(ring, b.rank(j)));
                d.paste(offset(n - 1, i - 1), offset(n, i), blk);
            }
            if (j >= 1) {
                Matrix blk = Matrix::kronecker(Matrix::identity(ring, a.rank(i)), b.d(j));
                if (i % 2 == 1) blk = -blk;
                d.paste(offset(n - 1, i), offset(n, i), blk);
            }
        }
        ds.push_back(std::move(d));
    }
    return ChainComplex(ring, std::move(ranks), std::move(ds));
}

bool is_admissible_mono_of_complexes(const ChainMap& f) {
    std::size_t m = std::max(f.source().top(), f.target().top());
    for (std::size_t n = 0; n <= m; ++n)
        if (!is_admissible_mono(f.component(n))) return false;
    return true;
}

ComplexQuotient quotient_complex(const ChainMap& inclusion) {
    if (!is_admissible_mono_of_complexes(inclusion))
        throw std::invalid_argument("quotient_complex: map is not an admissible mono of complexes");
    const ChainComplex& w = inclusion.target();
    const Ring ring = w.ring();
    std::size_t m = w.top();
    std::vector<Matrix> proj(m + 1, Matrix(ring, 0, 0)), sect(m + 1, Matrix(ring, 0, 0));
    std::vector<std::size_t> ranks(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
        CokernelSplitting cs = cokernel_splitting(inclusion.component(n));
        ranks[n] = cs.projection.rows();
        proj[n] = std::move(cs.projection);
        sect[n] = std::move(cs.section);
    }
    std::vector<Matrix> ds;
    for (std::size_t n = 1; n <= m; ++n) ds.push_back(proj[n - 1] * w.d(n) * sect[n]);
    ChainComplex q(ring, ranks, std::move(ds));
    std::vector<Matrix> comps(proj.begin(), proj.end());
    ChainMap p(w, q, std::move(comps));
    return ComplexQuotient{std::move(q), std::move(p)};
}

} // namespace extpow
