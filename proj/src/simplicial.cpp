#include "extpow/simplicial.hpp"

#include <map>

namespace extpow {

SimplicialModule SimplicialModule::make(Ring ring, std::vector<std::size_t> levels,
                                        std::vector<std::vector<Matrix>> faces,
                                        std::vector<std::vector<Matrix>> degeneracies, bool verify) {
    if (levels.empty()) throw std::invalid_argument("SimplicialModule: needs at least level 0");
    if (faces.size() != levels.size())
        throw std::invalid_argument("SimplicialModule: face table size mismatch");
    for (std::size_t n = 1; n < levels.size(); ++n) {
        if (faces[n].size() != n + 1)
            throw std::invalid_argument("SimplicialModule: level " + std::to_string(n) + " needs " +
                                        std::to_string(n + 1) + " faces");
        for (const auto& f : faces[n])
            if (f.rows() != levels[n - 1] || f.cols() != levels[n])
                throw std::invalid_argument("SimplicialModule: face shape mismatch at level " + std::to_string(n));
    }
    if (!degeneracies.empty()) {
        if (degeneracies.size() + 1 != levels.size() && degeneracies.size() != levels.size())
            throw std::invalid_argument("SimplicialModule: degeneracy table size mismatch");
        for (std::size_t n = 0; n + 1 < levels.size() && n < degeneracies.size(); ++n) {
            if (degeneracies[n].size() != n + 1)
                throw std::invalid_argument("SimplicialModule: level " + std::to_string(n) + " needs " +
                                            std::to_string(n + 1) + " degeneracies");
            for (const auto& s : degeneracies[n])
                if (s.rows() != levels[n + 1] || s.cols() != levels[n])
                    throw std::invalid_argument("SimplicialModule: degeneracy shape mismatch at level " +
                                                std::to_string(n));
        }
        degeneracies.resize(levels.size() - 1);
    }
    SimplicialModule m(ring, std::move(levels), std::move(faces), std::move(degeneracies));
    if (verify) m.verify_identities();
    return m;
}

void SimplicialModule::verify_identities() const {
    std::size_t l = bound();
    auto fail = [](const std::string& what, std::size_t n) {
        throw ConsistencyError("simplicial identity " + what + " fails at level " + std::to_string(n));
    };
    // d_i d_j = d_{j-1} d_i for i < j, as maps A_{n} -> A_{n-2}
    for (std::size_t n = 2; n <= l; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (face(n - 1, i) * face(n, j) != face(n - 1, j - 1) * face(n, i)) fail("d_i d_j", n);
    if (degens_.empty()) return;
    // s_i s_j = s_{j+1} s_i for i <= j, as maps A_n -> A_{n+2}
    for (std::size_t n = 0; n + 2 <= l; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i)
                if (degeneracy(n + 1, i) * degeneracy(n, j) != degeneracy(n + 1, j + 1) * degeneracy(n, i))
                    fail("s_i s_j", n);
    // d_i s_j mixed identities, as maps A_n -> A_n
    for (std::size_t n = 0; n + 1 <= l; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                Matrix lhs = face(n + 1, i) * degeneracy(n, j);
                if (i == j || i == j + 1) {
                    if (lhs != Matrix::identity(ring_, levels_[n])) fail("d_i s_j = id", n);
                } else if (i < j) {
                    if (n == 0) continue;
                    if (lhs != degeneracy(n - 1, j - 1) * face(n, i)) fail("d_i s_j (i<j)", n);
                } else {
                    if (n == 0) continue;
                    if (lhs != degeneracy(n - 1, j) * face(n, i - 1)) fail("d_i s_j (i>j+1)", n);
                }
            }
}

namespace {

// Monotone surjections [n] ->> [m] indexed by their jump sets; summands of
// a Gamma level are ordered m descending, jump set lex within fixed m.
struct LevelTable {
    std::vector<std::vector<std::size_t>> vals; // value vector per summand
    std::vector<std::size_t> target;            // m per summand
    std::vector<std::size_t> offset;            // column offset per summand
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::size_t total = 0;
};

LevelTable build_level_table(std::size_t n, std::size_t top, const std::vector<std::size_t>& ranks) {
    LevelTable t;
    std::size_t mmax = std::min(n, top);
    for (std::size_t md = 0; md <= mmax; ++md) {
        std::size_t m = mmax - md;
        for (const auto& jumps : subsets_lex(n, m)) {
            std::vector<std::size_t> v(n + 1, 0);
            std::size_t ptr = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                v[i] = v[i - 1];
                if (ptr < jumps.size() && jumps[ptr] == i - 1) { // jump at position i
                    ++v[i];
                    ++ptr;
                }
            }
            t.index[v] = t.vals.size();
            t.vals.push_back(std::move(v));
            t.target.push_back(m);
            t.offset.push_back(t.total);
            t.total += ranks[m];
        }
    }
    return t;
}

// Structure map Gamma(C)(alpha) for monotone alpha : [n'] -> [n] given by its
// value list. Components: identity when eta o alpha stays surjective, the
// differential when exactly the value 0 is dropped, zero otherwise.
Matrix gamma_structure_map(const ChainComplex& c, const LevelTable& src, const LevelTable& dst,
                           const std::vector<std::size_t>& alpha) {
    Matrix out(c.ring(), dst.total, src.total);
    for (std::size_t s = 0; s < src.vals.size(); ++s) {
        const auto& eta = src.vals[s];
        std::size_t m = src.target[s];
        std::vector<std::size_t> phi(alpha.size());
        for (std::size_t t = 0; t < alpha.size(); ++t) phi[t] = eta[alpha[t]];
        bool gap = false;
        for (std::size_t t = 1; t < phi.size(); ++t)
            if (phi[t] > phi[t - 1] + 1) gap = true;
        if (gap) continue;
        if (phi[0] == 0 && phi.back() == m) {
            std::size_t d = dst.index.at(phi);
            for (std::size_t r = 0; r < c.rank(m); ++r) out.set(dst.offset[d] + r, src.offset[s] + r, 1);
        } else if (phi[0] == 1) {
            std::vector<std::size_t> shifted(phi.size());
            for (std::size_t t = 0; t < phi.size(); ++t) shifted[t] = phi[t] - 1;
            std::size_t d = dst.index.at(shifted);
            Matrix diff = c.d(m);
            for (std::size_t r = 0; r < diff.rows(); ++r)
                for (std::size_t cc = 0; cc < diff.cols(); ++cc)
                    if (diff(r, cc) != 0) out.set(dst.offset[d] + r, src.offset[s] + cc, diff(r, cc));
        }
    }
    return out;
}

std::vector<std::size_t> coface_values(std::size_t n, std::size_t i) { // delta_i : [n-1] -> [n]
    std::vector<std::size_t> v(n);
    for (std::size_t t = 0; t < n; ++t) v[t] = t < i ? t : t + 1;
    return v;
}

std::vector<std::size_t> codegeneracy_values(std::size_t n, std::size_t j) { // sigma_j : [n+1] -> [n]
    std::vector<std::size_t> v(n + 2);
    for (std::size_t t = 0; t <= n + 1; ++t) v[t] = t <= j ? t : t - 1;
    return v;
}

} // namespace

SimplicialModule gamma(const ChainComplex& c, std::size_t bound, bool verify) {
    if (bound < c.top()) throw std::invalid_argument("gamma: level bound below the top degree");
    std::vector<LevelTable> tables;
    for (std::size_t n = 0; n <= bound; ++n) {
        std::vector<std::size_t> ranks(c.top() + 1);
        for (std::size_t m = 0; m <= c.top(); ++m) ranks[m] = c.rank(m);
        tables.push_back(build_level_table(n, c.top(), ranks));
    }
    std::vector<std::size_t> levels(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) levels[n] = tables[n].total;
    std::vector<std::vector<Matrix>> faces(bound + 1);
    for (std::size_t n = 1; n <= bound; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            faces[n].push_back(gamma_structure_map(c, tables[n], tables[n - 1], coface_values(n, i)));
    std::vector<std::vector<Matrix>> degens(bound);
    for (std::size_t n = 0; n + 1 <= bound; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            degens[n].push_back(gamma_structure_map(c, tables[n], tables[n + 1], codegeneracy_values(n, j)));
    return SimplicialModule::make(c.ring(), std::move(levels), std::move(faces), std::move(degens), verify);
}

std::vector<Matrix> gamma_map_components(const ChainMap& f, std::size_t bound) {
    const ChainComplex& v = f.source();
    const ChainComplex& w = f.target();
    std::size_t top = std::max(v.top(), w.top());
    if (bound < top) throw std::invalid_argument("gamma_map_components: bound below top degree");
    std::vector<Matrix> out;
    for (std::size_t n = 0; n <= bound; ++n) {
        std::vector<std::size_t> vr(top + 1), wr(top + 1);
        for (std::size_t m = 0; m <= top; ++m) {
            vr[m] = v.rank(m);
            wr[m] = w.rank(m);
        }
        LevelTable tv = build_level_table(n, top, vr);
        LevelTable tw = build_level_table(n, top, wr);
        Matrix comp(v.ring(), tw.total, tv.total);
        for (std::size_t s = 0; s < tv.vals.size(); ++s) {
            std::size_t m = tv.target[s];
            Matrix fm = f.component(m);
            for (std::size_t r = 0; r < fm.rows(); ++r)
                for (std::size_t cc = 0; cc < fm.cols(); ++cc)
                    if (fm(r, cc) != 0) comp.set(tw.offset[s] + r, tv.offset[s] + cc, fm(r, cc));
        }
        out.push_back(std::move(comp));
    }
    return out;
}

SimplicialModule levelwise_exterior(const SimplicialModule& a, std::size_t k, bool with_degeneracies) {
    std::vector<std::size_t> levels(a.bound() + 1);
    for (std::size_t n = 0; n <= a.bound(); ++n) levels[n] = subsets_lex(a.level_rank(n), k).size();
    std::vector<std::vector<Matrix>> faces(a.bound() + 1);
    for (std::size_t n = 1; n <= a.bound(); ++n)
        for (std::size_t i = 0; i <= n; ++i) faces[n].push_back(exterior_power_matrix(a.face(n, i), k));
    std::vector<std::vector<Matrix>> degens;
    if (with_degeneracies && a.has_degeneracies()) {
        degens.resize(a.bound());
        for (std::size_t n = 0; n + 1 <= a.bound(); ++n)
            for (std::size_t j = 0; j <= n; ++j) degens[n].push_back(exterior_power_matrix(a.degeneracy(n, j), k));
    }
    return SimplicialModule::make(a.ring(), std::move(levels), std::move(faces), std::move(degens), false);
}

SimplicialModule diagonal_tensor(const SimplicialModule& a, const SimplicialModule& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("diagonal_tensor: ring mismatch");
    std::size_t bound = std::min(a.bound(), b.bound());
    std::vector<std::size_t> levels(bound + 1);
    for (std::size_t n = 0; n <= bound; ++n) levels[n] = a.level_rank(n) * b.level_rank(n);
    std::vector<std::vector<Matrix>> faces(bound + 1);
    for (std::size_t n = 1; n <= bound; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            faces[n].push_back(Matrix::kronecker(a.face(n, i), b.face(n, i)));
    std::vector<std::vector<Matrix>> degens;
    if (a.has_degeneracies() && b.has_degeneracies()) {
        degens.resize(bound);
        for (std::size_t n = 0; n + 1 <= bound; ++n)
            for (std::size_t j = 0; j <= n; ++j)
                degens[n].push_back(Matrix::kronecker(a.degeneracy(n, j), b.degeneracy(n, j)));
    }
    return SimplicialModule::make(a.ring(), std::move(levels), std::move(faces), std::move(degens), false);
}

NormalizedComplex normalize_with_inclusions(const SimplicialModule& a, std::size_t out_top) {
    if (out_top > a.bound()) throw std::invalid_argument("normalize: requested degree beyond the level bound");
    const Ring ring = a.ring();
    std::vector<Matrix> incl;
    incl.push_back(Matrix::identity(ring, a.level_rank(0)));
    for (std::size_t n = 1; n <= out_top; ++n) {
        Matrix basis = Matrix::identity(ring, a.level_rank(n));
        for (std::size_t i = 1; i <= n && basis.cols() > 0; ++i)
            basis = basis * kernel_basis(a.face(n, i) * basis);
        incl.push_back(image_basis(basis));
    }
    std::vector<std::size_t> ranks(out_top + 1);
    for (std::size_t n = 0; n <= out_top; ++n) ranks[n] = incl[n].cols();
    std::vector<Matrix> ds;
    for (std::size_t n = 1; n <= out_top; ++n) ds.push_back(solve_or_throw(incl[n - 1], a.face(n, 0) * incl[n]));
    return NormalizedComplex{ChainComplex(ring, std::move(ranks), std::move(ds)), std::move(incl)};
}

ChainComplex normalize(const SimplicialModule& a) {
    return normalize_with_inclusions(a, a.bound()).complex;
}

SimplicialModule restrict_to_subbases(const SimplicialModule& a, const std::vector<Matrix>& bases) {
    if (bases.size() != a.bound() + 1) throw std::invalid_argument("restrict_to_subbases: one basis per level");
    std::vector<std::size_t> levels(a.bound() + 1);
    for (std::size_t n = 0; n <= a.bound(); ++n) levels[n] = bases[n].cols();
    auto restrict = [&](const Matrix& structure, std::size_t from, std::size_t to) {
        auto x = solve_exact(bases[to], structure * bases[from]);
        if (!x) throw ConsistencyError("restrict_to_subbases: structure map leaves the sub-lattice");
        return *x;
    };
    std::vector<std::vector<Matrix>> faces(a.bound() + 1);
    for (std::size_t n = 1; n <= a.bound(); ++n)
        for (std::size_t i = 0; i <= n; ++i) faces[n].push_back(restrict(a.face(n, i), n, n - 1));
    std::vector<std::vector<Matrix>> degens;
    if (a.has_degeneracies()) {
        degens.resize(a.bound());
        for (std::size_t n = 0; n + 1 <= a.bound(); ++n)
            for (std::size_t j = 0; j <= n; ++j) degens[n].push_back(restrict(a.degeneracy(n, j), n, n + 1));
    }
    return SimplicialModule::make(a.ring(), std::move(levels), std::move(faces), std::move(degens), false);
}

namespace {

ChainComplex truncate_checked(const NormalizedComplex& nc, std::size_t support_top, const std::string& what) {
    for (std::size_t n = support_top + 1; n <= nc.complex.top(); ++n)
        if (nc.complex.rank(n) != 0)
            throw ConsistencyError(what + ": nonzero rank " + std::to_string(nc.complex.rank(n)) +
                                   " above the expected support bound at level " + std::to_string(n));
    std::vector<std::size_t> ranks(support_top + 1);
    std::vector<Matrix> ds;
    for (std::size_t n = 0; n <= support_top; ++n) ranks[n] = nc.complex.rank(n);
    for (std::size_t n = 1; n <= support_top; ++n) ds.push_back(nc.complex.d(n));
    return ChainComplex(nc.complex.ring(), std::move(ranks), std::move(ds));
}

} // namespace

ChainComplex dold_puppe_power(const ChainComplex& c, std::size_t k, std::size_t slack) {
    return dold_puppe_power_data(c, k, slack).complex;
}

WedgePowerData dold_puppe_power_data(const ChainComplex& c, std::size_t k, std::size_t slack) {
    if (k == 0) throw std::invalid_argument("dold_puppe_power: k must be positive");
    std::size_t bound = k * c.top() + slack;
    if (k == 1) {
        SimplicialModule g = gamma(c, bound);
        NormalizedComplex nc = normalize_with_inclusions(g, bound);
        return WedgePowerData{truncate_checked(nc, c.top(), "dold_puppe_power"), std::move(nc.inclusions)};
    }
    SimplicialModule g = gamma(c, bound);
    SimplicialModule e = levelwise_exterior(g, k, false);
    NormalizedComplex nc = normalize_with_inclusions(e, bound);
    return WedgePowerData{truncate_checked(nc, k * c.top(), "dold_puppe_power"), std::move(nc.inclusions)};
}

ChainMap dold_puppe_power_map(const ChainMap& f, std::size_t k, std::size_t slack) {
    if (k == 0) throw std::invalid_argument("dold_puppe_power_map: k must be positive");
    if (k == 1) return f;
    const ChainComplex& v = f.source();
    const ChainComplex& w = f.target();
    std::size_t bound = k * std::max(v.top(), w.top()) + slack;
    SimplicialModule ev = levelwise_exterior(gamma(v, bound), k, false);
    SimplicialModule ew = levelwise_exterior(gamma(w, bound), k, false);
    NormalizedComplex nv = normalize_with_inclusions(ev, bound);
    NormalizedComplex nw = normalize_with_inclusions(ew, bound);
    ChainComplex pv = truncate_checked(nv, k * v.top(), "dold_puppe_power_map(source)");
    ChainComplex pw = truncate_checked(nw, k * w.top(), "dold_puppe_power_map(target)");
    std::vector<Matrix> gf = gamma_map_components(f, bound);
    std::vector<Matrix> comps;
    std::size_t m = std::max(pv.top(), pw.top());
    for (std::size_t n = 0; n <= m; ++n) {
        Matrix lf = exterior_power_matrix(gf[n], k);
        comps.push_back(solve_or_throw(nw.inclusions[n], lf * nv.inclusions[n]));
    }
    return ChainMap(std::move(pv), std::move(pw), std::move(comps));
}

ChainComplex simplicial_tensor(const ChainComplex& a, const ChainComplex& b, std::size_t slack) {
    if (a.ring() != b.ring()) throw std::invalid_argument("simplicial_tensor: ring mismatch");
    std::size_t support = a.top() + b.top();
    std::size_t bound = support + slack;
    SimplicialModule prod = diagonal_tensor(gamma(a, bound), gamma(b, bound));
    NormalizedComplex nc = normalize_with_inclusions(prod, bound);
    return truncate_checked(nc, support, "simplicial_tensor");
}

Matrix multi_wedge_map(const std::vector<Matrix>& maps) {
    if (maps.empty()) throw std::invalid_argument("multi_wedge_map: needs at least one map");
    const Ring ring = maps[0].ring();
    std::size_t ambient = maps[0].rows();
    std::size_t k = maps.size();
    std::size_t tuple_count = 1;
    for (const auto& m : maps) {
        if (m.rows() != ambient || m.ring() != ring)
            throw std::invalid_argument("multi_wedge_map: maps must share the ambient module");
        tuple_count *= m.cols();
    }
    const auto& rows = subsets_lex(ambient, k);
    Matrix out(ring, rows.size(), tuple_count);
    std::vector<std::size_t> tuple(k, 0);
    for (std::size_t col = 0; col < tuple_count; ++col) {
        // gathered D x k slab of the chosen columns
        Matrix slab(ring, ambient, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t r = 0; r < ambient; ++r) slab.set(r, i, maps[i](r, tuple[i]));
        std::vector<std::size_t> all_cols(k);
        for (std::size_t i = 0; i < k; ++i) all_cols[i] = i;
        for (std::size_t s = 0; s < rows.size(); ++s) {
            Rat d = submatrix_det(slab, rows[s], all_cols);
            if (d != 0) out.set(s, col, d);
        }
        // advance mixed-radix tuple, last index fastest
        for (std::size_t i = k; i-- > 0;) {
            if (++tuple[i] < maps[i].cols()) break;
            tuple[i] = 0;
        }
    }
    return out;
}

ChainComplex wedge_of_sequence(const ChainComplex& first, const std::vector<ChainMap>& inclusions,
                               std::size_t slack) {
    return wedge_of_sequence_data(first, inclusions, slack).complex;
}

WedgePowerData wedge_of_sequence_data(const ChainComplex& first, const std::vector<ChainMap>& inclusions,
                                      std::size_t slack) {
    std::size_t k = inclusions.size() + 1;
    // validate chaining and admissibility
    const ChainComplex* cur = &first;
    for (const auto& inc : inclusions) {
        if (inc.source() != *cur) throw std::invalid_argument("wedge_of_sequence: inclusions do not chain");
        if (!is_admissible_mono_of_complexes(inc))
            throw std::invalid_argument("wedge_of_sequence: a map in the chain is not an admissible mono");
        cur = &inc.target();
    }
    if (k == 1) return dold_puppe_power_data(first, 1, slack);
    const ChainComplex& last = *cur;
    std::size_t support = k * last.top();
    std::size_t bound = support + slack;

    SimplicialModule glast = gamma(last, bound);

    // levelwise composite inclusions into Gamma(last)
    std::vector<std::vector<Matrix>> into_last(k);
    for (std::size_t n = 0; n <= bound; ++n)
        into_last[k - 1].push_back(Matrix::identity(last.ring(), glast.level_rank(n)));
    for (std::size_t i = k - 1; i-- > 0;) {
        std::vector<Matrix> gm = gamma_map_components(inclusions[i], bound);
        into_last[i].reserve(bound + 1);
        for (std::size_t n = 0; n <= bound; ++n) into_last[i].push_back(into_last[i + 1][n] * gm[n]);
    }

    SimplicialModule big = levelwise_exterior(glast, k, true);
    std::vector<Matrix> bases;
    for (std::size_t n = 0; n <= bound; ++n) {
        std::vector<Matrix> maps;
        for (std::size_t i = 0; i < k; ++i) maps.push_back(into_last[i][n]);
        bases.push_back(image_basis(multi_wedge_map(maps)));
    }
    SimplicialModule sub = restrict_to_subbases(big, bases);
    NormalizedComplex nc = normalize_with_inclusions(sub, bound);
    std::vector<Matrix> ambient;
    for (std::size_t n = 0; n <= bound; ++n) ambient.push_back(bases[n] * nc.inclusions[n]);
    return WedgePowerData{truncate_checked(nc, support, "wedge_of_sequence"), std::move(ambient)};
}

} // namespace extpow
