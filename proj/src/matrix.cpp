#include "extpow/matrix.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace extpow {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : ring_(ring), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count does not match dimensions");
    for (auto& x : e_) x = ring_.normalize(x);
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::+: shape or ring mismatch");
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.normalize(e_[i] + o.e_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.normalize(-e_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("Matrix::*: ring mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::*: inner dimensions disagree");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = e_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o.e_[k * o.cols_ + j];
                if (b != 0) r.e_[i * o.cols_ + j] += a * b;
            }
        }
    for (auto& x : r.e_) x = ring_.normalize(x);
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.normalize(e_[i] * c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
    return r;
}

Matrix Matrix::col_slice(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw std::invalid_argument("col_slice: bad range");
    Matrix r(ring_, rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j) r.e_[i * r.cols_ + (j - c0)] = e_[i * cols_ + j];
    return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_ || a.rows_ != b.rows_) throw std::invalid_argument("hcat: shape or ring mismatch");
    Matrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
    r.paste(0, 0, a);
    r.paste(0, a.cols_, b);
    return r;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_ || a.cols_ != b.cols_) throw std::invalid_argument("vcat: shape or ring mismatch");
    Matrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
    r.paste(0, 0, a);
    r.paste(a.rows_, 0, b);
    return r;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("direct_sum: ring mismatch");
    Matrix r(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    r.paste(0, 0, a);
    r.paste(a.rows_, a.cols_, b);
    return r;
}

void Matrix::paste(std::size_t i0, std::size_t j0, const Matrix& src) {
    if (i0 + src.rows_ > rows_ || j0 + src.cols_ > cols_) throw std::invalid_argument("paste: out of range");
    for (std::size_t i = 0; i < src.rows_; ++i)
        for (std::size_t j = 0; j < src.cols_; ++j) e_[(i0 + i) * cols_ + (j0 + j)] = src.e_[i * src.cols_ + j];
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("kronecker: ring mismatch");
    Matrix r(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Rat& v = a(i, j);
            if (v == 0) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) {
                    const Rat& w = b(k, l);
                    if (w != 0) r.e_[(i * b.rows_ + k) * r.cols_ + (j * b.cols_ + l)] = a.ring_.normalize(v * w);
                }
        }
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

Rat submatrix_det(const Matrix& a, const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) {
    std::size_t k = ri.size();
    if (k != ci.size()) throw std::invalid_argument("submatrix_det: index lists differ in length");
    switch (k) {
    case 0: return Rat(1);
    case 1: return a(ri[0], ci[0]);
    case 2: return a(ri[0], ci[0]) * a(ri[1], ci[1]) - a(ri[0], ci[1]) * a(ri[1], ci[0]);
    default: {
        // cofactor expansion along the first row; k stays tiny here
        Rat acc(0);
        std::vector<std::size_t> sub_rows(ri.begin() + 1, ri.end());
        std::vector<std::size_t> sub_cols(k - 1);
        for (std::size_t j = 0; j < k; ++j) {
            const Rat& piv = a(ri[0], ci[j]);
            if (piv == 0) continue;
            std::size_t t = 0;
            for (std::size_t l = 0; l < k; ++l)
                if (l != j) sub_cols[t++] = ci[l];
            Rat m = submatrix_det(a, sub_rows, sub_cols);
            if (j % 2 == 0) acc += piv * m;
            else acc -= piv * m;
        }
        return acc;
    }
    }
}

namespace {
std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> subset_cache;
std::mutex subset_mutex;
} // namespace

const std::vector<std::vector<std::size_t>>& subsets_lex(std::size_t n, std::size_t k) {
    std::lock_guard<std::mutex> lock(subset_mutex);
    auto key = std::make_pair(n, k);
    auto it = subset_cache.find(key);
    if (it != subset_cache.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    if (k <= n) {
        std::vector<std::size_t> cur(k);
        for (std::size_t i = 0; i < k; ++i) cur[i] = i;
        while (true) {
            out.push_back(cur);
            // next subset in lex order
            std::size_t i = k;
            while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
        if (k == 0) out.assign(1, {});
    }
    return subset_cache.emplace(key, std::move(out)).first->second;
}

Int binomial(const Int& n, std::size_t k) {
    if (n >= 0 && Int(k) > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= (n - Int(i));
        r /= Int(i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

Matrix exterior_power_matrix(const Matrix& a, std::size_t k) {
    if (k == 0) return Matrix::identity(a.ring(), 1);
    const auto& row_sets = subsets_lex(a.rows(), k);
    const auto& col_sets = subsets_lex(a.cols(), k);
    Matrix r(a.ring(), row_sets.size(), col_sets.size());
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j) {
            Rat d = submatrix_det(a, row_sets[i], col_sets[j]);
            if (d != 0) r.set(i, j, d);
        }
    return r;
}

Matrix wedge_product_matrix(Ring ring, std::size_t d, std::size_t a, std::size_t b) {
    const auto& sa = subsets_lex(d, a);
    const auto& sb = subsets_lex(d, b);
    const auto& sc = subsets_lex(d, a + b);
    std::map<std::vector<std::size_t>, std::size_t> index_of;
    for (std::size_t i = 0; i < sc.size(); ++i) index_of[sc[i]] = i;
    Matrix r(ring, sc.size(), sa.size() * sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = 0; j < sb.size(); ++j) {
            // merge the two subsets; zero if they intersect
            std::vector<std::size_t> merged;
            merged.reserve(a + b);
            std::size_t p = 0, q = 0;
            int sign = 1;
            bool clash = false;
            while (p < a || q < b) {
                if (q == b || (p < a && sa[i][p] < sb[j][q])) {
                    merged.push_back(sa[i][p++]);
                } else if (p == a || sb[j][q] < sa[i][p]) {
                    // moving sb[j][q] past the remaining a-p elements of sa[i]
                    if ((a - p) % 2 == 1) sign = -sign;
                    merged.push_back(sb[j][q++]);
                } else {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            r.set(index_of.at(merged), i * sb.size() + j, sign);
        }
    return r;
}

} // namespace extpow
