#include "leibxmod/ratlin.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace leibxmod {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in rational \"" + std::string(text) + "\"");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void axpy(Vector& y, const Rational& a, const Vector& x)
{
    if (sgn(a) == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += a * x[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

std::vector<Vector> Matrix::row_list() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

std::vector<Vector> Matrix::column_list() const
{
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                if (sgn(rhs(k, c)) != 0)
                    out(r, c) += a * rhs(k, c);
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (cols_ != v.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0)
            continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (sgn((*this)(r, c)) != 0)
                out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

bool Matrix::is_zero() const
{
    return leibxmod::is_zero(data_);
}

// -------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

void EchelonBuilder::reduce(Vector& v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (sgn(v[pivots_[k]]) == 0)
            continue;
        Rational f = v[pivots_[k]];
        axpy(v, -f, rows_[k]);
    }
}

bool EchelonBuilder::contains(Vector v) const
{
    reduce(v);
    return leibxmod::is_zero(v);
}

bool EchelonBuilder::add(Vector v)
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector length does not match ambient dimension");
    if (full())
        return false;
    reduce(v);
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead == v.end())
        return false;
    std::size_t p = static_cast<std::size_t>(lead - v.begin());
    Rational inv = 1 / v[p];
    for (auto& x : v)
        if (sgn(x) != 0)
            x *= inv;
    for (auto& r : rows_)
        if (sgn(r[p]) != 0) {
            Rational f = r[p];
            axpy(r, -f, v);
        }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

Matrix EchelonBuilder::matrix() const
{
    return Matrix::from_rows(rows_, ambient_);
}

RrefResult rref(const Matrix& m)
{
    EchelonBuilder b(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        b.add(m.row(r));
    return {b.matrix(), b.pivots()};
}

std::size_t rank(const Matrix& m)
{
    EchelonBuilder b(m.cols());
    for (std::size_t r = 0; r < m.rows() && !b.full(); ++r)
        b.add(m.row(r));
    return b.dim();
}

// -------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    EchelonBuilder b(ambient_dim);
    for (const auto& v : vectors) {
        if (b.full())
            break;
        b.add(v);
    }
    Subspace s(ambient_dim);
    s.basis_ = b.matrix();
    s.pivots_ = b.pivots();
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::image(const Matrix& m)
{
    return span(m.rows(), m.column_list());
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector length does not match ambient dimension");
    Vector w = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        if (sgn(w[pivots_[k]]) == 0)
            continue;
        Rational f = w[pivots_[k]];
        for (std::size_t c = 0; c < ambient_; ++c)
            if (sgn(basis_(k, c)) != 0)
                w[c] -= f * basis_(k, c);
    }
    return leibxmod::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace dimension mismatch");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    Vector c(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k)
        c[k] = v[pivots_[k]];
    return c;
}

Matrix Subspace::inclusion() const
{
    return basis_.transpose();
}

Subspace operator+(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace dimension mismatch");
    auto vs = a.basis_vectors();
    auto ws = b.basis_vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return Subspace::span(a.ambient_dim(), vs);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace dimension mismatch");
    const std::size_t n = a.ambient_dim();
    if (a.is_zero() || b.is_zero())
        return Subspace(n);
    // x·A = y·B  <=>  (x, y) in ker [A^T | -B^T]
    Matrix stacked(n, a.dim() + b.dim());
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            stacked(c, i) = a.basis()(i, c);
        for (std::size_t j = 0; j < b.dim(); ++j)
            stacked(c, a.dim() + j) = -b.basis()(j, c);
    }
    Subspace k = kernel(stacked);
    std::vector<Vector> out;
    for (const auto& xy : k.basis_vectors()) {
        Vector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            axpy(v, xy[i], a.basis().row(i));
        out.push_back(std::move(v));
    }
    return Subspace::span(n, out);
}

Subspace kernel(const Matrix& m)
{
    auto [r, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace map_subspace(const Matrix& m, const Subspace& s)
{
    if (m.cols() != s.ambient_dim())
        throw std::invalid_argument("map/subspace dimension mismatch");
    std::vector<Vector> images;
    for (const auto& v : s.basis_vectors())
        images.push_back(m * v);
    return Subspace::span(m.rows(), images);
}

Subspace preimage(const Matrix& m, const Subspace& s)
{
    if (m.rows() != s.ambient_dim())
        throw std::invalid_argument("map/subspace dimension mismatch");
    // Compose with the projection onto the quotient by s and take the kernel.
    QuotientMap q(s);
    return kernel(q.projection() * m);
}

// ----------------------------------------------------------- QuotientMap

QuotientMap::QuotientMap(Subspace relations) : relations_(std::move(relations))
{
    std::vector<bool> is_pivot(relations_.ambient_dim(), false);
    for (auto p : relations_.pivots())
        is_pivot[p] = true;
    for (std::size_t i = 0; i < is_pivot.size(); ++i)
        if (!is_pivot[i])
            free_.push_back(i);
}

Vector QuotientMap::project(const Vector& v) const
{
    if (v.size() != ambient_dim())
        throw std::invalid_argument("vector length does not match ambient dimension");
    const auto& basis = relations_.basis();
    const auto& pivots = relations_.pivots();
    Vector q(free_.size());
    // After reducing v by the relation rows, the free entries of the
    // residual are v_f - sum_k v_{p_k} R[k][f].
    for (std::size_t j = 0; j < free_.size(); ++j) {
        Rational x = v[free_[j]];
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (sgn(v[pivots[k]]) != 0 && sgn(basis(k, free_[j])) != 0)
                x -= v[pivots[k]] * basis(k, free_[j]);
        q[j] = std::move(x);
    }
    return q;
}

Vector QuotientMap::lift(const Vector& q) const
{
    Vector v(ambient_dim());
    for (std::size_t j = 0; j < free_.size(); ++j)
        v[free_[j]] = q[j];
    return v;
}

Matrix QuotientMap::projection() const
{
    Matrix p(dim(), ambient_dim());
    for (std::size_t i = 0; i < ambient_dim(); ++i) {
        Vector col = project(unit_vector(ambient_dim(), i));
        for (std::size_t j = 0; j < dim(); ++j)
            p(j, i) = col[j];
    }
    return p;
}

Matrix QuotientMap::section() const
{
    Matrix s(ambient_dim(), dim());
    for (std::size_t j = 0; j < free_.size(); ++j)
        s(free_[j], j) = 1;
    return s;
}

// -------------------------------------------------------- right inverses

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto [red, pivots] = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw std::invalid_argument("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = red(r, n + c);
    return inv;
}

Matrix right_inverse(const Matrix& m, SectionPolicy policy)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // The pivot columns of m select an invertible square block.
    std::vector<std::size_t> chosen;
    if (policy == SectionPolicy::canonical) {
        chosen = rref(m).pivots;
    } else {
        Matrix reversed(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                reversed(r, c) = m(r, cols - 1 - c);
        for (auto p : rref(reversed).pivots)
            chosen.push_back(cols - 1 - p);
        std::sort(chosen.begin(), chosen.end());
    }
    if (chosen.size() != rows)
        throw std::invalid_argument("right inverse requested for a non-surjective map");
    Matrix block(rows, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < rows; ++k)
            block(r, k) = m(r, chosen[k]);
    Matrix block_inv = inverse(block);
    Matrix s(cols, rows);
    for (std::size_t k = 0; k < rows; ++k)
        for (std::size_t c = 0; c < rows; ++c)
            s(chosen[k], c) = block_inv(k, c);
    if (policy == SectionPolicy::perturbed) {
        Vector shift(cols);
        for (const auto& v : kernel(m).basis_vectors())
            axpy(shift, 1, v);
        for (std::size_t c = 0; c < rows; ++c)
            for (std::size_t r = 0; r < cols; ++r)
                s(r, c) += shift[r];
    }
    return s;
}

}  // namespace leibxmod
