#pragma once

// Exact dense linear algebra over the rationals.
//
// Every structure in the library is reduced to matrices over Q and
// subspaces of coordinate spaces. Subspaces are always stored in reduced
// row-echelon form, so two equal subspaces have bit-identical bases.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace leibxmod {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "n" (optionally signed). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
void axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_list() const;
    std::vector<Vector> column_list() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const = default;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix matrix;  // zero rows dropped
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot rule is first nonzero column, topmost row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Incremental reduced row-echelon basis. Insertion keeps the basis fully
/// reduced, so the final basis is the canonical RREF of the span.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient_dim);

    /// Returns true when v enlarged the span.
    bool add(Vector v);
    /// Reduces v against the current basis in place.
    void reduce(Vector& v) const;
    bool contains(Vector v) const;

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool full() const { return rows_.size() == ambient_; }

    Matrix matrix() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;  // sorted by pivot
    std::vector<std::size_t> pivots_;
};

class Subspace {
public:
    Subspace() = default;
    /// Zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim);

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient_dim);
    /// Column space of m.
    static Subspace image(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
    Vector coordinates(const Vector& v) const;
    /// Basis matrix transposed: ambient_dim x dim, columns are basis vectors.
    Matrix inclusion() const;

    bool operator==(const Subspace& rhs) const = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace kernel(const Matrix& m);
/// Image of the subspace s under the linear map m.
Subspace map_subspace(const Matrix& m, const Subspace& s);
/// Preimage of s under m.
Subspace preimage(const Matrix& m, const Subspace& s);

/// Projection onto V/R with the canonical basis given by the non-pivot
/// coordinates of R's RREF.
class QuotientMap {
public:
    QuotientMap() = default;
    explicit QuotientMap(Subspace relations);

    std::size_t ambient_dim() const { return relations_.ambient_dim(); }
    std::size_t dim() const { return free_.size(); }
    const Subspace& relations() const { return relations_; }
    const std::vector<std::size_t>& free_coordinates() const { return free_; }

    Vector project(const Vector& v) const;
    /// Quotient coordinate k lifted to the ambient unit vector at free_coordinates()[k].
    Vector lift(const Vector& q) const;
    Matrix projection() const;  // dim x ambient
    Matrix section() const;     // ambient x dim

private:
    Subspace relations_;
    std::vector<std::size_t> free_;
};

/// Right inverse of a surjective matrix.
///
/// `canonical` inverts the columns at the leading pivots. `perturbed` uses
/// the trailing pivots instead and adds the sum of the kernel basis to every
/// column, so it differs from `canonical` whenever the kernel is nonzero.
enum class SectionPolicy { canonical, perturbed };
Matrix right_inverse(const Matrix& m, SectionPolicy policy = SectionPolicy::canonical);
/// Inverse of a square invertible matrix; throws std::invalid_argument otherwise.
Matrix inverse(const Matrix& m);

}  // namespace leibxmod
