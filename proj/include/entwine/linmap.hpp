#ifndef ENTWINE_LINMAP_HPP
#define ENTWINE_LINMAP_HPP

#include "entwine/scalar.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace entwine {

using Vector = std::vector<Scalar>;

/// Ordered list of tensor factor dimensions. The empty shape is the ground field.
using Shape = std::vector<std::size_t>;

std::size_t total(const Shape& s);
/// Row-major: flatten(i1,...,ik) = ((i1*d2 + i2)*d3 + ...).
std::size_t flatten(const Shape& s, const std::vector<std::size_t>& idx);
std::vector<std::size_t> unflatten(const Shape& s, std::size_t flat);
Shape concat(const Shape& a, const Shape& b);
std::string shape_string(const Shape& s);

Vector zero_vector(const Field& f, std::size_t n);

/// Dense matrix over a Field. Prime-field entries are stored as raw residues
/// and rational entries as GMP fractions; every kernel is instantiated for both.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const Field& f, const std::vector<Vector>& cols, std::size_t rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    /// Adds v to entry (i, j).
    void add_to(std::size_t i, std::size_t j, const Scalar& v);
    bool entry_is_zero(std::size_t i, std::size_t j) const;
    bool is_zero() const;

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    Vector apply(const Vector& x) const;

    Matrix transpose() const;
    Matrix kron(const Matrix& o) const;
    /// (this (x) g) * x without forming the Kronecker product.
    Matrix kron_times(const Matrix& g, const Matrix& x) const;
    /// this * (f (x) g) without forming the Kronecker product.
    Matrix times_kron(const Matrix& f, const Matrix& g) const;
    /// Product of the factors (leftmost first), each factor the Kronecker
    /// product of its parts, evaluated on sparse columns.
    static Matrix kron_chain(const std::vector<std::vector<const Matrix*>>& factors);
    Matrix scaled(const Scalar& s) const;
    /// This matrix with `below` appended underneath (equal column counts).
    Matrix vstack(const Matrix& below) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    struct Echelon;
    /// Reduced row echelon form; pivot = first nonzero entry scanning columns left to right.
    Echelon rref() const;
    std::size_t rank() const;
    std::optional<Matrix> inverse() const;

    /// First (row, col) at which the two matrices differ.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& o) const;

    template <class Fn>
    decltype(auto) visit(Fn&& fn);
    template <class Fn>
    decltype(auto) visit(Fn&& fn) const;

private:
    void require_compatible(const Matrix& o, const char* op) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<std::vector<mpq_class>, std::vector<std::uint64_t>> data_;
};

struct Matrix::Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

struct LinearSolution {
    std::optional<Vector> particular;
    std::vector<Vector> kernel;
    std::size_t rank = 0;
};

/// Solves M x = b exactly. The particular solution (when present) and every
/// kernel vector are checked by substitution before returning.
LinearSolution solve_linear(const Matrix& m, const Vector& b);
/// Basis of ker M (free-variable parametrization from the RREF).
std::vector<Vector> kernel_basis(const Matrix& m);

/// A linear map between tensor products of coordinate spaces.
class LinMap {
public:
    LinMap() = default;
    LinMap(Shape domain, Shape codomain, Matrix m);

    static LinMap identity(const Field& f, const Shape& s);
    static LinMap zero(const Field& f, const Shape& domain, const Shape& codomain);
    /// Output factor j is input factor perm[j].
    static LinMap permutation(const Field& f, const Shape& domain, const std::vector<std::size_t>& perm);
    /// X (x) Y -> Y (x) X.
    static LinMap swap(const Field& f, const Shape& x, const Shape& y);
    /// Column vector k -> V for an element of V.
    static LinMap element(const Field& f, const Shape& s, const Vector& v);
    /// Row vector V -> k for a functional on V.
    static LinMap functional(const Field& f, const Shape& s, const Vector& v);
    static LinMap from_entries(const Field& f, const Shape& domain, const Shape& codomain,
                               const std::function<Scalar(std::size_t out, std::size_t in)>& entry);

    const Shape& domain() const noexcept { return dom_; }
    const Shape& codomain() const noexcept { return cod_; }
    const Matrix& matrix() const noexcept { return mat_; }
    const Field& field() const noexcept { return mat_.field(); }

    Scalar coeff(std::size_t out, std::size_t in) const { return mat_.at(out, in); }
    Vector apply(const Vector& x) const { return mat_.apply(x); }
    Vector image_of_basis(std::size_t in) const { return mat_.column(in); }

    /// Same matrix with new shapes of equal total size.
    LinMap reshaped(Shape domain, Shape codomain) const;
    LinMap transpose() const;
    LinMap scaled(const Scalar& s) const;

    /// g * f is the composite g after f.
    LinMap operator*(const LinMap& f) const;
    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    bool operator==(const LinMap& o) const;
    bool operator!=(const LinMap& o) const { return !(*this == o); }

    bool is_zero() const { return mat_.is_zero(); }

private:
    Shape dom_;
    Shape cod_;
    Matrix mat_;
};

LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor(std::initializer_list<LinMap> maps);
/// (f (x) g) o x, computed from the nonzero entries only.
LinMap tensor_then(const LinMap& f, const LinMap& g, const LinMap& x);
/// y o (f (x) g).
LinMap then_tensor(const LinMap& y, const LinMap& f, const LinMap& g);
/// f1 o f2 o ... where each factor is the tensor product of its parts.
/// compose_tensored({{a, b}, {x}}) equals tensor(a, b) * x.
LinMap compose_tensored(std::initializer_list<std::initializer_list<std::reference_wrapper<const LinMap>>> factors);

// ---------------------------------------------------------------------------
// Element-type specific arithmetic used by the templated kernels.

struct FpOps {
    using T = std::uint64_t;
    std::uint64_t p;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return modp::add(a, b, p); }
    T sub(const T& a, const T& b) const { return modp::sub(a, b, p); }
    T mul(const T& a, const T& b) const { return modp::mul(a, b, p); }
    T neg(const T& a) const { return modp::neg(a, p); }
    T inv(const T& a) const { return modp::inv(a, p); }
    void fma(T& acc, const T& a, const T& b) const { acc = modp::add(acc, modp::mul(a, b, p), p); }
    void fms(T& acc, const T& a, const T& b) const { acc = modp::sub(acc, modp::mul(a, b, p), p); }
    T from(const Scalar& s) const { return s.residue(); }
    Scalar to(const T& a) const { return Scalar::modular(a, p); }
};

struct QOps {
    using T = mpq_class;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return 1 / a; }
    void fma(T& acc, const T& a, const T& b) const { acc += a * b; }
    void fms(T& acc, const T& a, const T& b) const { acc -= a * b; }
    T from(const Scalar& s) const { return s.rational_value(); }
    Scalar to(const T& a) const { return Scalar::rational(a); }
};

template <class Fn>
decltype(auto) Matrix::visit(Fn&& fn) {
    if (field_.is_prime()) return fn(FpOps{field_.characteristic()}, std::get<std::vector<std::uint64_t>>(data_));
    return fn(QOps{}, std::get<std::vector<mpq_class>>(data_));
}

template <class Fn>
decltype(auto) Matrix::visit(Fn&& fn) const {
    if (field_.is_prime())
        return fn(FpOps{field_.characteristic()}, std::get<std::vector<std::uint64_t>>(data_));
    return fn(QOps{}, std::get<std::vector<mpq_class>>(data_));
}

} // namespace entwine

#endif
