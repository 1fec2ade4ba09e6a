#include "entwine/linmap.hpp"

#include <algorithm>
#include <sstream>

namespace entwine {

std::size_t total(const Shape& s) {
    std::size_t n = 1;
    for (auto d : s) n *= d;
    return n;
}

std::size_t flatten(const Shape& s, const std::vector<std::size_t>& idx) {
    if (idx.size() != s.size()) throw ContractViolation("flatten: index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (idx[k] >= s[k]) throw ContractViolation("flatten: index out of range");
        flat = flat * s[k] + idx[k];
    }
    return flat;
}

std::vector<std::size_t> unflatten(const Shape& s, std::size_t flat) {
    std::vector<std::size_t> idx(s.size());
    for (std::size_t k = s.size(); k-- > 0;) {
        idx[k] = flat % s[k];
        flat /= s[k];
    }
    return idx;
}

Shape concat(const Shape& a, const Shape& b) {
    Shape r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::string shape_string(const Shape& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    os << ')';
    return os.str();
}

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
    if (f.is_prime())
        data_ = std::vector<std::uint64_t>(rows * cols, 0);
    else
        data_ = std::vector<mpq_class>(rows * cols);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    m.visit([&](auto ops, auto& d) {
        for (std::size_t i = 0; i < n; ++i) d[i * n + i] = ops.one();
    });
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ContractViolation("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ContractViolation("from_columns: ragged input");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    return visit([&](auto ops, const auto& d) { return ops.to(d[i * cols_ + j]); });
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.field() != field_) throw ContractViolation("matrix entry from a different field");
    visit([&](auto ops, auto& d) { d[i * cols_ + j] = ops.from(v); });
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.field() != field_) throw ContractViolation("matrix entry from a different field");
    visit([&](auto ops, auto& d) {
        auto& e = d[i * cols_ + j];
        e = ops.add(e, ops.from(v));
    });
}

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
    return visit([&](auto ops, const auto& d) { return ops.is_zero(d[i * cols_ + j]); });
}

bool Matrix::is_zero() const {
    return visit([&](auto ops, const auto& d) {
        for (const auto& x : d)
            if (!ops.is_zero(x)) return false;
        return true;
    });
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Vector Matrix::row(std::size_t i) const {
    Vector v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw ContractViolation("apply: vector length mismatch");
    return visit([&](auto ops, const auto& d) {
        using T = typename decltype(ops)::T;
        std::vector<T> xs;
        xs.reserve(cols_);
        for (const auto& s : x) {
            if (s.field() != field_) throw ContractViolation("apply: vector from a different field");
            xs.push_back(ops.from(s));
        }
        Vector out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc = ops.zero();
            for (std::size_t j = 0; j < cols_; ++j)
                if (!ops.is_zero(d[i * cols_ + j]) && !ops.is_zero(xs[j])) ops.fma(acc, d[i * cols_ + j], xs[j]);
            out.push_back(ops.to(acc));
        }
        return out;
    });
}

void Matrix::require_compatible(const Matrix& o, const char* op) const {
    if (field_ != o.field_) throw ContractViolation(std::string(op) + ": matrices over different fields");
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    visit([&](auto, const auto& d) {
        using T = std::decay_t<decltype(d[0])>;
        auto& td = std::get<std::vector<T>>(t.data_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) td[j * rows_ + i] = d[i * cols_ + j];
    });
    return t;
}

Matrix Matrix::kron(const Matrix& o) const {
    require_compatible(o, "kron");
    Matrix k(field_, rows_ * o.rows_, cols_ * o.cols_);
    visit([&](auto ops, const auto& d) {
        using T = typename decltype(ops)::T;
        const auto& od = std::get<std::vector<T>>(o.data_);
        auto& kd = std::get<std::vector<T>>(k.data_);
        const std::size_t kc = k.cols_;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& a = d[i * cols_ + j];
                if (ops.is_zero(a)) continue;
                for (std::size_t r = 0; r < o.rows_; ++r)
                    for (std::size_t c = 0; c < o.cols_; ++c) {
                        const T& b = od[r * o.cols_ + c];
                        if (ops.is_zero(b)) continue;
                        kd[(i * o.rows_ + r) * kc + (j * o.cols_ + c)] = ops.mul(a, b);
                    }
            }
    });
    return k;
}

Matrix Matrix::kron_times(const Matrix& g, const Matrix& x) const {
    require_compatible(g, "kron_times");
    require_compatible(x, "kron_times");
    if (x.rows_ != cols_ * g.cols_) throw ContractViolation("kron_times: inner dimensions differ");
    Matrix out(field_, rows_ * g.rows_, x.cols_);
    visit([&](auto ops, const auto& fd) {
        using T = typename decltype(ops)::T;
        const auto& gd = std::get<std::vector<T>>(g.data_);
        const auto& xd = std::get<std::vector<T>>(x.data_);
        auto& od = std::get<std::vector<T>>(out.data_);
        // nonzero entries of each column
        auto columns = [&](const std::vector<T>& d, std::size_t rows, std::size_t cols) {
            std::vector<std::vector<std::pair<std::size_t, T>>> c(cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (!ops.is_zero(d[i * cols + j])) c[j].emplace_back(i, d[i * cols + j]);
            return c;
        };
        auto fc = columns(fd, rows_, cols_);
        auto gc = columns(gd, g.rows_, g.cols_);
        const std::size_t xc = x.cols_;
        for (std::size_t k = 0; k < cols_; ++k) {
            if (fc[k].empty()) continue;
            for (std::size_t l = 0; l < g.cols_; ++l) {
                if (gc[l].empty()) continue;
                const std::size_t r = k * g.cols_ + l;
                for (std::size_t c = 0; c < xc; ++c) {
                    const T& xv = xd[r * xc + c];
                    if (ops.is_zero(xv)) continue;
                    for (const auto& [i, fv] : fc[k]) {
                        T fx = ops.mul(fv, xv);
                        for (const auto& [j, gv] : gc[l]) ops.fma(od[(i * g.rows_ + j) * xc + c], fx, gv);
                    }
                }
            }
        }
    });
    return out;
}

Matrix Matrix::times_kron(const Matrix& f, const Matrix& g) const {
    require_compatible(f, "times_kron");
    require_compatible(g, "times_kron");
    if (cols_ != f.rows_ * g.rows_) throw ContractViolation("times_kron: inner dimensions differ");
    Matrix out(field_, rows_, f.cols_ * g.cols_);
    visit([&](auto ops, const auto& yd) {
        using T = typename decltype(ops)::T;
        const auto& fd = std::get<std::vector<T>>(f.data_);
        const auto& gd = std::get<std::vector<T>>(g.data_);
        auto& od = std::get<std::vector<T>>(out.data_);
        // nonzero entries of each row
        auto rows = [&](const std::vector<T>& d, std::size_t nr, std::size_t nc) {
            std::vector<std::vector<std::pair<std::size_t, T>>> r(nr);
            for (std::size_t i = 0; i < nr; ++i)
                for (std::size_t j = 0; j < nc; ++j)
                    if (!ops.is_zero(d[i * nc + j])) r[i].emplace_back(j, d[i * nc + j]);
            return r;
        };
        auto fr = rows(fd, f.rows_, f.cols_);
        auto gr = rows(gd, g.rows_, g.cols_);
        const std::size_t oc = out.cols_;
        std::vector<std::size_t> fi, gj;
        for (std::size_t i = 0; i < f.rows_; ++i)
            if (!fr[i].empty()) fi.push_back(i);
        for (std::size_t j = 0; j < g.rows_; ++j)
            if (!gr[j].empty()) gj.push_back(j);
        for (std::size_t r = 0; r < rows_; ++r)
            for (auto i : fi) {
                for (auto j : gj) {
                    const T& yv = yd[r * cols_ + i * g.rows_ + j];
                    if (ops.is_zero(yv)) continue;
                    for (const auto& [k, fv] : fr[i]) {
                        T yf = ops.mul(yv, fv);
                        for (const auto& [l, gv] : gr[j]) ops.fma(od[r * oc + k * g.cols_ + l], yf, gv);
                    }
                }
            }
    });
    return out;
}

Matrix Matrix::kron_chain(const std::vector<std::vector<const Matrix*>>& factors) {
    if (factors.empty() || factors.front().empty()) throw ContractViolation("kron_chain: empty factor");
    const Matrix& first = *factors.front().front();
    std::size_t rows = 1, cols = 1;
    for (const auto* m : factors.front()) rows *= m->rows_;
    for (const auto* m : factors.back()) cols *= m->cols_;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
        std::size_t c = 1, r = 1;
        for (const auto* m : factors[k]) c *= m->cols_;
        for (const auto* m : factors[k + 1]) r *= m->rows_;
        if (c != r) throw ContractViolation("kron_chain: inner dimensions differ");
    }
    Matrix out(first.field_, rows, cols);
    out.visit([&](auto ops, auto& od) {
        using T = typename decltype(ops)::T;
        using Sparse = std::vector<std::pair<std::size_t, T>>;
        struct Part {
            std::size_t rows, cols;
            std::vector<Sparse> columns;
        };
        std::vector<std::vector<Part>> parts(factors.size());
        std::size_t scratch_size = rows;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            std::size_t r = 1;
            for (const auto* m : factors[k]) {
                first.require_compatible(*m, "kron_chain");
                const auto& d = std::get<std::vector<T>>(m->data_);
                Part p{m->rows_, m->cols_, std::vector<Sparse>(m->cols_)};
                for (std::size_t i = 0; i < m->rows_; ++i)
                    for (std::size_t j = 0; j < m->cols_; ++j)
                        if (!ops.is_zero(d[i * m->cols_ + j])) p.columns[j].emplace_back(i, d[i * m->cols_ + j]);
                parts[k].push_back(std::move(p));
                r *= m->rows_;
            }
            scratch_size = std::max(scratch_size, r);
        }
        std::vector<T> acc(scratch_size, ops.zero());
        std::vector<char> touched(scratch_size, 0);
        std::vector<std::size_t> order;
        std::vector<std::size_t> sub;
        for (std::size_t j = 0; j < cols; ++j) {
            Sparse cur{{j, ops.one()}};
            for (std::size_t k = factors.size(); k-- > 0;) {
                const auto& ps = parts[k];
                order.clear();
                for (const auto& [idx, v] : cur) {
                    sub.assign(ps.size(), 0);
                    std::size_t rest = idx;
                    for (std::size_t q = ps.size(); q-- > 0;) {
                        sub[q] = rest % ps[q].cols;
                        rest /= ps[q].cols;
                    }
                    // expand the product of the part columns
                    auto expand = [&](auto& self, std::size_t q, std::size_t row, const T& coeff) -> void {
                        if (q == ps.size()) {
                            if (!touched[row]) {
                                touched[row] = 1;
                                order.push_back(row);
                            }
                            acc[row] = ops.add(acc[row], coeff);
                            return;
                        }
                        for (const auto& [i, pv] : ps[q].columns[sub[q]]) self(self, q + 1, row * ps[q].rows + i, ops.mul(coeff, pv));
                    };
                    expand(expand, 0, 0, v);
                }
                cur.clear();
                for (auto row : order) {
                    if (!ops.is_zero(acc[row])) cur.emplace_back(row, acc[row]);
                    acc[row] = ops.zero();
                    touched[row] = 0;
                }
            }
            for (const auto& [i, v] : cur) od[i * cols + j] = v;
        }
    });
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (s.field() != field_) throw ContractViolation("scaled: scalar from a different field");
    Matrix r = *this;
    r.visit([&](auto ops, auto& d) {
        auto v = ops.from(s);
        for (auto& x : d) x = ops.mul(x, v);
    });
    return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
    require_compatible(below, "vstack");
    if (below.cols_ != cols_) throw ContractViolation("vstack: column count mismatch");
    Matrix r(field_, rows_ + below.rows_, cols_);
    r.visit([&](auto, auto& rd) {
        using T = std::decay_t<decltype(rd[0])>;
        const auto& a = std::get<std::vector<T>>(data_);
        const auto& b = std::get<std::vector<T>>(below.data_);
        std::copy(a.begin(), a.end(), rd.begin());
        std::copy(b.begin(), b.end(), rd.begin() + static_cast<std::ptrdiff_t>(a.size()));
    });
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_compatible(o, "multiply");
    if (cols_ != o.rows_)
        throw ContractViolation("multiply: inner dimensions " + std::to_string(cols_) + " and " +
                                std::to_string(o.rows_) + " differ");
    Matrix r(field_, rows_, o.cols_);
    visit([&](auto ops, const auto& d) {
        using T = typename decltype(ops)::T;
        const auto& od = std::get<std::vector<T>>(o.data_);
        auto& rd = std::get<std::vector<T>>(r.data_);
        std::size_t nnz = 0;
        for (const auto& a : d) nnz += !ops.is_zero(a);
        if (nnz <= o.rows_) {
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0; k < cols_; ++k) {
                    const T& a = d[i * cols_ + k];
                    if (ops.is_zero(a)) continue;
                    for (std::size_t j = 0; j < o.cols_; ++j) {
                        const T& b = od[k * o.cols_ + j];
                        if (!ops.is_zero(b)) ops.fma(rd[i * o.cols_ + j], a, b);
                    }
                }
            return;
        }
        // nonzero positions of each row of o
        std::vector<std::size_t> start(o.rows_ + 1, 0), pos;
        for (std::size_t k = 0; k < o.rows_; ++k) {
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!ops.is_zero(od[k * o.cols_ + j])) pos.push_back(j);
            start[k + 1] = pos.size();
        }
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (start[k] == start[k + 1]) continue;
                const T& a = d[i * cols_ + k];
                if (ops.is_zero(a)) continue;
                for (std::size_t q = start[k]; q < start[k + 1]; ++q) {
                    const std::size_t j = pos[q];
                    ops.fma(rd[i * o.cols_ + j], a, od[k * o.cols_ + j]);
                }
            }
    });
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_compatible(o, "add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("add: size mismatch");
    Matrix r = *this;
    r.visit([&](auto ops, auto& rd) {
        using T = typename decltype(ops)::T;
        const auto& od = std::get<std::vector<T>>(o.data_);
        for (std::size_t i = 0; i < rd.size(); ++i) rd[i] = ops.add(rd[i], od[i]);
    });
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_compatible(o, "subtract");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("subtract: size mismatch");
    Matrix r = *this;
    r.visit([&](auto ops, auto& rd) {
        using T = typename decltype(ops)::T;
        const auto& od = std::get<std::vector<T>>(o.data_);
        for (std::size_t i = 0; i < rd.size(); ++i) rd[i] = ops.sub(rd[i], od[i]);
    });
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_difference(const Matrix& o) const {
    require_compatible(o, "compare");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("compare: size mismatch");
    return visit([&](auto, const auto& d) -> std::optional<std::pair<std::size_t, std::size_t>> {
        using T = std::decay_t<decltype(d[0])>;
        const auto& od = std::get<std::vector<T>>(o.data_);
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] != od[i]) return std::make_pair(i / cols_, i % cols_);
        return std::nullopt;
    });
}

namespace {

template <class Ops>
std::vector<std::size_t> rref_in_place(Ops ops, std::vector<typename Ops::T>& d, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && ops.is_zero(d[p * cols + c])) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(d[p * cols + j], d[r * cols + j]);
        auto inv = ops.inv(d[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            if (!ops.is_zero(d[r * cols + j])) d[r * cols + j] = ops.mul(d[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ops.is_zero(d[i * cols + c])) continue;
            auto factor = d[i * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                if (!ops.is_zero(d[r * cols + j])) ops.fms(d[i * cols + j], factor, d[r * cols + j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix::Echelon Matrix::rref() const {
    Echelon e{*this, {}};
    e.pivots = e.reduced.visit([&](auto ops, auto& d) { return rref_in_place(ops, d, rows_, cols_); });
    return e;
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw ContractViolation("inverse: matrix is not square");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    aug.visit([&](auto ops, auto& ad) {
        using T = typename decltype(ops)::T;
        const auto& d = std::get<std::vector<T>>(data_);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) ad[i * 2 * n + j] = d[i * n + j];
            ad[i * 2 * n + n + i] = ops.one();
        }
    });
    auto pivots = aug.visit([&](auto ops, auto& d) { return rref_in_place(ops, d, n, 2 * n); });
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(field_, n, n);
    inv.visit([&](auto, auto& id) {
        using T = std::decay_t<decltype(id[0])>;
        const auto& ad = std::get<std::vector<T>>(aug.data_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) id[i * n + j] = ad[i * 2 * n + n + j];
    });
    if (*this * inv != identity(field_, n)) throw std::logic_error("inverse failed verification");
    return inv;
}

// ---------------------------------------------------------------------------
// Linear systems

std::vector<Vector> kernel_basis(const Matrix& m) {
    auto e = m.rref();
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    const Field& f = m.field();
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, cols);
        v[free] = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (e.reduced.entry_is_zero(r, free)) continue;
            v[e.pivots[r]] = -e.reduced.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw ContractViolation("solve_linear: right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                                std::to_string(m.rows()) + " rows");
    const Field& f = m.field();
    const std::size_t cols = m.cols();
    Matrix aug(f, m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            if (!m.entry_is_zero(i, j)) aug.set(i, j, m.at(i, j));
        aug.set(i, cols, b[i]);
    }
    auto e = aug.rref();

    LinearSolution sol;
    std::vector<std::size_t> pivots;
    bool consistent = true;
    for (auto c : e.pivots) {
        if (c == cols)
            consistent = false;
        else
            pivots.push_back(c);
    }
    sol.rank = pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, cols);
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!e.reduced.entry_is_zero(r, free)) v[pivots[r]] = -e.reduced.at(r, free);
        sol.kernel.push_back(std::move(v));
    }

    if (consistent) {
        Vector x = zero_vector(f, cols);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = e.reduced.at(r, cols);
        if (m.apply(x) != b) throw std::logic_error("solve_linear: particular solution failed substitution");
        sol.particular = std::move(x);
    }
    for (const auto& k : sol.kernel) {
        for (const auto& s : m.apply(k))
            if (!s.is_zero()) throw std::logic_error("solve_linear: kernel vector failed substitution");
    }
    return sol;
}

// ---------------------------------------------------------------------------
// LinMap

LinMap::LinMap(Shape domain, Shape codomain, Matrix m) : dom_(std::move(domain)), cod_(std::move(codomain)), mat_(std::move(m)) {
    if (mat_.rows() != total(cod_) || mat_.cols() != total(dom_))
        throw ContractViolation("LinMap: matrix is " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) +
                                " but shapes are " + shape_string(dom_) + " -> " + shape_string(cod_));
}

LinMap LinMap::identity(const Field& f, const Shape& s) { return LinMap(s, s, Matrix::identity(f, total(s))); }

LinMap LinMap::zero(const Field& f, const Shape& domain, const Shape& codomain) {
    return LinMap(domain, codomain, Matrix(f, total(codomain), total(domain)));
}

LinMap LinMap::permutation(const Field& f, const Shape& domain, const std::vector<std::size_t>& perm) {
    if (perm.size() != domain.size()) throw ContractViolation("permutation: arity mismatch");
    Shape cod(domain.size());
    std::vector<bool> seen(domain.size(), false);
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (perm[j] >= domain.size() || seen[perm[j]]) throw ContractViolation("permutation: not a permutation");
        seen[perm[j]] = true;
        cod[j] = domain[perm[j]];
    }
    const std::size_t n = total(domain);
    Matrix m(f, n, n);
    auto one = f.one();
    std::vector<std::size_t> out(domain.size());
    for (std::size_t in = 0; in < n; ++in) {
        auto idx = unflatten(domain, in);
        for (std::size_t j = 0; j < perm.size(); ++j) out[j] = idx[perm[j]];
        m.set(flatten(cod, out), in, one);
    }
    return LinMap(domain, cod, std::move(m));
}

LinMap LinMap::swap(const Field& f, const Shape& x, const Shape& y) {
    const std::size_t nx = total(x), ny = total(y);
    Matrix m(f, nx * ny, nx * ny);
    auto one = f.one();
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) m.set(j * nx + i, i * ny + j, one);
    return LinMap(concat(x, y), concat(y, x), std::move(m));
}

LinMap LinMap::element(const Field& f, const Shape& s, const Vector& v) {
    if (v.size() != total(s)) throw ContractViolation("element: length mismatch");
    return LinMap({}, s, Matrix::from_columns(f, {v}, v.size()));
}

LinMap LinMap::functional(const Field& f, const Shape& s, const Vector& v) {
    if (v.size() != total(s)) throw ContractViolation("functional: length mismatch");
    return LinMap(s, {}, Matrix::from_rows(f, {v}, v.size()));
}

LinMap LinMap::from_entries(const Field& f, const Shape& domain, const Shape& codomain,
                            const std::function<Scalar(std::size_t, std::size_t)>& entry) {
    Matrix m(f, total(codomain), total(domain));
    for (std::size_t o = 0; o < m.rows(); ++o)
        for (std::size_t i = 0; i < m.cols(); ++i) {
            Scalar s = entry(o, i);
            if (!s.is_zero()) m.set(o, i, s);
        }
    return LinMap(domain, codomain, std::move(m));
}

LinMap LinMap::reshaped(Shape domain, Shape codomain) const { return LinMap(std::move(domain), std::move(codomain), mat_); }

LinMap LinMap::transpose() const { return LinMap(cod_, dom_, mat_.transpose()); }

LinMap LinMap::scaled(const Scalar& s) const { return LinMap(dom_, cod_, mat_.scaled(s)); }

LinMap LinMap::operator*(const LinMap& f) const {
    if (total(f.cod_) != total(dom_))
        throw ContractViolation("compose: " + shape_string(f.cod_) + " does not feed " + shape_string(dom_));
    return LinMap(f.dom_, cod_, mat_ * f.mat_);
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (total(dom_) != total(o.dom_) || total(cod_) != total(o.cod_)) throw ContractViolation("LinMap add: shape mismatch");
    return LinMap(dom_, cod_, mat_ + o.mat_);
}

LinMap LinMap::operator-(const LinMap& o) const {
    if (total(dom_) != total(o.dom_) || total(cod_) != total(o.cod_))
        throw ContractViolation("LinMap subtract: shape mismatch");
    return LinMap(dom_, cod_, mat_ - o.mat_);
}

bool LinMap::operator==(const LinMap& o) const {
    return total(dom_) == total(o.dom_) && total(cod_) == total(o.cod_) && mat_ == o.mat_;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    return LinMap(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()), f.matrix().kron(g.matrix()));
}

LinMap tensor_then(const LinMap& f, const LinMap& g, const LinMap& x) {
    if (total(x.codomain()) != total(f.domain()) * total(g.domain()))
        throw ContractViolation("tensor_then: " + shape_string(x.codomain()) + " does not match " +
                                shape_string(concat(f.domain(), g.domain())));
    return LinMap(x.domain(), concat(f.codomain(), g.codomain()), f.matrix().kron_times(g.matrix(), x.matrix()));
}

LinMap then_tensor(const LinMap& y, const LinMap& f, const LinMap& g) {
    if (total(y.domain()) != total(f.codomain()) * total(g.codomain()))
        throw ContractViolation("then_tensor: " + shape_string(y.domain()) + " does not match " +
                                shape_string(concat(f.codomain(), g.codomain())));
    return LinMap(concat(f.domain(), g.domain()), y.codomain(), y.matrix().times_kron(f.matrix(), g.matrix()));
}

LinMap compose_tensored(std::initializer_list<std::initializer_list<std::reference_wrapper<const LinMap>>> factors) {
    std::vector<std::vector<const Matrix*>> mats;
    for (const auto& f : factors) {
        std::vector<const Matrix*> ms;
        for (const LinMap& p : f) ms.push_back(&p.matrix());
        mats.push_back(std::move(ms));
    }
    if (mats.empty() || mats.back().empty()) throw ContractViolation("compose_tensored: empty factor");
    Shape dom, cod;
    for (const LinMap& p : *factors.begin()) cod = concat(cod, p.codomain());
    for (const LinMap& p : *(factors.end() - 1)) dom = concat(dom, p.domain());
    return LinMap(dom, cod, Matrix::kron_chain(mats));
}

LinMap tensor(std::initializer_list<LinMap> maps) {
    if (maps.size() == 0) throw ContractViolation("tensor: empty product");
    auto it = maps.begin();
    LinMap r = *it++;
    for (; it != maps.end(); ++it) r = tensor(r, *it);
    return r;
}

} // namespace entwine
