#include "silt/exactmat.hpp"

#include <algorithm>

#include "silt/kernels.hpp"

namespace silt {

Matrix::Matrix(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(f), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        for (auto x : r) data_.push_back(f.reduce(x));
    }
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw Error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        std::copy_n(data_.begin() + (r0 + r) * cols_ + c0, nc, b.data_.begin() + r * nc);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        std::copy_n(b.data_.begin() + r * b.cols_, b.cols_, data_.begin() + (r0 + r) * cols_ + c0);
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix s(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(r, j) = at(r, cols[j]);
    return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    if (o.cols_ == 0) return out;
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar* dst = out.data_.data() + i * o.cols_;
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = at(i, k);
            if (a != 0) kernels::axpy(dst, o.data_.data() + k * o.cols_, o.cols_, a, field_);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    Matrix out = *this;
    kernels::axpy(out.data_.data(), o.data_.data(), data_.size(), 1, field_);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    Matrix out = *this;
    kernels::axpy(out.data_.data(), o.data_.data(), data_.size(), field_.neg(1), field_);
    return out;
}

Matrix Matrix::scaled(Scalar s) const {
    Matrix out = *this;
    if (s == 0) std::fill(out.data_.begin(), out.data_.end(), 0);
    else kernels::scale(out.data_.data(), out.data_.size(), s, field_);
    return out;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += static_cast<std::uint64_t>(at(r, c)) * v[c];
            if ((c & 7) == 7) acc %= field_.prime();
        }
        out[r] = static_cast<Scalar>(acc % field_.prime());
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error("hstack row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error("vstack column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

RrefResult rref(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t r = lead;
        while (r < m.rows() && m.at(r, c) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != lead) {
            auto a = m.row(r), b = m.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = m.row(lead);
        kernels::scale(prow.data() + c, m.cols() - c, f.inv(prow[c]), f);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead) continue;
            Scalar x = m.at(i, c);
            if (x != 0) kernels::axpy(m.row(i).data() + c, prow.data() + c, m.cols() - c, f.neg(x), f);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error("solve_right: row count mismatch");
    const Field& f = a.field();
    auto [form, pivots] = rref(hstack(a, b));
    Matrix x(f, a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = form.at(i, a.cols() + j);
    }
    return x;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    auto [form, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(form.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix cokernel_projection(const Matrix& cols) {
    auto ann = kernel_basis(cols.transpose());
    Matrix q(cols.field(), ann.size(), cols.rows());
    for (std::size_t i = 0; i < ann.size(); ++i)
        for (std::size_t j = 0; j < cols.rows(); ++j) q.at(i, j) = ann[i][j];
    return q;
}

std::vector<std::size_t> complement_units(const Matrix& sub, std::size_t dim) {
    const Field& f = sub.field();
    Matrix acc = sub.transpose();
    if (acc.rows() == 0) acc = Matrix(f, 0, dim);
    std::size_t r = rank(acc);
    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < dim && r < dim; ++i) {
        Matrix unit(f, 1, dim);
        unit.at(0, i) = 1;
        Matrix trial = vstack(acc, unit);
        std::size_t r2 = rank(trial);
        if (r2 > r) {
            acc = std::move(trial);
            r = r2;
            added.push_back(i);
        }
    }
    return added;
}

std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    __int128 sign = 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("determinant of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[s], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

} // namespace silt
