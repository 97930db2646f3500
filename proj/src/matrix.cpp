#include "qlab/matrix.hpp"

#include <algorithm>

namespace qlab {

Operator::Operator(long long base_q, std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels)
    : base_q_(base_q), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      e_(row_labels_.size() * col_labels_.size(), ExactScalar::zero(base_q)) {}

Operator Operator::identity(long long base_q, const std::vector<std::string>& labels) {
    Operator I(base_q, labels, labels);
    ExactScalar one = ExactScalar::one(base_q);
    for (int i = 0; i < I.rows(); ++i) I.set(i, i, one);
    return I;
}

void Operator::set(int i, int j, ExactScalar v) {
    if (v.base() != base_q_) throw BaseMismatch("Operator::set: scalar base mismatch");
    e_[static_cast<size_t>(i) * cols() + j] = std::move(v);
}

void Operator::add_to(int i, int j, const ExactScalar& v) {
    e_[static_cast<size_t>(i) * cols() + j] += v;
}

Operator Operator::operator*(const Operator& o) const {
    if (base_q_ != o.base_q_) throw BaseMismatch("Operator product: base mismatch");
    if (cols() != o.rows()) throw DimensionMismatch("Operator product: inner dimensions differ");
    Operator r(base_q_, row_labels_, o.col_labels_);
    const int n = rows(), m = o.cols(), inner = cols();
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < inner; ++k) {
            const ExactScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                const ExactScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.add_to(i, j, a * b);
            }
        }
    }
    return r;
}

Operator Operator::operator+(const Operator& o) const {
    if (rows() != o.rows() || cols() != o.cols())
        throw DimensionMismatch("Operator sum: shape mismatch");
    Operator r = *this;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) r.add_to(i, j, o.at(i, j));
    return r;
}

Operator Operator::operator-(const Operator& o) const {
    if (rows() != o.rows() || cols() != o.cols())
        throw DimensionMismatch("Operator difference: shape mismatch");
    Operator r = *this;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) r.add_to(i, j, -o.at(i, j));
    return r;
}

Operator Operator::scaled(const ExactScalar& s) const {
    Operator r(base_q_, row_labels_, col_labels_);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (!at(i, j).is_zero()) r.set(i, j, at(i, j) * s);
    return r;
}

Operator Operator::transpose() const {
    Operator r(base_q_, col_labels_, row_labels_);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) r.set(j, i, at(i, j));
    return r;
}

bool Operator::operator==(const Operator& o) const {
    if (base_q_ != o.base_q_ || rows() != o.rows() || cols() != o.cols()) return false;
    for (size_t t = 0; t < e_.size(); ++t)
        if (e_[t] != o.e_[t]) return false;
    return true;
}

bool Operator::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

int Operator::nonzero_count() const {
    int c = 0;
    for (const auto& v : e_) c += !v.is_zero();
    return c;
}

std::optional<std::pair<int, int>> Operator::first_nonzero() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<ExactScalar> Operator::col(int j) const {
    std::vector<ExactScalar> v;
    v.reserve(rows());
    for (int i = 0; i < rows(); ++i) v.push_back(at(i, j));
    return v;
}

std::vector<double> Operator::eval_dense() const {
    std::vector<double> r(e_.size());
    for (size_t t = 0; t < e_.size(); ++t) r[t] = e_[t].eval();
    return r;
}

QMat QMat::identity(int n) {
    QMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("QMat product: inner dimensions differ");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    QMat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    QMat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

QMat QMat::scaled(const Rational& s) const {
    QMat r = *this;
    for (auto& v : r.e_) v *= s;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMat QMat::hadamard(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("QMat hadamard: shape mismatch");
    QMat r(rows_, cols_);
    for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * o.e_[t];
    return r;
}

bool QMat::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

Rational QMat::trace() const {
    Rational t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("QMat inverse: not square");
    int n = rows_;
    QMat A = *this;
    QMat I = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (A.at(row, col) != 0) { piv = row; break; }
        if (piv < 0) throw SingularP("QMat::inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(A.at(col, j), A.at(piv, j));
                std::swap(I.at(col, j), I.at(piv, j));
            }
        Rational d = A.at(col, col);
        for (int j = 0; j < n; ++j) {
            A.at(col, j) /= d;
            I.at(col, j) /= d;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            Rational f = A.at(row, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                A.at(row, j) -= f * A.at(col, j);
                I.at(row, j) -= f * I.at(col, j);
            }
        }
    }
    return I;
}

int QMat::rank() const {
    QMat A = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int row = r; row < rows_; ++row)
            if (A.at(row, col) != 0) { piv = row; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(A.at(r, j), A.at(piv, j));
        Rational d = A.at(r, col);
        for (int j = 0; j < cols_; ++j) A.at(r, j) /= d;
        for (int row = 0; row < rows_; ++row) {
            if (row == r) continue;
            Rational f = A.at(row, col);
            if (f == 0) continue;
            for (int j = 0; j < cols_; ++j) A.at(row, j) -= f * A.at(r, j);
        }
        ++r;
    }
    return r;
}

IMat mul(const BinMat& a, const BinMat& b) {
    const int n = a.size();
    if (n != b.size()) throw DimensionMismatch("BinMat product: size mismatch");
    IMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (!a.at(i, k)) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += b.at(k, j);
        }
    return r;
}

IMat to_imat(const BinMat& a) {
    IMat r(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) = a.at(i, j);
    return r;
}

QMat to_qmat(const BinMat& a) {
    QMat r(a.size(), a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) = a.at(i, j);
    return r;
}

QMat to_qmat(const IMat& a) {
    QMat r(a.size(), a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) = a.at(i, j);
    return r;
}

Operator to_operator(const QMat& a, long long base_q, const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels) {
    Operator r(base_q, row_labels, col_labels);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) r.set(i, j, ExactScalar::from_rational(base_q, a.at(i, j)));
    return r;
}

Operator to_operator(const BinMat& a, long long base_q, const std::vector<std::string>& labels) {
    Operator r(base_q, labels, labels);
    ExactScalar one = ExactScalar::one(base_q);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.at(i, j)) r.set(i, j, one);
    return r;
}

} // namespace qlab
