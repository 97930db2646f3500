#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlab/exact_scalar.hpp"

namespace qlab {

/// Dense matrix of exact scalars with labeled row/column index sets.
/// All entries share one base_q; labels follow the deterministic orderings of
/// the producing module.
class Operator {
public:
    Operator(long long base_q, std::vector<std::string> row_labels,
             std::vector<std::string> col_labels);
    static Operator identity(long long base_q, const std::vector<std::string>& labels);

    long long base() const { return base_q_; }
    int rows() const { return static_cast<int>(row_labels_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    const ExactScalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols() + j]; }
    void set(int i, int j, ExactScalar v);
    void add_to(int i, int j, const ExactScalar& v);

    Operator operator*(const Operator& o) const;
    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator scaled(const ExactScalar& s) const;
    Operator transpose() const;
    bool operator==(const Operator& o) const;
    bool is_zero() const;
    int nonzero_count() const;

    /// First nonzero position if any (for witnesses).
    std::optional<std::pair<int, int>> first_nonzero() const;

    /// Column j as a vector of scalars.
    std::vector<ExactScalar> col(int j) const;

    std::vector<double> eval_dense() const; // row-major doubles

private:
    long long base_q_;
    std::vector<std::string> row_labels_, col_labels_;
    std::vector<ExactScalar> e_;
};

/// Dense rational matrix (no labels); workhorse for scheme computations.
class QMat {
public:
    QMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat scaled(const Rational& r) const;
    QMat transpose() const;
    /// Entrywise product.
    QMat hadamard(const QMat& o) const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && e_ == o.e_; }
    bool is_zero() const;
    Rational trace() const;
    /// Exact inverse by Gauss-Jordan; throws SingularP when singular.
    QMat inverse() const;
    int rank() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// Dense 0/1 matrix, byte entries.
class BinMat {
public:
    explicit BinMat(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {}
    int size() const { return n_; }
    uint8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, uint8_t v) { e_[static_cast<size_t>(i) * n_ + j] = v; }
    bool operator==(const BinMat& o) const { return n_ == o.n_ && e_ == o.e_; }
    const std::vector<uint8_t>& raw() const { return e_; }

private:
    int n_;
    std::vector<uint8_t> e_;
};

/// Dense integer matrix for products of 0/1 matrices.
class IMat {
public:
    explicit IMat(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {}
    int size() const { return n_; }
    long long at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    long long& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    bool operator==(const IMat& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    int n_;
    std::vector<long long> e_;
};

IMat mul(const BinMat& a, const BinMat& b);
IMat to_imat(const BinMat& a);
QMat to_qmat(const BinMat& a);
QMat to_qmat(const IMat& a);
Operator to_operator(const QMat& a, long long base_q, const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels);
Operator to_operator(const BinMat& a, long long base_q, const std::vector<std::string>& labels);

} // namespace qlab
