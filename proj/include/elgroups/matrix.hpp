#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace elgroups {

/// Dense exact matrix over a catalog ring. Entries are normal forms, so
/// equality is entrywise exact equality and the canonical encoding is a
/// stable hash key. at()/set() are 0-based; the group-theoretic
/// constructors elsewhere use the 1-based indexing of the formulas.
class Matrix {
public:
    Matrix(RingPtr owner, std::size_t rows, std::size_t cols)
        : owner_(std::move(owner)),
          rows_(rows),
          cols_(cols),
          entries_(rows * cols, RingElement::zero(owner_)) {
        if (rows == 0 || cols == 0) throw BadDimension("matrix dimensions must be positive");
    }

    static Matrix identity(const RingPtr& R, std::size_t n) {
        Matrix m(R, n, n);
        const RingElement one = RingElement::one(R);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
        return m;
    }

    /// I + v E_{ij} and friends are assembled from this (0-based here).
    static Matrix unit(const RingPtr& R, std::size_t n, std::size_t i, std::size_t j,
                       const RingElement& v) {
        Matrix m(R, n, n);
        m.set(i, j, v);
        return m;
    }

    const RingPtr& owner() const { return owner_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const RingElement& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw BadIndex("matrix index out of range");
        return entries_[r * cols_ + c];
    }

    void set(std::size_t r, std::size_t c, RingElement v) {
        if (r >= rows_ || c >= cols_) throw BadIndex("matrix index out of range");
        if (!owner_->same_ring(*v.owner()))
            throw OwnerMismatch("matrix entry from a different ring");
        entries_[r * cols_ + c] = std::move(v);
    }

    Matrix operator*(const Matrix& o) const {
        check_owner(o);
        if (cols_ != o.rows_)
            throw BadDimension("matrix product dimension mismatch: " + std::to_string(cols_) +
                               " vs " + std::to_string(o.rows_));
        Matrix r(owner_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const RingElement& a = entries_[i * cols_ + k];
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const RingElement& b = o.entries_[k * o.cols_ + j];
                    if (b.is_zero()) continue;
                    r.entries_[i * o.cols_ + j] = r.entries_[i * o.cols_ + j] + a * b;
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_owner(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw BadDimension("matrix sum dimension mismatch");
        Matrix r(owner_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r(owner_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (!owner_->same_ring(*o.owner_)) return false;
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(owner_, rows_);
    }

    Matrix transpose() const {
        Matrix r(owner_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
        return r;
    }

    /// Conjugate transpose (x_ij)* = (x_ji*); an anti-automorphism of M_n(R).
    Matrix star() const {
        Matrix r(owner_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j).star());
        return r;
    }

    Matrix scaled_left(const RingElement& s) const {
        Matrix r(owner_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = s * entries_[i];
        return r;
    }

    Matrix scaled_right(const RingElement& s) const {
        Matrix r(owner_, rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
        return r;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
        if (r0 + h > rows_ || c0 + w > cols_) throw BadIndex("block out of range");
        Matrix b(owner_, h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) b.set(i, j, at(r0 + i, c0 + j));
        return b;
    }

    static Matrix from_quadrants(const Matrix& a, const Matrix& b, const Matrix& c,
                                 const Matrix& d) {
        const std::size_t n = a.rows();
        if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n ||
            c.cols() != n || d.rows() != n || d.cols() != n)
            throw BadDimension("quadrants must be equal square blocks");
        Matrix m(a.owner(), 2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.set(i, j, a.at(i, j));
                m.set(i, n + j, b.at(i, j));
                m.set(n + i, j, c.at(i, j));
                m.set(n + i, n + j, d.at(i, j));
            }
        return m;
    }

    static Matrix direct_sum(const Matrix& a, const Matrix& b) {
        if (!a.owner()->same_ring(*b.owner()))
            throw OwnerMismatch("direct sum of matrices over distinct rings");
        Matrix m(a.owner(), a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.set(a.rows() + i, a.cols() + j, b.at(i, j));
        return m;
    }

    std::string encode() const {
        std::string out;
        detail::encode_u64(out, rows_);
        detail::encode_u64(out, cols_);
        for (const auto& e : entries_) e.encode(out);
        return out;
    }

    /// Stable digest of the canonical encoding; equal matrices hash equal.
    std::uint64_t canonical_hash() const { return detail::fnv1a(encode()); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " ";
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += at(i, j).str();
            }
            s += "]";
            s += i + 1 == rows_ ? "]" : "\n";
        }
        return s;
    }

private:
    void check_owner(const Matrix& o) const {
        if (owner_.get() != o.owner_.get() && !owner_->same_ring(*o.owner_))
            throw OwnerMismatch("matrices over distinct rings");
    }

    RingPtr owner_;
    std::size_t rows_, cols_;
    std::vector<RingElement> entries_;
};

/// An invertible matrix travelling with a formula-provided inverse. General
/// rings have no inversion algorithm, so inverses are never computed, only
/// carried and composed. The checked constructor rejects wrong pairs.
class GroupElement {
public:
    GroupElement(Matrix value, Matrix inverse)
        : value_(std::move(value)), inverse_(std::move(inverse)) {
        if (value_.rows() != value_.cols() || inverse_.rows() != inverse_.cols() ||
            value_.rows() != inverse_.rows())
            throw BadDimension("group element requires square value/inverse of equal size");
        if (!(value_ * inverse_).is_identity() || !(inverse_ * value_).is_identity())
            throw BadInverse("value * inverse is not the identity (both sides required)");
    }

    static GroupElement identity(const RingPtr& R, std::size_t n) {
        Matrix i = Matrix::identity(R, n);
        return GroupElement(i, i, Trusted{});
    }

    const Matrix& value() const { return value_; }
    const Matrix& inverse() const { return inverse_; }
    std::size_t dim() const { return value_.rows(); }

    GroupElement operator*(const GroupElement& o) const {
        return GroupElement(value_ * o.value_, o.inverse_ * inverse_, Trusted{});
    }

    GroupElement inverted() const { return GroupElement(inverse_, value_, Trusted{}); }

    bool operator==(const GroupElement& o) const { return value_ == o.value_; }
    bool operator!=(const GroupElement& o) const { return value_ != o.value_; }

    bool is_identity() const { return value_.is_identity(); }

    GroupElement pow(long k) const {
        GroupElement base = k < 0 ? inverted() : *this;
        unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
        GroupElement acc = identity(value_.owner(), dim());
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

private:
    struct Trusted {};
    GroupElement(Matrix value, Matrix inverse, Trusted)
        : value_(std::move(value)), inverse_(std::move(inverse)) {}

    Matrix value_, inverse_;

    friend GroupElement trusted_group_element(Matrix, Matrix);
};

/// Internal: wrap an algebraically guaranteed (value, inverse) pair without
/// the construction-time product check.
inline GroupElement trusted_group_element(Matrix value, Matrix inverse) {
    return GroupElement(std::move(value), std::move(inverse), GroupElement::Trusted{});
}

/// [g,h] = g h g^{-1} h^{-1}, with its inverse h g h^{-1} g^{-1}.
inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
    if (g.dim() != h.dim()) throw BadDimension("commutator of unequal dimensions");
    Matrix v = g.value() * h.value() * g.inverse() * h.inverse();
    Matrix w = h.value() * g.value() * h.inverse() * g.inverse();
    return trusted_group_element(std::move(v), std::move(w));
}

/// g x g^{-1}.
inline GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
    if (g.dim() != x.dim()) throw BadDimension("conjugation of unequal dimensions");
    Matrix v = g.value() * x.value() * g.inverse();
    Matrix w = g.value() * x.inverse() * g.inverse();
    return trusted_group_element(std::move(v), std::move(w));
}

/// diag(A, B) with the inverse diag(A^{-1}, B^{-1}).
inline GroupElement block_diag(const GroupElement& a, const GroupElement& b) {
    return trusted_group_element(Matrix::direct_sum(a.value(), b.value()),
                                 Matrix::direct_sum(a.inverse(), b.inverse()));
}

}  // namespace elgroups
