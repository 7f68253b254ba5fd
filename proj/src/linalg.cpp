#include "residua/linalg.hpp"

#include <algorithm>

namespace residua {

namespace {

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}

// Row echelon core, templated over the scalar policy.
template <class T, class Ops>
struct Gauss {
    std::size_t rows, cols;
    std::vector<T>& a;
    const Ops& ops;

    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    // Returns pivot (row, col) pairs. Leaves the matrix in rref.
    std::vector<std::pair<std::size_t, std::size_t>> rref() {
        std::vector<std::pair<std::size_t, std::size_t>> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t sel = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (!ops.is_zero(at(i, c))) { sel = i; break; }
            if (sel == rows) continue;
            if (sel != r)
                for (std::size_t j = c; j < cols; ++j) std::swap(at(sel, j), at(r, j));
            T inv = ops.inv(at(r, c));
            for (std::size_t j = c; j < cols; ++j) at(r, j) = ops.mul(at(r, j), inv);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || ops.is_zero(at(i, c))) continue;
                T f = at(i, c);
                for (std::size_t j = c; j < cols; ++j)
                    at(i, j) = ops.sub(at(i, j), ops.mul(f, at(r, j)));
            }
            pivots.emplace_back(r, c);
            ++r;
        }
        return pivots;
    }
};

struct ZpOps {
    long long p;
    using T = long long;
    bool is_zero(T v) const { return v == 0; }
    T mul(T a, T b) const { return (__int128)a * b % p; }
    T sub(T a, T b) const { T r = a - b; return r < 0 ? r + p : r; }
    T inv(T a) const { return pow_mod(a, p - 2, p); }
};

struct QQOps {
    using T = Rat;
    bool is_zero(const T& v) const { return v.is_zero(); }
    T mul(const T& a, const T& b) const { return a * b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T inv(const T& a) const { return 1 / a; }
};

} // namespace

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), modular_(f.kind() == FieldKind::PrimeField) {
    if (modular_) {
        p_ = (long long)f.characteristic();
        zp_.assign(rows * cols, 0);
    } else {
        qq_.assign(rows * cols, Rat(0));
    }
}

Rat Mat::get(std::size_t i, std::size_t j) const {
    check(i < rows_ && j < cols_, "matrix index");
    return modular_ ? Rat(zc(i, j)) : qc(i, j);
}

void Mat::set(std::size_t i, std::size_t j, const Rat& v) {
    check(i < rows_ && j < cols_, "matrix index");
    if (modular_) {
        Rat r = field_.reduce(v);
        z(i, j) = (long long)numerator(r);
    } else {
        q(i, j) = v;
    }
}

void Mat::add_to(std::size_t i, std::size_t j, const Rat& v) {
    if (modular_) {
        Rat r = field_.reduce(v);
        z(i, j) = (z(i, j) + (long long)numerator(r)) % p_;
    } else {
        q(i, j) += v;
    }
}

namespace {

template <class T, class Ops>
std::vector<std::pair<std::size_t, std::size_t>> run_rref(std::vector<T>& data,
                                                          std::size_t rows, std::size_t cols,
                                                          const Ops& ops) {
    Gauss<T, Ops> g{rows, cols, data, ops};
    return g.rref();
}

} // namespace

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
    Mat r = *this;
    std::vector<std::pair<std::size_t, std::size_t>> pv;
    if (modular_) pv = run_rref(r.zp_, rows_, cols_, ZpOps{p_});
    else pv = run_rref(r.qq_, rows_, cols_, QQOps{});
    if (pivots)
        for (auto& [ri, ci] : pv) pivots->push_back(ci);
    return r;
}

std::size_t Mat::rank() const {
    Mat tmp = *this;
    if (modular_) return run_rref(tmp.zp_, rows_, cols_, ZpOps{p_}).size();
    return run_rref(tmp.qq_, rows_, cols_, QQOps{}).size();
}

Mat Mat::kernel() const {
    std::vector<std::size_t> pivots;
    Mat R = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(field_, cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        K.set(fc, k, Rat(1));
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            Rat v = R.get(pi, fc);
            if (!v.is_zero()) K.set(pivots[pi], k, field_.neg(v));
        }
    }
    return K;
}

std::optional<std::vector<Rat>> Mat::solve(const std::vector<Rat>& b) const {
    check(b.size() == rows_, "solve dimension");
    Mat aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, get(i, j));
        aug.set(i, cols_, b[i]);
    }
    std::vector<std::size_t> pivots;
    Mat R = aug.rref(&pivots);
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == cols_) return std::nullopt; // inconsistent
        x[pivots[pi]] = R.get(pi, cols_);
    }
    return x;
}

std::vector<std::size_t> Mat::independent_rows() const {
    // Rank-growth scan over the transpose's columns == rows here.
    Mat t = transpose();
    std::vector<std::size_t> pivots;
    t.rref(&pivots);
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (modular_) r.z(j, i) = zc(i, j);
            else r.q(j, i) = qc(i, j);
    return r;
}

Mat Mat::times(const Mat& o) const {
    check(cols_ == o.rows_, "matrix product shape");
    Mat r(field_, rows_, o.cols_);
    if (modular_) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                long long v = zc(i, k);
                if (!v) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.z(i, j) = (r.z(i, j) + (__int128)v * o.zc(k, j)) % p_;
            }
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& v = qc(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!o.qc(k, j).is_zero()) r.q(i, j) += v * o.qc(k, j);
            }
    }
    return r;
}

Mat Mat::augmented(const Mat& right) const {
    check(rows_ == right.rows_, "augment shape");
    Mat r(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, get(i, j));
        for (std::size_t j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.get(i, j));
    }
    return r;
}

Mat Mat::stacked(const Mat& below) const {
    check(cols_ == below.cols_, "stack shape");
    Mat r(field_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, get(i, j));
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.get(i, j));
    return r;
}

bool Mat::is_zero() const {
    if (modular_) {
        for (auto v : zp_) if (v) return false;
        return true;
    }
    for (const auto& v : qq_) if (!v.is_zero()) return false;
    return true;
}

} // namespace residua
