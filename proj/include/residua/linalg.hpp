#pragma once

#include <optional>
#include <vector>

#include "residua/field.hpp"

namespace residua {

// Dense matrix over an exact field. GF(p) entries are kept in machine words
// so degreewise homology checks stay fast; QQ falls back to big rationals.
class Mat {
public:
    Mat() = default;
    Mat(const Field& f, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Rat get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rat& v);
    void add_to(std::size_t i, std::size_t j, const Rat& v);

    std::size_t rank() const;
    // Basis of {x : A x = 0}, one solution per column.
    Mat kernel() const;
    // Reduced row echelon form; pivot column indices appended to *pivots.
    Mat rref(std::vector<std::size_t>* pivots = nullptr) const;
    // One solution of A x = b, if any.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    // Indices of a maximal independent subset of the rows, scanned in order.
    std::vector<std::size_t> independent_rows() const;

    Mat transpose() const;
    Mat times(const Mat& o) const;
    Mat augmented(const Mat& right) const;
    Mat stacked(const Mat& below) const;

    bool is_zero() const;

private:
    Field field_ = Field::rationals();
    std::size_t rows_ = 0, cols_ = 0;
    bool modular_ = false;
    std::vector<long long> zp_;
    std::vector<Rat> qq_;

    long long p_ = 0;
    long long& z(std::size_t i, std::size_t j) { return zp_[i * cols_ + j]; }
    long long zc(std::size_t i, std::size_t j) const { return zp_[i * cols_ + j]; }
    Rat& q(std::size_t i, std::size_t j) { return qq_[i * cols_ + j]; }
    const Rat& qc(std::size_t i, std::size_t j) const { return qq_[i * cols_ + j]; }

    friend struct MatOps;
};

} // namespace residua
