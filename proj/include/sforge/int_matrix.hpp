#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace sforge {

/* Dense row-major integer matrix, sized for desk-scale multiplicity data. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    std::int64_t at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const std::vector<std::int64_t>& flat() const { return data_; }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool is_zero() const {
        for (auto v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols() == b.rows());
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

/* acc += c * m */
inline void add_scaled(IntMatrix& acc, std::int64_t c, const IntMatrix& m) {
    assert(acc.rows() == m.rows() && acc.cols() == m.cols());
    if (c == 0) return;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) acc.at(i, j) += c * m.at(i, j);
}

}
