#include "pin2/f2.hpp"

#include <algorithm>

#include "pin2/errors.hpp"

namespace pin2 {

F2Vec f2_add(const F2Vec& a, const F2Vec& b) {
    F2Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else if (b[j] < a[i]) {
            out.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

F2Vec f2_collect(std::vector<int32_t> terms) {
    std::sort(terms.begin(), terms.end());
    F2Vec out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), words_(rows * words_per_row_, 0) {}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    return (words_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    uint64_t& w = words_[r * words_per_row_ + c / 64];
    uint64_t mask = uint64_t(1) << (c % 64);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

void F2Matrix::flip(std::size_t r, std::size_t c) {
    words_[r * words_per_row_ + c / 64] ^= uint64_t(1) << (c % 64);
}

void F2Matrix::set_column(std::size_t c, const F2Vec& support) {
    for (int32_t r : support) set(static_cast<std::size_t>(r), c, true);
}

F2Matrix F2Matrix::multiplied_by(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidInputError("matrix product dimension mismatch");
    F2Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        uint64_t* dst = &out.words_[i * out.words_per_row_];
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(i, k)) continue;
            const uint64_t* src = &rhs.words_[k * rhs.words_per_row_];
            for (std::size_t w = 0; w < rhs.words_per_row_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

bool F2Matrix::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

std::size_t rank(const F2Matrix& m) {
    F2Matrix a = m;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols_ && pivot_row < a.rows_; ++c) {
        std::size_t r = pivot_row;
        while (r < a.rows_ && !a.get(r, c)) ++r;
        if (r == a.rows_) continue;
        if (r != pivot_row) {
            for (std::size_t w = 0; w < a.words_per_row_; ++w)
                std::swap(a.words_[r * a.words_per_row_ + w],
                          a.words_[pivot_row * a.words_per_row_ + w]);
        }
        const uint64_t* piv = &a.words_[pivot_row * a.words_per_row_];
        for (std::size_t r2 = pivot_row + 1; r2 < a.rows_; ++r2) {
            if (!a.get(r2, c)) continue;
            uint64_t* dst = &a.words_[r2 * a.words_per_row_];
            for (std::size_t w = 0; w < a.words_per_row_; ++w) dst[w] ^= piv[w];
        }
        ++pivot_row;
    }
    return pivot_row;
}

bool in_image(const F2Matrix& m, const F2Vec& v) {
    for (int32_t r : v) {
        if (r < 0 || static_cast<std::size_t>(r) >= m.rows())
            throw InvalidInputError("in_image: vector length does not match row count");
    }
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
    aug.set_column(m.cols(), v);
    return rank(aug) == rank(m);
}

long long homology_dim(const F2Matrix& boundary_in, const F2Matrix& boundary_out) {
    if (boundary_in.rows() != boundary_out.cols())
        throw InvalidInputError("homology_dim: chain group dimensions do not match");
    if (!boundary_out.multiplied_by(boundary_in).is_zero())
        throw InvalidInputError("homology_dim: boundary composition is nonzero");
    long long kernel = static_cast<long long>(boundary_out.cols()) -
                       static_cast<long long>(rank(boundary_out));
    return kernel - static_cast<long long>(rank(boundary_in));
}

namespace {

// Reduce one column against the recorded pivots. The working buffer must be
// all zero on entry and is restored to all zero before returning.
// Returns the fully reduced column through `out`; true means reduced to zero.
bool reduce_column(const F2Vec& col, std::vector<uint64_t>& buf,
                   const std::vector<int32_t>& pivot_owner,
                   const std::vector<F2Vec>& reduced, F2Vec& out) {
    out.clear();
    if (col.empty()) return true;
    for (int32_t r : col) buf[r / 64] ^= uint64_t(1) << (r % 64);
    int64_t low_word = col.back() / 64;
    for (;;) {
        while (low_word >= 0 && buf[low_word] == 0) --low_word;
        if (low_word < 0) return true;
        int32_t low = static_cast<int32_t>(low_word * 64 + 63 - __builtin_clzll(buf[low_word]));
        int32_t owner = pivot_owner[low];
        if (owner < 0) {
            for (int64_t w = low_word; w >= 0; --w) {
                uint64_t bits = buf[w];
                buf[w] = 0;
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    out.push_back(static_cast<int32_t>(w * 64 + b));
                }
            }
            std::sort(out.begin(), out.end());
            return false;
        }
        for (int32_t r : reduced[owner]) buf[r / 64] ^= uint64_t(1) << (r % 64);
    }
}

}  // namespace

bool in_image_sparse(std::size_t rows, const std::vector<F2Vec>& columns, const F2Vec& v) {
    std::vector<int32_t> pivot_owner(rows, -1);
    std::vector<F2Vec> reduced;
    reduced.reserve(columns.size());
    std::vector<uint64_t> buf((rows + 63) / 64, 0);
    F2Vec work;
    for (const F2Vec& col : columns) {
        if (reduce_column(col, buf, pivot_owner, reduced, work)) continue;
        pivot_owner[work.back()] = static_cast<int32_t>(reduced.size());
        reduced.push_back(work);
    }
    return reduce_column(v, buf, pivot_owner, reduced, work);
}

}  // namespace pin2
