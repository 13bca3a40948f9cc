#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pin2 {

// Support of an F2 vector: sorted, duplicate-free indices.
using F2Vec = std::vector<int32_t>;

// Symmetric difference (addition over F2).
F2Vec f2_add(const F2Vec& a, const F2Vec& b);

// Toggle a list of (possibly repeated) indices into sorted support form.
F2Vec f2_collect(std::vector<int32_t> terms);

// Dense bit-packed matrix over F2, row-major storage.
//
// Row reduction is deterministic: pivots are chosen leftmost-column first,
// lowest row index first, so every result downstream is reproducible
// bit-for-bit.
class F2Matrix {
  public:
    F2Matrix() : rows_(0), cols_(0), words_per_row_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    // Column c gets the given support over row indices.
    void set_column(std::size_t c, const F2Vec& support);

    F2Matrix multiplied_by(const F2Matrix& rhs) const;
    bool is_zero() const;

  private:
    friend std::size_t rank(const F2Matrix&);
    std::size_t rows_, cols_, words_per_row_;
    std::vector<uint64_t> words_;
};

std::size_t rank(const F2Matrix& m);

// True iff v lies in the column span of m; decided by comparing rank(m)
// with rank of m augmented by v. v is given by its support over row indices.
bool in_image(const F2Matrix& m, const F2Vec& v);

// dim ker(boundary_out) - rank(boundary_in) for one degree of a chain
// complex. Throws InvalidInputError when the composite is nonzero or the
// dimensions do not line up.
long long homology_dim(const F2Matrix& boundary_in, const F2Matrix& boundary_out);

// Membership test for large sparse systems: is v in the span of the given
// columns? Deterministic left-to-right column elimination with a dense
// working buffer; answers agree with in_image on the dense path.
bool in_image_sparse(std::size_t rows, const std::vector<F2Vec>& columns, const F2Vec& v);

}  // namespace pin2
