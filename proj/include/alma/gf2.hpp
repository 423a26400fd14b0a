#pragma once

// Linear algebra over the two-element field.
//
// Dense vectors pack 64 bits per machine word; the bits past size() in the
// last word are always zero, so equality and hashing can compare words.
// Sparse rows list the 1-based columns holding a one, e.g. the dense row
// 0 1 0 0 0 1 is the sparse row {2, 6}.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace alma {

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t size);

    static Gf2Vector fromBits(std::initializer_list<int> bits);
    static Gf2Vector fromBits(std::span<const int> bits);
    /// Parses a string such as "101"; any other character is rejected.
    static Gf2Vector fromString(std::string_view bits);
    static Gf2Vector unit(std::size_t size, std::size_t index);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    [[nodiscard]] bool operator[](std::size_t i) const { return get(i); }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    [[nodiscard]] bool isZero() const;
    [[nodiscard]] std::size_t popcount() const;
    /// Index of the lowest set bit, or size() when zero.
    [[nodiscard]] std::size_t lowestSetBit() const;
    /// Copy grown or truncated to `size` bits.
    [[nodiscard]] Gf2Vector resized(std::size_t size) const;

    Gf2Vector& operator^=(const Gf2Vector& other);
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
    friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) = default;

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }
    /// Bits as '0'/'1' characters, most significant index last ("100" is e1).
    [[nodiscard]] std::string toString() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Gf2VectorHash {
    std::size_t operator()(const Gf2Vector& v) const noexcept;
};

/// XOR of pairwise ANDs. Throws std::invalid_argument on length mismatch.
[[nodiscard]] bool dot(const Gf2Vector& a, const Gf2Vector& b);

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix fromRows(std::initializer_list<std::initializer_list<int>> rows);
    static Gf2Matrix fromRows(std::vector<Gf2Vector> rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool at(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    [[nodiscard]] const Gf2Vector& row(std::size_t r) const { return data_[r]; }
    void setRow(std::size_t r, Gf2Vector v);
    [[nodiscard]] Gf2Vector column(std::size_t c) const;

    [[nodiscard]] Gf2Matrix transposed() const;
    [[nodiscard]] bool isIdentity() const;
    /// Fraction of entries equal to one.
    [[nodiscard]] double density() const;

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gf2Vector> data_;
};

[[nodiscard]] Gf2Matrix matMul(const Gf2Matrix& a, const Gf2Matrix& b);
/// Row vector times matrix, v·m.
[[nodiscard]] Gf2Vector mulLeft(const Gf2Vector& v, const Gf2Matrix& m);
/// Matrix times column vector, m·x.
[[nodiscard]] Gf2Vector mulRight(const Gf2Matrix& m, const Gf2Vector& x);
[[nodiscard]] std::size_t rank(const Gf2Matrix& m);
[[nodiscard]] bool isInvertible(const Gf2Matrix& m);
/// Solves m·x = rhs. Free variables are zero; nullopt when inconsistent.
[[nodiscard]] std::optional<Gf2Vector> solveLinear(const Gf2Matrix& m, const Gf2Vector& rhs);
[[nodiscard]] std::optional<Gf2Matrix> inverse(const Gf2Matrix& m);

// ---------------------------------------------------------------------------
// Sparse representation

struct SparseRow {
    std::vector<std::uint32_t> cols;  // 1-based, strictly increasing

    static SparseRow fromDense(const Gf2Vector& v);
    [[nodiscard]] Gf2Vector toDense(std::size_t width) const;
    [[nodiscard]] bool contains(std::uint32_t col) const;
    SparseRow& operator^=(const SparseRow& other);
    friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

[[nodiscard]] bool dot(const SparseRow& a, const SparseRow& b);

class SparseGf2Matrix {
public:
    SparseGf2Matrix() = default;
    SparseGf2Matrix(std::size_t rows, std::size_t cols);

    static SparseGf2Matrix fromDense(const Gf2Matrix& m);
    [[nodiscard]] Gf2Matrix toDense() const;

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const SparseRow& row(std::size_t r) const { return rows_[r]; }
    void setRow(std::size_t r, SparseRow row);

private:
    std::size_t cols_ = 0;
    std::vector<SparseRow> rows_;
};

[[nodiscard]] SparseGf2Matrix matMul(const SparseGf2Matrix& a, const SparseGf2Matrix& b);
[[nodiscard]] Gf2Vector mulLeft(const Gf2Vector& v, const SparseGf2Matrix& m);
[[nodiscard]] Gf2Vector mulRight(const SparseGf2Matrix& m, const Gf2Vector& x);
[[nodiscard]] std::size_t rank(const SparseGf2Matrix& m);
[[nodiscard]] std::optional<Gf2Vector> solveLinear(const SparseGf2Matrix& m, const Gf2Vector& rhs);

/// Rows with a lower fraction of ones than this are stored sparsely.
inline constexpr double kSparseDensityThreshold = 0.25;

/**
 * A square transition matrix stored densely or sparsely depending on its
 * density. Only the products needed by state-space exploration are exposed.
 */
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(const Gf2Matrix& m, double threshold = kSparseDensityThreshold);

    [[nodiscard]] bool isSparse() const { return std::holds_alternative<SparseGf2Matrix>(repr_); }
    [[nodiscard]] Gf2Vector applyLeft(const Gf2Vector& v) const;
    [[nodiscard]] Gf2Vector applyRight(const Gf2Vector& x) const;

private:
    std::variant<Gf2Matrix, SparseGf2Matrix> repr_;
};

// ---------------------------------------------------------------------------

/**
 * Incrementally grown set of linearly independent vectors.
 *
 * Keeps a row-echelon copy of the basis where every echelon row remembers
 * which original basis vectors it combines, so a dependent vector can be
 * expressed in coordinates of the original basis.
 */
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t dim) : dim_(dim) {}

    struct Verdict {
        bool extended = false;
        /// Coordinates over the basis before the call; only meaningful when dependent.
        Gf2Vector coordinates;
    };

    Verdict tryExtend(const Gf2Vector& v);
    /// Coordinates of v in the basis, or nullopt when v lies outside the span.
    [[nodiscard]] std::optional<Gf2Vector> coordinates(const Gf2Vector& v) const;

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return vectors_.size(); }
    [[nodiscard]] bool full() const { return vectors_.size() == dim_; }
    [[nodiscard]] const std::vector<Gf2Vector>& vectors() const { return vectors_; }
    /// Pivot column of each echelon row, in increasing order.
    [[nodiscard]] std::vector<std::size_t> pivots() const;

private:
    struct EchelonRow {
        Gf2Vector row;
        Gf2Vector combination;
        std::size_t pivot;
    };
    // Reduces v against the echelon rows; returns the residue and accumulated combination.
    std::pair<Gf2Vector, Gf2Vector> reduce(const Gf2Vector& v) const;

    std::size_t dim_;
    std::vector<Gf2Vector> vectors_;
    std::vector<EchelonRow> echelon_;
};

}  // namespace alma
