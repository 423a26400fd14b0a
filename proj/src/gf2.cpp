#include "alma/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace alma {

namespace {

constexpr std::size_t wordCount(std::size_t bits) { return (bits + 63) / 64; }

void requireSameSize(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// --- Gf2Vector -------------------------------------------------------------

Gf2Vector::Gf2Vector(std::size_t size) : size_(size), words_(wordCount(size), 0) {}

Gf2Vector Gf2Vector::fromBits(std::initializer_list<int> bits) {
    return fromBits(std::span<const int>(bits.begin(), bits.size()));
}

Gf2Vector Gf2Vector::fromBits(std::span<const int> bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("GF(2) entries must be 0 or 1");
        v.set(i, bits[i] == 1);
    }
    return v;
}

Gf2Vector Gf2Vector::fromString(std::string_view bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("GF(2) entries must be 0 or 1");
        v.set(i, bits[i] == '1');
    }
    return v;
}

Gf2Vector Gf2Vector::unit(std::size_t size, std::size_t index) {
    Gf2Vector v(size);
    v.set(index);
    return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
    const auto mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

bool Gf2Vector::isZero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t Gf2Vector::lowestSetBit() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
}

Gf2Vector Gf2Vector::resized(std::size_t size) const {
    Gf2Vector out(size);
    const auto n = std::min(words_.size(), out.words_.size());
    std::copy_n(words_.begin(), n, out.words_.begin());
    if (size % 64 != 0 && !out.words_.empty()) {
        out.words_.back() &= (std::uint64_t{1} << (size % 64)) - 1;
    }
    return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    requireSameSize(size_, other.size_, "vector xor");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

std::string Gf2Vector::toString() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t Gf2VectorHash::operator()(const Gf2Vector& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (auto w : v.words()) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
}

bool dot(const Gf2Vector& a, const Gf2Vector& b) {
    requireSameSize(a.size(), b.size(), "dot");
    unsigned parity = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) parity ^= std::popcount(wa[k] & wb[k]) & 1U;
    return parity != 0;
}

// --- Gf2Matrix -------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

Gf2Matrix Gf2Matrix::fromRows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<Gf2Vector> data;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
        data.push_back(Gf2Vector::fromBits(r));
    }
    return fromRows(std::move(data), cols);
}

Gf2Matrix Gf2Matrix::fromRows(std::vector<Gf2Vector> rows, std::size_t cols) {
    Gf2Matrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    for (const auto& r : rows) requireSameSize(r.size(), cols, "matrix row");
    m.data_ = std::move(rows);
    return m;
}

void Gf2Matrix::setRow(std::size_t r, Gf2Vector v) {
    requireSameSize(v.size(), cols_, "setRow");
    data_[r] = std::move(v);
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
    Gf2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, at(r, c));
    return v;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c)) t.set(c, r);
        }
    }
    return t;
}

bool Gf2Matrix::isIdentity() const { return *this == identity(rows_) && rows_ == cols_; }

double Gf2Matrix::density() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    std::size_t ones = 0;
    for (const auto& r : data_) ones += r.popcount();
    return static_cast<double>(ones) / static_cast<double>(rows_ * cols_);
}

Gf2Vector mulLeft(const Gf2Vector& v, const Gf2Matrix& m) {
    requireSameSize(v.size(), m.rows(), "vector-matrix product");
    Gf2Vector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v.get(i)) out ^= m.row(i);
    }
    return out;
}

Gf2Vector mulRight(const Gf2Matrix& m, const Gf2Vector& x) {
    requireSameSize(m.cols(), x.size(), "matrix-vector product");
    Gf2Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, dot(m.row(i), x));
    return out;
}

Gf2Matrix matMul(const Gf2Matrix& a, const Gf2Matrix& b) {
    requireSameSize(a.cols(), b.rows(), "matMul");
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.setRow(i, mulLeft(a.row(i), b));
    return out;
}

namespace {

// Reduced row echelon form in place, pivots chosen leftmost column first.
// Returns the pivot column of each leading row.
std::vector<std::size_t> rrefInPlace(std::vector<Gf2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Gf2Matrix& m) {
    std::vector<Gf2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rrefInPlace(rows, m.cols()).size();
}

bool isInvertible(const Gf2Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Gf2Vector> solveLinear(const Gf2Matrix& m, const Gf2Vector& rhs) {
    requireSameSize(m.rows(), rhs.size(), "solveLinear");
    const auto n = m.cols();
    std::vector<Gf2Vector> aug;
    aug.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i).resized(n + 1);
        row.set(n, rhs.get(i));
        aug.push_back(std::move(row));
    }
    auto pivots = rrefInPlace(aug, n);
    for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
        if (aug[i].get(n)) return std::nullopt;
    }
    Gf2Vector x(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) x.set(pivots[k], aug[k].get(n));
    return x;
}

std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const auto n = m.rows();
    std::vector<Gf2Vector> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = m.row(i).resized(2 * n);
        row.set(n + i);
        aug.push_back(std::move(row));
    }
    auto pivots = rrefInPlace(aug, n);
    if (pivots.size() != n) return std::nullopt;
    Gf2Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Gf2Vector r(n);
        for (std::size_t j = 0; j < n; ++j) r.set(j, aug[i].get(n + j));
        inv.setRow(i, std::move(r));
    }
    return inv;
}

// --- sparse ----------------------------------------------------------------

SparseRow SparseRow::fromDense(const Gf2Vector& v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) r.cols.push_back(static_cast<std::uint32_t>(i + 1));
    }
    return r;
}

Gf2Vector SparseRow::toDense(std::size_t width) const {
    Gf2Vector v(width);
    for (auto c : cols) {
        if (c == 0 || c > width) throw std::out_of_range("sparse column index out of range");
        v.set(c - 1);
    }
    return v;
}

bool SparseRow::contains(std::uint32_t col) const {
    return std::binary_search(cols.begin(), cols.end(), col);
}

SparseRow& SparseRow::operator^=(const SparseRow& other) {
    std::vector<std::uint32_t> merged;
    merged.reserve(cols.size() + other.cols.size());
    std::set_symmetric_difference(cols.begin(), cols.end(), other.cols.begin(), other.cols.end(),
                                  std::back_inserter(merged));
    cols = std::move(merged);
    return *this;
}

bool dot(const SparseRow& a, const SparseRow& b) {
    // Parity of the intersection size.
    bool parity = false;
    auto i = a.cols.begin();
    auto j = b.cols.begin();
    while (i != a.cols.end() && j != b.cols.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            parity = !parity;
            ++i;
            ++j;
        }
    }
    return parity;
}

SparseGf2Matrix::SparseGf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseGf2Matrix SparseGf2Matrix::fromDense(const Gf2Matrix& m) {
    SparseGf2Matrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.rows_[i] = SparseRow::fromDense(m.row(i));
    return s;
}

Gf2Matrix SparseGf2Matrix::toDense() const {
    Gf2Matrix m(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) m.setRow(i, rows_[i].toDense(cols_));
    return m;
}

void SparseGf2Matrix::setRow(std::size_t r, SparseRow row) {
    if (!std::is_sorted(row.cols.begin(), row.cols.end()) ||
        std::adjacent_find(row.cols.begin(), row.cols.end()) != row.cols.end()) {
        throw std::invalid_argument("sparse row indices must be strictly increasing");
    }
    if (!row.cols.empty() && (row.cols.front() == 0 || row.cols.back() > cols_)) {
        throw std::out_of_range("sparse column index out of range");
    }
    rows_[r] = std::move(row);
}

SparseGf2Matrix matMul(const SparseGf2Matrix& a, const SparseGf2Matrix& b) {
    requireSameSize(a.cols(), b.rows(), "matMul");
    SparseGf2Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        SparseRow acc;
        for (auto k : a.row(i).cols) acc ^= b.row(k - 1);
        out.setRow(i, std::move(acc));
    }
    return out;
}

Gf2Vector mulLeft(const Gf2Vector& v, const SparseGf2Matrix& m) {
    requireSameSize(v.size(), m.rows(), "vector-matrix product");
    Gf2Vector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!v.get(i)) continue;
        for (auto c : m.row(i).cols) out.flip(c - 1);
    }
    return out;
}

Gf2Vector mulRight(const SparseGf2Matrix& m, const Gf2Vector& x) {
    requireSameSize(m.cols(), x.size(), "matrix-vector product");
    Gf2Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool bit = false;
        for (auto c : m.row(i).cols) bit ^= x.get(c - 1);
        out.set(i, bit);
    }
    return out;
}

namespace {

std::vector<std::uint32_t> sparseRref(std::vector<SparseRow>& rows, std::uint32_t cols) {
    std::vector<std::uint32_t> pivots;
    std::size_t r = 0;
    for (std::uint32_t c = 1; c <= cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].contains(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].contains(c)) rows[i] ^= rows[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const SparseGf2Matrix& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return sparseRref(rows, static_cast<std::uint32_t>(m.cols())).size();
}

std::optional<Gf2Vector> solveLinear(const SparseGf2Matrix& m, const Gf2Vector& rhs) {
    requireSameSize(m.rows(), rhs.size(), "solveLinear");
    const auto n = static_cast<std::uint32_t>(m.cols());
    std::vector<SparseRow> aug;
    aug.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        if (rhs.get(i)) row.cols.push_back(n + 1);
        aug.push_back(std::move(row));
    }
    auto pivots = sparseRref(aug, n);
    for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
        if (aug[i].contains(n + 1)) return std::nullopt;
    }
    Gf2Vector x(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) x.set(pivots[k] - 1, aug[k].contains(n + 1));
    return x;
}

// --- LinearMap -------------------------------------------------------------

LinearMap::LinearMap(const Gf2Matrix& m, double threshold) {
    if (m.density() < threshold) {
        repr_ = SparseGf2Matrix::fromDense(m);
    } else {
        repr_ = m;
    }
}

Gf2Vector LinearMap::applyLeft(const Gf2Vector& v) const {
    return std::visit([&](const auto& m) { return mulLeft(v, m); }, repr_);
}

Gf2Vector LinearMap::applyRight(const Gf2Vector& x) const {
    return std::visit([&](const auto& m) { return mulRight(m, x); }, repr_);
}

// --- Gf2Basis --------------------------------------------------------------

std::pair<Gf2Vector, Gf2Vector> Gf2Basis::reduce(const Gf2Vector& v) const {
    requireSameSize(v.size(), dim_, "basis");
    Gf2Vector residue = v;
    Gf2Vector combo(dim_);
    // Echelon rows are sorted by pivot and each row's pivot is its lowest bit,
    // so a single increasing pass clears every pivot column.
    for (const auto& e : echelon_) {
        if (residue.get(e.pivot)) {
            residue ^= e.row;
            combo ^= e.combination;
        }
    }
    return {std::move(residue), std::move(combo)};
}

Gf2Basis::Verdict Gf2Basis::tryExtend(const Gf2Vector& v) {
    auto [residue, combo] = reduce(v);
    if (residue.isZero()) return {false, combo.resized(vectors_.size())};

    const auto index = vectors_.size();
    // residue == v ^ (originals in combo), so it combines those plus v itself.
    combo.flip(index);
    const auto pivot = residue.lowestSetBit();
    auto pos = std::lower_bound(echelon_.begin(), echelon_.end(), pivot,
                                [](const EchelonRow& e, std::size_t p) { return e.pivot < p; });
    echelon_.insert(pos, EchelonRow{std::move(residue), std::move(combo), pivot});
    vectors_.push_back(v);
    return {true, Gf2Vector()};
}

std::optional<Gf2Vector> Gf2Basis::coordinates(const Gf2Vector& v) const {
    auto [residue, combo] = reduce(v);
    if (!residue.isZero()) return std::nullopt;
    return combo.resized(vectors_.size());
}

std::vector<std::size_t> Gf2Basis::pivots() const {
    std::vector<std::size_t> p;
    p.reserve(echelon_.size());
    for (const auto& e : echelon_) p.push_back(e.pivot);
    return p;
}

}  // namespace alma
