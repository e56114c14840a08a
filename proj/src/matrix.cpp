#include "corings/matrix.hpp"

#include <stdexcept>

namespace corings {

namespace {
void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("matrix field mismatch");
}
}  // namespace

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero())
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in difference");
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(const Rat& s) const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], s);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    check_same_field(*this, o);
    Matrix r(rows_ * o.rows_, cols_ * o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t p = 0; p < o.rows_; ++p)
                for (std::size_t q = 0; q < o.cols_; ++q)
                    if (!o.at(p, q).is_zero())
                        r.at(i * o.rows_ + p, j * o.cols_ + q) = field_.mul(a, o.at(p, q));
        }
    return r;
}

std::vector<Rat> Matrix::column(std::size_t c) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void Matrix::set_column(std::size_t c, const std::vector<Rat>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = field_.normalize(v[i]);
}

std::vector<Rat> Matrix::row(std::size_t r) const {
    std::vector<Rat> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch in apply");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols,
                         Field field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = field.normalize(rows[i][j]);
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows,
                            Field field) {
    Matrix m(rows, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    if (pivots) pivots->clear();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t sel = pr;
        while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pr, j));
        Rat inv = field_.inv(m.at(pr, c));
        // the pivot row is zero left of c: earlier pivot columns were
        // eliminated and earlier free columns were zero from row pr down
        for (std::size_t j = c; j < cols_; ++j)
            if (!m.at(pr, j).is_zero()) m.at(pr, j) = field_.mul(m.at(pr, j), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || m.at(r, c).is_zero()) continue;
            Rat factor = m.at(r, c);
            for (std::size_t j = c; j < cols_; ++j) {
                const Rat& pv = m.at(pr, j);
                if (pv.is_zero()) continue;
                m.at(r, j) = field_.sub(m.at(r, j), field_.mul(factor, pv));
            }
        }
        if (pivots) pivots->push_back(c);
        ++pr;
    }
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Matrix Matrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(free_cols.size(), cols_, field_);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k.at(fi, fc) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(fi, pivots[pi]) = field_.neg(r.at(pi, fc));
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& targets) const {
    check_same_field(*this, targets);
    if (targets.rows() != rows_) throw std::invalid_argument("solve: shape mismatch");
    // Augment with all target columns at once.
    Matrix aug(rows_, cols_ + targets.cols(), field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < targets.cols(); ++j) aug.at(i, cols_ + j) = targets.at(i, j);
    }
    // Eliminate on the first cols_ columns only.
    std::size_t pr = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t sel = pr;
        while (sel < rows_ && aug.at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(sel, j), aug.at(pr, j));
        Rat inv = field_.inv(aug.at(pr, c));
        // left of c the pivot row is zero in the coefficient block, and the
        // augmented block starts at cols_ > c
        for (std::size_t j = c; j < aug.cols(); ++j)
            if (!aug.at(pr, j).is_zero()) aug.at(pr, j) = field_.mul(aug.at(pr, j), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || aug.at(r, c).is_zero()) continue;
            Rat factor = aug.at(r, c);
            for (std::size_t j = c; j < aug.cols(); ++j) {
                const Rat& pv = aug.at(pr, j);
                if (pv.is_zero()) continue;
                aug.at(r, j) = field_.sub(aug.at(r, j), field_.mul(factor, pv));
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    // Consistency: rows past pr must have zero target part.
    for (std::size_t r = pr; r < rows_; ++r)
        for (std::size_t j = 0; j < targets.cols(); ++j)
            if (!aug.at(r, cols_ + j).is_zero()) return std::nullopt;
    Matrix x(cols_, targets.cols(), field_);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < targets.cols(); ++j)
            x.at(pivots[pi], j) = aug.at(pi, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(rows_, field_));
    if (!x) return std::nullopt;
    // solve gives a right inverse; for square full-rank it is two-sided.
    if (rank() != rows_) return std::nullopt;
    return x;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
        throw std::invalid_argument("vstack: column mismatch");
    std::size_t cols = rows_ == 0 ? o.cols_ : cols_;
    Matrix r(rows_ + o.rows_, cols, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::string first_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "(shape)";
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j))
                return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return "";
}

bool columns_in_rowspace(const Matrix& rref_rows, const Matrix& cols) {
    const Field& f = cols.field();
    std::size_t n = cols.rows();
    // pivot column of each echelon row
    std::vector<std::size_t> pivots(rref_rows.rows(), n);
    for (std::size_t r = 0; r < rref_rows.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!rref_rows.at(r, c).is_zero()) {
                pivots[r] = c;
                break;
            }
    for (std::size_t c = 0; c < cols.cols(); ++c) {
        std::vector<Rat> v = cols.column(c);
        for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
            if (pivots[r] == n) continue;
            const Rat& lead = v[pivots[r]];
            if (lead.is_zero()) continue;
            Rat factor = lead;  // echelon rows have leading entry 1
            for (std::size_t j = pivots[r]; j < n; ++j)
                if (!rref_rows.at(r, j).is_zero())
                    v[j] = f.sub(v[j], f.mul(factor, rref_rows.at(r, j)));
        }
        for (const auto& x : v)
            if (!f.normalize(x).is_zero()) return false;
    }
    return true;
}

Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& m) {
    const Field& f = m.field();
    if (m.rows() != a.cols() * b.cols())
        throw std::invalid_argument("kron_apply: shape mismatch");
    Matrix out(a.rows() * b.rows(), m.cols(), f);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Rat& v = m.at(r, c);
            if (v.is_zero()) continue;
            std::size_t i = r / b.cols(), j = r % b.cols();
            for (std::size_t p = 0; p < a.rows(); ++p) {
                if (a.at(p, i).is_zero()) continue;
                Rat av = f.mul(v, a.at(p, i));
                for (std::size_t q = 0; q < b.rows(); ++q)
                    if (!b.at(q, j).is_zero())
                        out.at(p * b.rows() + q, c) =
                            f.add(out.at(p * b.rows() + q, c), f.mul(av, b.at(q, j)));
            }
        }
    return out;
}

std::vector<Rat> add_vec(const Field& f, const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

std::vector<Rat> scale_vec(const Field& f, const Rat& s, const std::vector<Rat>& a) {
    std::vector<Rat> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
    return r;
}

}  // namespace corings
