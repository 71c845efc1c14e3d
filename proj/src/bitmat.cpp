#include "dyntc/bitmat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dyntc {

BoolMatrix::BoolMatrix(int n)
    : n_(n), wpr_((n + 63) / 64), bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 1) throw dimension_error("BoolMatrix: dimension must be >= 1");
}

BoolMatrix BoolMatrix::identity(int n) {
    BoolMatrix m(n);
    m.set_diagonal();
    return m;
}

void BoolMatrix::fill_zero() { std::fill(bits_.begin(), bits_.end(), 0); }

void BoolMatrix::set_diagonal() {
    for (int i = 0; i < n_; ++i) set(i, i);
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& o) {
    if (o.n_ != n_) throw dimension_error("BoolMatrix |=: dimension mismatch");
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
}

BoolMatrix& BoolMatrix::operator&=(const BoolMatrix& o) {
    if (o.n_ != n_) throw dimension_error("BoolMatrix &=: dimension mismatch");
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
}

void BoolMatrix::subtract(const BoolMatrix& o) {
    if (o.n_ != n_) throw dimension_error("BoolMatrix subtract: dimension mismatch");
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
}

bool BoolMatrix::operator==(const BoolMatrix& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
}

bool BoolMatrix::subset_of(const BoolMatrix& o) const {
    if (o.n_ != n_) throw dimension_error("BoolMatrix subset_of: dimension mismatch");
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

bool BoolMatrix::none() const {
    for (uint64_t w : bits_)
        if (w) return false;
    return true;
}

int BoolMatrix::popcount() const {
    int c = 0;
    for (uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
}

int BoolMatrix::row_popcount(int x) const {
    int c = 0;
    const uint64_t* r = row(x);
    for (int w = 0; w < wpr_; ++w) c += __builtin_popcountll(r[w]);
    return c;
}

BoolMatrix BoolMatrix::transposed() const {
    BoolMatrix t(n_);
    for (int x = 0; x < n_; ++x)
        for_each_in_row(x, [&](int y) { t.set(y, x); });
    return t;
}

BoolMatrix BoolMatrix::padded(int m) const {
    if (m < n_) throw dimension_error("BoolMatrix padded: target smaller than source");
    BoolMatrix p(m);
    p.place(*this, 0, 0);
    return p;
}

BoolMatrix BoolMatrix::shrunk(int m) const { return submatrix(0, 0, m); }

BoolMatrix BoolMatrix::submatrix(int r0, int c0, int m) const {
    if (r0 + m > n_ || c0 + m > n_) throw index_error("BoolMatrix submatrix: out of range");
    BoolMatrix s(m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (get(r0 + x, c0 + y)) s.set(x, y);
    return s;
}

void BoolMatrix::place(const BoolMatrix& src, int r0, int c0) {
    if (r0 + src.n_ > n_ || c0 + src.n_ > n_)
        throw index_error("BoolMatrix place: out of range");
    for (int x = 0; x < src.n_; ++x) {
        for (int y = 0; y < src.n_; ++y)
            assign(r0 + x, c0 + y, src.get(x, y));
    }
}

BoolMatrix read_matrix_text(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw trace_error("matrix text: bad dimension line");
    BoolMatrix m(n);
    std::string line;
    std::getline(in, line); // rest of dimension line
    for (int x = 0; x < n; ++x) {
        if (!std::getline(in, line)) throw trace_error("matrix text: missing row");
        if (static_cast<int>(line.size()) < n) throw trace_error("matrix text: short row");
        for (int y = 0; y < n; ++y) {
            char c = line[y];
            if (c == '1')
                m.set(x, y);
            else if (c != '0')
                throw trace_error("matrix text: invalid character");
        }
    }
    return m;
}

void write_matrix_text(std::ostream& out, const BoolMatrix& m) {
    out << m.dim() << '\n';
    for (int x = 0; x < m.dim(); ++x) {
        for (int y = 0; y < m.dim(); ++y) out << (m.get(x, y) ? '1' : '0');
        out << '\n';
    }
}

BoolMatrix parse_matrix_text(const std::string& s) {
    std::istringstream in(s);
    return read_matrix_text(in);
}

std::string format_matrix_text(const BoolMatrix& m) {
    std::ostringstream out;
    write_matrix_text(out, m);
    return out.str();
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace dyntc
