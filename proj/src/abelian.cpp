#include "cisd/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cisd {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const
{
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const
{
    if (other.rows_ != rows_)
        throw std::invalid_argument("hconcat: row counts differ");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c)
            m(r, cols_ + c) = other(r, c);
    }
    return m;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const
{
    if (first + count > cols_)
        throw std::out_of_range("column block out of range");
    IntMatrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            m(r, c) = (*this)(r, first + c);
    return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const
{
    if (first + count > rows_)
        throw std::out_of_range("row block out of range");
    IntMatrix m(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(first + r, c);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    IntMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(m(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
        }
    return m;
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<BigInt> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << to_decimal(m(r, c));
        os << ']';
    }
    return os << ']';
}

BigInt determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

BigInt SmithForm::diagonal(std::size_t i) const
{
    if (i >= D.rows() || i >= D.cols())
        return 0;
    return D(i, i);
}

namespace {

// Row and column operations applied to D and mirrored into U (rows) and V (columns).
struct SmithWork {
    IntMatrix U, D, V;

    void swap_rows(std::size_t i, std::size_t j)
    {
        for (std::size_t c = 0; c < D.cols(); ++c)
            std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < U.cols(); ++c)
            std::swap(U(i, c), U(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        for (std::size_t r = 0; r < D.rows(); ++r)
            std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < V.rows(); ++r)
            std::swap(V(r, i), V(r, j));
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const BigInt& q)
    {
        for (std::size_t c = 0; c < D.cols(); ++c)
            mpz_submul(D(i, c).get_mpz_t(), q.get_mpz_t(), D(j, c).get_mpz_t());
        for (std::size_t c = 0; c < U.cols(); ++c)
            mpz_submul(U(i, c).get_mpz_t(), q.get_mpz_t(), U(j, c).get_mpz_t());
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const BigInt& q)
    {
        for (std::size_t r = 0; r < D.rows(); ++r)
            mpz_submul(D(r, i).get_mpz_t(), q.get_mpz_t(), D(r, j).get_mpz_t());
        for (std::size_t r = 0; r < V.rows(); ++r)
            mpz_submul(V(r, i).get_mpz_t(), q.get_mpz_t(), V(r, j).get_mpz_t());
    }
    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j), ad - bc = 1
    void row_mix(std::size_t i, std::size_t j, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d)
    {
        mix(D, true, i, j, a, b, c, d);
        mix(U, true, i, j, a, b, c, d);
    }
    void col_mix(std::size_t i, std::size_t j, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d)
    {
        mix(D, false, i, j, a, b, c, d);
        mix(V, false, i, j, a, b, c, d);
    }
    static void mix(IntMatrix& m, bool rows, std::size_t i, std::size_t j, const BigInt& a, const BigInt& b,
                    const BigInt& c, const BigInt& d)
    {
        const std::size_t n = rows ? m.cols() : m.rows();
        for (std::size_t k = 0; k < n; ++k) {
            BigInt& x = rows ? m(i, k) : m(k, i);
            BigInt& y = rows ? m(j, k) : m(k, j);
            const BigInt nx = a * x + b * y;
            y = c * x + d * y;
            x = nx;
        }
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < D.cols(); ++c)
            D(i, c) = -D(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c)
            U(i, c) = -U(i, c);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithWork w{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    auto& D = w.D;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t t = 0;

    for (; t < std::min(rows, cols); ++t) {
        // smallest non-zero entry of the trailing block becomes the pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (sgn(D(i, j)) != 0 && (pi == rows || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        if (pi != t)
            w.swap_rows(t, pi);
        if (pj != t)
            w.swap_cols(t, pj);

        for (;;) {
            // clear column t, then row t, with Bezout steps; the pivot only shrinks
            BigInt g, x, y, q;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(D(i, t)) == 0)
                    continue;
                if (mpz_divisible_p(D(i, t).get_mpz_t(), D(t, t).get_mpz_t())) {
                    mpz_divexact(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                    w.row_sub(i, t, q);
                    continue;
                }
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), D(t, t).get_mpz_t(), D(i, t).get_mpz_t());
                const BigInt a = D(t, t) / g, b = D(i, t) / g;
                w.row_mix(t, i, x, y, -b, a);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(D(t, j)) == 0)
                    continue;
                if (mpz_divisible_p(D(t, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                    mpz_divexact(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                    w.col_sub(j, t, q);
                    continue;
                }
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), D(t, t).get_mpz_t(), D(t, j).get_mpz_t());
                const BigInt a = D(t, t) / g, b = D(t, j) / g;
                w.col_mix(t, j, x, y, -b, a);
            }
            // column mixes can refill column t below the pivot
            bool clean = true;
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                clean = sgn(D(i, t)) == 0;
            if (!clean)
                continue;

            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        w.row_sub(t, i, BigInt(-1));
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (sgn(D(t, t)) < 0)
            w.negate_row(t);
    }

    return SmithForm{std::move(w.U), std::move(w.D), std::move(w.V), t};
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    SmithForm s = smith_normal_form(m);
    return s.V.column_block(s.rank, m.cols() - s.rank);
}

IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("preimage_lattice: row counts differ");
    IntMatrix nb(b.rows(), b.cols());
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            nb(r, c) = -b(r, c);
    return integer_kernel(a.hconcat(nb)).row_block(0, a.cols());
}

Presentation Presentation::free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }

Presentation Presentation::cyclic_sum(const std::vector<BigInt>& orders)
{
    Presentation p{orders.size(), IntMatrix(orders.size(), orders.size())};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (sgn(orders[i]) < 0)
            throw std::invalid_argument("cyclic orders must be >= 0");
        p.relations(i, i) = orders[i];
    }
    return p;
}

bool Presentation::is_zero(const std::vector<BigInt>& v) const
{
    if (v.size() != generators)
        throw std::invalid_argument("element has the wrong number of coordinates");
    SmithForm s = smith_normal_form(relations);
    std::vector<BigInt> w = s.U * v;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(w[i].get_mpz_t(), s.D(i, i).get_mpz_t()))
                return false;
        } else if (sgn(w[i]) != 0) {
            return false;
        }
    }
    return true;
}

FinAbGroup FinAbGroup::cyclic(const BigInt& order) { return direct_sum({order}); }

FinAbGroup FinAbGroup::of(const Presentation& p)
{
    if (p.relations.rows() != p.generators)
        throw std::invalid_argument("relation matrix does not match the generator count");
    SmithForm s = smith_normal_form(p.relations);
    FinAbGroup g;
    g.free_rank = p.generators - s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D(i, i) > 1)
            g.torsion.push_back(s.D(i, i));
    return g;
}

FinAbGroup FinAbGroup::direct_sum(const std::vector<BigInt>& orders) { return of(Presentation::cyclic_sum(orders)); }

BigInt FinAbGroup::order() const
{
    if (free_rank != 0)
        throw std::domain_error("order of an infinite group");
    BigInt o = 1;
    for (const auto& t : torsion)
        o *= t;
    return o;
}

Presentation FinAbGroup::presentation() const
{
    std::vector<BigInt> orders(free_rank, BigInt(0));
    orders.insert(orders.end(), torsion.begin(), torsion.end());
    return Presentation::cyclic_sum(orders);
}

std::string FinAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < free_rank; ++i)
        s += s.empty() ? "Z" : "+Z";
    for (const auto& t : torsion)
        s += (s.empty() ? "Z/" : "+Z/") + to_decimal(t);
    return s;
}

FinAbGroup FinAbGroup::parse(const std::string& text)
{
    if (text == "0")
        return {};
    std::vector<BigInt> orders;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (part == "Z")
            orders.emplace_back(0);
        else if (part.size() > 2 && part.compare(0, 2, "Z/") == 0) {
            BigInt o = parse_decimal(part.substr(2));
            if (o < 1)
                throw std::invalid_argument("cyclic order must be >= 1 in '" + text + "'");
            orders.push_back(o);
        } else
            throw std::invalid_argument("cannot parse group '" + text + "'");
    }
    if (orders.empty() || text.back() == '+')
        throw std::invalid_argument("cannot parse group '" + text + "'");
    return direct_sum(orders);
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }

GroupHom::GroupHom(Presentation source, Presentation target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (source_.relations.rows() != source_.generators || target_.relations.rows() != target_.generators)
        throw std::invalid_argument("malformed presentation");
    if (matrix_.rows() != target_.generators || matrix_.cols() != source_.generators)
        throw std::invalid_argument("homomorphism matrix has the wrong shape");
    IntMatrix images = matrix_ * source_.relations;
    for (std::size_t c = 0; c < images.cols(); ++c)
        if (!target_.is_zero(images.column(c)))
            throw std::invalid_argument("ill-defined homomorphism: a source relation maps to a non-zero element");
}

GroupHom GroupHom::identity(const Presentation& p) { return GroupHom(p, p, IntMatrix::identity(p.generators)); }

GroupHom GroupHom::zero(const Presentation& source, const Presentation& target)
{
    return GroupHom(source, target, IntMatrix(target.generators, source.generators));
}

GroupHom GroupHom::compose_after(const GroupHom& first) const
{
    if (!(first.target() == source_))
        throw std::invalid_argument("composition: target and source presentations differ");
    return GroupHom(first.source(), target_, matrix_ * first.matrix());
}

bool GroupHom::is_zero() const
{
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
        if (!target_.is_zero(matrix_.column(c)))
            return false;
    return true;
}

FinAbGroup cokernel(const GroupHom& h)
{
    return FinAbGroup::of({h.target().generators, h.target().relations.hconcat(h.matrix())});
}

FinAbGroup kernel(const GroupHom& h)
{
    IntMatrix lifted = preimage_lattice(h.matrix(), h.target().relations);
    return FinAbGroup::of({lifted.cols(), preimage_lattice(lifted, h.source().relations)});
}

FinAbGroup image(const GroupHom& h)
{
    return FinAbGroup::of({h.source().generators, preimage_lattice(h.matrix(), h.target().relations)});
}

bool verify_exact(const std::vector<GroupHom>& segment)
{
    for (std::size_t i = 0; i + 1 < segment.size(); ++i)
        if (!(segment[i].target() == segment[i + 1].source()))
            throw std::invalid_argument("exact sequence: map " + std::to_string(i + 1)
                                        + " does not compose with the next one");

    for (std::size_t i = 0; i + 1 < segment.size(); ++i) {
        const GroupHom& in = segment[i];
        const GroupHom& out = segment[i + 1];
        if (!out.compose_after(in).is_zero())
            return false;
        // kernel of `out` inside image of `in`
        const Presentation& node = in.target();
        Presentation image_quotient{node.generators, node.relations.hconcat(in.matrix())};
        IntMatrix ker = preimage_lattice(out.matrix(), out.target().relations);
        for (std::size_t c = 0; c < ker.cols(); ++c)
            if (!image_quotient.is_zero(ker.column(c)))
                return false;
    }
    return true;
}

bool BracketFact::contains_zero() const
{
    for (const auto& v : values)
        for (const auto& u : indeterminacy) {
            if (v.size() != ambient.generators || u.size() != ambient.generators)
                throw std::invalid_argument("bracket element has the wrong number of coordinates");
            std::vector<BigInt> diff(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                diff[i] = v[i] - u[i];
            if (ambient.is_zero(diff))
                return true;
        }
    return false;
}

FinAbGroup classify_cyclic_extension(const FinAbGroup& sub, const FinAbGroup& quot, const BracketFact& bracket)
{
    if (!sub.is_finite() || !sub.is_cyclic() || !quot.is_finite() || !quot.is_cyclic())
        throw std::invalid_argument("extension classification needs finite cyclic groups");
    if (bracket.contains_zero())
        return FinAbGroup::direct_sum({sub.order(), quot.order()});
    if (sub.order() == 2 && quot.order() == 2)
        return FinAbGroup::cyclic(4);
    throw std::domain_error("ambiguous extension: a non-split " + quot.to_string() + " by " + sub.to_string()
                            + " extension is not determined by " + bracket.label());
}

} // namespace cisd
