#ifndef CISD_ABELIAN_HPP
#define CISD_ABELIAN_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cisd/bigint.hpp"

namespace cisd {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<BigInt> column(std::size_t c) const;
    IntMatrix transposed() const;
    /// [this | other], same row count.
    IntMatrix hconcat(const IntMatrix& other) const;
    /// Columns [first, first + count).
    IntMatrix column_block(std::size_t first, std::size_t count) const;
    /// Rows [first, first + count).
    IntMatrix row_block(std::size_t first, std::size_t count) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Determinant by fraction-free elimination (Bareiss).
BigInt determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix U; ///< rows x rows, unimodular
    IntMatrix D; ///< rows x cols, diagonal, d_1 | d_2 | ..., non-negative
    IntMatrix V; ///< cols x cols, unimodular
    std::size_t rank = 0;

    BigInt diagonal(std::size_t i) const;
};

/// U * M * V == D.
SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of {x : m x = 0} as the columns of the result.
IntMatrix integer_kernel(const IntMatrix& m);

/// Abelian group Z^generators / (column span of relations).
struct Presentation {
    std::size_t generators = 0;
    IntMatrix relations; ///< generators x (number of relations)

    static Presentation free(std::size_t rank);
    /// Z/o_1 + Z/o_2 + ...; an order of 0 gives a free Z summand.
    static Presentation cyclic_sum(const std::vector<BigInt>& orders);

    /// True if v (length = generators) lies in the relation lattice, i.e. is zero in the group.
    bool is_zero(const std::vector<BigInt>& v) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/t_1 + ... + Z/t_m with 2 <= t_1 | t_2 | ... | t_m.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup cyclic(const BigInt& order);
    static FinAbGroup of(const Presentation& p);
    /// Canonicalizes an arbitrary direct sum of cyclic groups (0 means Z, 1 is dropped).
    static FinAbGroup direct_sum(const std::vector<BigInt>& orders);

    bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const noexcept { return free_rank == 0; }
    bool is_cyclic() const noexcept { return free_rank + torsion.size() <= 1; }
    /// Order of a finite group; throws std::domain_error if infinite.
    BigInt order() const;
    FinAbGroup torsion_subgroup() const { return {0, torsion}; }
    Presentation presentation() const;

    /// "0", "Z/4", "Z+Z/2", "Z/2+Z/2".
    std::string to_string() const;
    /// Inverse of to_string. Throws std::invalid_argument.
    static FinAbGroup parse(const std::string& text);

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

/// Homomorphism between presented groups; column j of `matrix` is the image of
/// source generator j in target coordinates.
class GroupHom {
public:
    /// Throws std::invalid_argument on shape mismatch or if relations of the
    /// source are not sent into the relation lattice of the target.
    GroupHom(Presentation source, Presentation target, IntMatrix matrix);

    static GroupHom identity(const Presentation& p);
    static GroupHom zero(const Presentation& source, const Presentation& target);

    const Presentation& source() const noexcept { return source_; }
    const Presentation& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const { return matrix_ * x; }

    /// this after `first`; throws std::invalid_argument if first.target != this->source.
    GroupHom compose_after(const GroupHom& first) const;

    /// True when every source generator maps to zero.
    bool is_zero() const;

private:
    Presentation source_;
    Presentation target_;
    IntMatrix matrix_;
};

FinAbGroup cokernel(const GroupHom& h);
FinAbGroup kernel(const GroupHom& h);
FinAbGroup image(const GroupHom& h);

/// Generators (as columns) of {x : a x in colspan(b)}.
IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& b);

/// 1 iff image = kernel at every interior node of h_1, h_2, ..., h_m.
/// Throws std::invalid_argument if consecutive maps do not compose.
bool verify_exact(const std::vector<GroupHom>& segment);

/// Stored value of a Toda bracket <a, g, f> as a coset of its indeterminacy.
struct BracketFact {
    std::string a, g, f;
    std::string group;   ///< name of the ambient group
    Presentation ambient;
    std::vector<std::vector<BigInt>> values;        ///< elements of the bracket
    std::vector<std::vector<BigInt>> indeterminacy; ///< elements of the indeterminacy subgroup
    std::string provenance;

    /// 0 in <a, g, f> iff the bracket meets its indeterminacy.
    bool contains_zero() const;
    std::string label() const { return "<" + a + ", " + g + ", " + f + ">"; }
};

/// Extension 0 -> sub -> E -> quot -> 0 with both ends finite cyclic, decided by
/// the bracket: split if it contains 0; otherwise only Z/2-by-Z/2 is resolved
/// (giving Z/4), and anything else throws std::domain_error("ambiguous extension").
FinAbGroup classify_cyclic_extension(const FinAbGroup& sub, const FinAbGroup& quot, const BracketFact& bracket);

} // namespace cisd

#endif
