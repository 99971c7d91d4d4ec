#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "formedflags/formed_space_spec.hpp"
#include "formedflags/small_field.hpp"
#include "formedflags/subset.hpp"

namespace formedflags {

using Elem = SmallField::Elem;

inline constexpr std::uint64_t kDefaultMaxOracleOps = 100'000'000;
inline constexpr std::uint64_t kMaxSubspaces = 10'000'000;

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
    static Matrix identity(int n);

    Elem& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    Elem at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
    bool operator==(const Matrix&) const = default;
};

Matrix multiply(const SmallField& F, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);
Matrix conjugate(const SmallField& F, const Matrix& m);
// In-place reduced row echelon form; returns the pivot columns and drops
// zero rows.
std::vector<int> rref(const SmallField& F, Matrix& m);
int rank(const SmallField& F, Matrix m);
// Rows form a basis of {x : m x = 0}.
Matrix nullspace(const SmallField& F, const Matrix& m);
// Rows of b are a basis of the subspace; its intersection with the span
// of the first d coordinates, written in those d coordinates.
Matrix intersect_leading(const SmallField& F, const Matrix& b, int d);
// Image of the row space under dropping the first d coordinates, reduced.
Matrix project_trailing(const SmallField& F, const Matrix& b, int d);

enum class FormKind { alternating, hermitian, quadratic, symmetric_bilinear };

// F^n with a form. Sesquilinear kinds use B(x, y) = x G y^sigma with sigma
// the field involution for hermitian forms. Quadratic spaces carry
// f(x) = sum_i d_i x_i^2 + sum_{i<j} G_ij x_i x_j and G is the polar form
// (G_ii = 2 d_i).
struct GramSpace {
    SmallField field;
    int n = 0;
    FormKind kind = FormKind::alternating;
    Matrix gram;
    std::vector<Elem> quad_diag;

    Elem B(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
    Elem f(const std::vector<Elem>& x) const;
    // Form restricted to the span of the rows of basis, in those coordinates.
    GramSpace restrict_to(const Matrix& basis) const;
    // Same space in the basis given by the rows of an invertible matrix.
    GramSpace change_basis(const Matrix& A) const { return restrict_to(A); }
    Matrix radical() const;
    bool is_nondegenerate() const;
    // throws ConsistencyError unless the form has the shape its kind requires
    void validate() const;
};

// Canonical models: symplectic pairs (e_i, f_i), orthonormal hermitian
// basis, hyperbolic planes plus an anisotropic kernel for quadratic spaces.
GramSpace standard_space(Kind kind, int n, const SmallField& F, int epsilon = 0);
// B(e_i, e_j) = delta_ij, f(x) = B(x, x)
GramSpace identity_symmetric_bilinear(int n, const SmallField& F);
// +1 for hyperbolic, -1 when the anisotropic kernel is a plane; needs a
// non-degenerate quadratic space of even dimension.
int witt_type(const GramSpace& s);
Matrix random_invertible(const SmallField& F, int n, std::mt19937& rng);

// Flag of forms on F^n in an adapted basis: the radical R_{i_rho} is the
// span of the first i_rho coordinates and grams[rho] is the Gram matrix of
// B_{i_rho} on it, so dims = (i_1, ..., i_r, n).
struct FlagOfForms {
    SmallField field;
    FormKind kind = FormKind::alternating;
    std::vector<int> dims;
    std::vector<Matrix> grams;

    int n() const { return dims.back(); }
    void validate() const;
    bool is_nondegenerate(const Matrix& basis) const;
};

FlagOfForms standard_flag_of_forms(Kind kind, int n, Subset I, const SmallField& F);

using SubspacePredicate = std::function<bool(const Matrix&)>;

class OpsBudget {
public:
    explicit OpsBudget(std::uint64_t max_ops = kDefaultMaxOracleOps) : max_(max_ops) {}
    void spend(std::uint64_t k = 1);
    std::uint64_t spent() const { return spent_; }

private:
    std::uint64_t max_;
    std::uint64_t spent_ = 0;
};

// Number of k-dimensional subspaces of F^n, exactly.
mpz_class subspace_count(int order, int n, int k);
// Each k-dimensional subspace of F^n once, as its reduced echelon basis,
// ordered by pivot columns and then by free entries.
void for_each_subspace(const SmallField& F, int n, int k, const std::function<void(const Matrix&)>& fn);
// Each subspace of dimension k containing the row space of w (given in
// reduced echelon form); the basis passed on is w followed by new rows.
void for_each_extension(const SmallField& F, const Matrix& w, int k, const std::function<void(const Matrix&)>& fn);

mpz_class count_flags(const SmallField& F, int n, Subset J, const SubspacePredicate& nondeg,
                      std::uint64_t max_ops = kDefaultMaxOracleOps);
mpz_class count_flags(const GramSpace& s, Subset J, std::uint64_t max_ops = kDefaultMaxOracleOps);
mpz_class count_flags(const FlagOfForms& b, Subset J, std::uint64_t max_ops = kDefaultMaxOracleOps);

// Non-degenerate j-dimensional subspaces of a quadratic space, restricted
// to Witt type delta when j is even (delta ignored for odd j).
mpz_class count_typed_subspaces(const GramSpace& s, int j, int delta, std::uint64_t max_ops = kDefaultMaxOracleOps);

// Flag counts, by mask of J subset [3], in the 4-dimensional space with
// B(e_i, e_j) = delta_ij over a field of characteristic 2.
std::vector<mpz_class> a3_counterexample_table(int field_order = 2);

} // namespace formedflags
