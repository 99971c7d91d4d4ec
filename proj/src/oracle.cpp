#include "formedflags/oracle.hpp"

#include <algorithm>

#include "formedflags/errors.hpp"
#include "formedflags/qbinomial.hpp"

namespace formedflags {

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix multiply(const SmallField& F, const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows)
        throw DomainError("multiply: shape mismatch");
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Elem c = x.at(i, k);
            if (!c)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(c, y.at(k, j)));
        }
    return r;
}

Matrix transpose(const Matrix& m)
{
    Matrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

Matrix conjugate(const SmallField& F, const Matrix& m)
{
    Matrix c = m;
    for (auto& x : c.a)
        x = F.conj(x);
    return c;
}

std::vector<int> rref(const SmallField& F, Matrix& m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col)) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        const Elem s = F.inv(m.at(row, col));
        for (int j = 0; j < m.cols; ++j)
            m.at(row, j) = F.mul(s, m.at(row, j));
        for (int i = 0; i < m.rows; ++i) {
            const Elem c = m.at(i, col);
            if (i == row || !c)
                continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    m.rows = row;
    m.a.resize(static_cast<std::size_t>(row * m.cols));
    return pivots;
}

int rank(const SmallField& F, Matrix m) { return static_cast<int>(rref(F, m).size()); }

Matrix nullspace(const SmallField& F, const Matrix& m)
{
    Matrix r = m;
    const std::vector<int> piv = rref(F, r);
    std::vector<int> free;
    for (int j = 0, p = 0; j < m.cols; ++j) {
        if (p < static_cast<int>(piv.size()) && piv[static_cast<std::size_t>(p)] == j)
            ++p;
        else
            free.push_back(j);
    }
    Matrix out(static_cast<int>(free.size()), m.cols);
    for (std::size_t k = 0; k < free.size(); ++k) {
        const int fj = free[k];
        out.at(static_cast<int>(k), fj) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            out.at(static_cast<int>(k), piv[i]) = F.neg(r.at(static_cast<int>(i), fj));
    }
    return out;
}

Matrix intersect_leading(const SmallField& F, const Matrix& b, int d)
{
    const int tail = b.cols - d;
    Matrix out(0, d);
    if (b.rows == 0)
        return out;
    Matrix c = Matrix(b.rows, d);
    if (tail == 0) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < d; ++j)
                c.at(i, j) = b.at(i, j);
        return c;
    }
    Matrix t(tail, b.rows);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < tail; ++j)
            t.at(j, i) = b.at(i, d + j);
    const Matrix coeffs = nullspace(F, t);
    Matrix lead(b.rows, d);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < d; ++j)
            lead.at(i, j) = b.at(i, j);
    return multiply(F, coeffs, lead);
}

Matrix project_trailing(const SmallField& F, const Matrix& b, int d)
{
    Matrix p(b.rows, b.cols - d);
    for (int i = 0; i < b.rows; ++i)
        for (int j = d; j < b.cols; ++j)
            p.at(i, j - d) = b.at(i, j);
    rref(F, p);
    return p;
}

namespace {

Matrix sesquilinear_restrict(const SmallField& F, FormKind kind, const Matrix& G, const Matrix& M)
{
    const Matrix right = kind == FormKind::hermitian ? conjugate(F, transpose(M)) : transpose(M);
    return multiply(F, multiply(F, M, G), right);
}

std::vector<Elem> row_of(const Matrix& m, int i)
{
    return {m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols};
}

// every nonzero combination of the rows of m
template <class Fn>
void for_each_nonzero_vector(const SmallField& F, const Matrix& m, Fn fn)
{
    const int k = m.rows;
    std::vector<Elem> c(static_cast<std::size_t>(k), 0);
    std::vector<Elem> v(static_cast<std::size_t>(m.cols));
    while (true) {
        int i = 0;
        while (i < k && c[static_cast<std::size_t>(i)] == F.order() - 1)
            c[static_cast<std::size_t>(i++)] = 0;
        if (i == k)
            return;
        ++c[static_cast<std::size_t>(i)];
        std::fill(v.begin(), v.end(), 0);
        for (int r = 0; r < k; ++r)
            if (c[static_cast<std::size_t>(r)])
                for (int j = 0; j < m.cols; ++j)
                    v[static_cast<std::size_t>(j)] =
                        F.add(v[static_cast<std::size_t>(j)], F.mul(c[static_cast<std::size_t>(r)], m.at(r, j)));
        if (fn(v))
            return;
    }
}

} // namespace

Elem GramSpace::B(const std::vector<Elem>& x, const std::vector<Elem>& y) const
{
    Elem s = 0;
    for (int i = 0; i < n; ++i) {
        if (!x[static_cast<std::size_t>(i)])
            continue;
        for (int j = 0; j < n; ++j) {
            const Elem yj = kind == FormKind::hermitian ? field.conj(y[static_cast<std::size_t>(j)])
                                                          : y[static_cast<std::size_t>(j)];
            s = field.add(s, field.mul(field.mul(x[static_cast<std::size_t>(i)], gram.at(i, j)), yj));
        }
    }
    return s;
}

Elem GramSpace::f(const std::vector<Elem>& x) const
{
    if (kind != FormKind::quadratic)
        return B(x, x);
    Elem s = 0;
    for (int i = 0; i < n; ++i) {
        const Elem xi = x[static_cast<std::size_t>(i)];
        s = field.add(s, field.mul(quad_diag[static_cast<std::size_t>(i)], field.mul(xi, xi)));
        for (int j = i + 1; j < n; ++j)
            s = field.add(s, field.mul(gram.at(i, j), field.mul(xi, x[static_cast<std::size_t>(j)])));
    }
    return s;
}

GramSpace GramSpace::restrict_to(const Matrix& basis) const
{
    GramSpace r{field, basis.rows, kind, sesquilinear_restrict(field, kind, gram, basis), {}};
    if (kind == FormKind::quadratic)
        for (int i = 0; i < basis.rows; ++i)
            r.quad_diag.push_back(f(row_of(basis, i)));
    return r;
}

Matrix GramSpace::radical() const { return nullspace(field, transpose(gram)); }

bool GramSpace::is_nondegenerate() const
{
    const Matrix rad = radical();
    if (rad.rows == 0)
        return true;
    if (kind != FormKind::quadratic)
        return false;
    bool isotropic = false;
    for_each_nonzero_vector(field, rad, [&](const std::vector<Elem>& v) { return isotropic = f(v) == 0; });
    return !isotropic;
}

void GramSpace::validate() const
{
    auto fail = [](const char* what) { throw ConsistencyError(std::string("GramSpace: ") + what); };
    if (gram.rows != n || gram.cols != n)
        fail("gram shape");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Elem g = gram.at(i, j), h = gram.at(j, i);
            switch (kind) {
            case FormKind::alternating:
                if (g != field.neg(h) || (i == j && g))
                    fail("not alternating");
                break;
            case FormKind::hermitian:
                if (g != field.conj(h))
                    fail("not hermitian");
                break;
            case FormKind::quadratic:
                if (g != h || (i == j && g != field.add(quad_diag[static_cast<std::size_t>(i)],
                                                       quad_diag[static_cast<std::size_t>(i)])))
                    fail("polar form does not match the quadratic form");
                break;
            case FormKind::symmetric_bilinear:
                if (g != h)
                    fail("not symmetric");
                break;
            }
        }
    if (kind == FormKind::quadratic && static_cast<int>(quad_diag.size()) != n)
        fail("quadratic form needs its diagonal");
}

namespace {

// x^2 + xy + c y^2 with no nontrivial zero
Elem anisotropic_constant(const SmallField& F)
{
    for (int c = 1; c < F.order(); ++c) {
        bool ok = true;
        for (int x = 0; x < F.order() && ok; ++x)
            for (int y = 0; y < F.order() && ok; ++y) {
                if (!x && !y)
                    continue;
                const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
                const Elem v = F.add(F.add(F.mul(ex, ex), F.mul(ex, ey)), F.mul(static_cast<Elem>(c), F.mul(ey, ey)));
                ok = v != 0;
            }
        if (ok)
            return static_cast<Elem>(c);
    }
    throw ConsistencyError("no anisotropic binary quadratic form found");
}

} // namespace

GramSpace standard_space(Kind kind, int n, const SmallField& F, int epsilon)
{
    if (n < 1)
        throw DomainError("standard_space: n must be positive");
    GramSpace s{F, n, FormKind::alternating, Matrix(n, n), {}};
    switch (kind) {
    case Kind::symplectic:
        if (n % 2)
            throw DomainError("standard_space: symplectic spaces have even dimension");
        for (int i = 0; i < n; i += 2) {
            s.gram.at(i, i + 1) = 1;
            s.gram.at(i + 1, i) = F.neg(1);
        }
        break;
    case Kind::unitary:
        if (!F.has_involution())
            throw DomainError("standard_space: hermitian forms need a field of order 4 or 9");
        s.kind = FormKind::hermitian;
        s.gram = Matrix::identity(n);
        break;
    case Kind::orthogonal: {
        if (n % 2 == 0 && epsilon != 1 && epsilon != -1)
            throw DomainError("standard_space: even orthogonal spaces need epsilon = +1 or -1");
        s.kind = FormKind::quadratic;
        s.quad_diag.assign(static_cast<std::size_t>(n), 0);
        const int planes = n % 2 ? n / 2 : (epsilon == 1 ? n / 2 : n / 2 - 1);
        for (int p = 0; p < planes; ++p) {
            s.gram.at(2 * p, 2 * p + 1) = 1;
            s.gram.at(2 * p + 1, 2 * p) = 1;
        }
        const int k = 2 * planes;
        if (n % 2) {
            s.quad_diag[static_cast<std::size_t>(k)] = 1;
            s.gram.at(k, k) = F.add(1, 1);
        } else if (epsilon == -1) {
            const Elem c = anisotropic_constant(F);
            s.quad_diag[static_cast<std::size_t>(k)] = 1;
            s.quad_diag[static_cast<std::size_t>(k + 1)] = c;
            s.gram.at(k, k) = F.add(1, 1);
            s.gram.at(k + 1, k + 1) = F.add(c, c);
            s.gram.at(k, k + 1) = 1;
            s.gram.at(k + 1, k) = 1;
        }
        break;
    }
    }
    s.validate();
    return s;
}

GramSpace identity_symmetric_bilinear(int n, const SmallField& F)
{
    GramSpace s{F, n, FormKind::symmetric_bilinear, Matrix::identity(n), {}};
    s.validate();
    return s;
}

int witt_type(const GramSpace& s0)
{
    if (s0.kind != FormKind::quadratic || s0.n % 2 || !s0.is_nondegenerate())
        throw DomainError("witt_type: needs a non-degenerate quadratic space of even dimension");
    GramSpace s = s0;
    const SmallField& F = s.field;
    while (s.n > 0) {
        std::vector<Elem> v;
        for_each_nonzero_vector(F, Matrix::identity(s.n), [&](const std::vector<Elem>& x) {
            if (s.f(x) == 0) {
                v = x;
                return true;
            }
            return false;
        });
        if (v.empty()) {
            if (s.n != 2)
                throw ConsistencyError("witt_type: anisotropic kernel of dimension " + std::to_string(s.n));
            return -1;
        }
        std::vector<Elem> w(static_cast<std::size_t>(s.n), 0);
        for (int k = 0; k < s.n; ++k) {
            std::vector<Elem> e(static_cast<std::size_t>(s.n), 0);
            e[static_cast<std::size_t>(k)] = 1;
            const Elem b = s.B(v, e);
            if (b) {
                w[static_cast<std::size_t>(k)] = F.inv(b);
                break;
            }
        }
        const Elem fw = s.f(w);
        for (int k = 0; k < s.n; ++k)
            w[static_cast<std::size_t>(k)] =
                F.sub(w[static_cast<std::size_t>(k)], F.mul(fw, v[static_cast<std::size_t>(k)]));
        if (s.f(w) != 0 || s.B(v, w) != 1)
            throw ConsistencyError("witt_type: hyperbolic pair construction failed");
        Matrix conds(2, s.n);
        for (int j = 0; j < s.n; ++j) {
            std::vector<Elem> e(static_cast<std::size_t>(s.n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            conds.at(0, j) = s.B(e, v);
            conds.at(1, j) = s.B(e, w);
        }
        s = s.restrict_to(nullspace(F, conds));
    }
    return 1;
}

Matrix random_invertible(const SmallField& F, int n, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(0, F.order() - 1);
    while (true) {
        Matrix m(n, n);
        for (auto& x : m.a)
            x = static_cast<Elem>(d(rng));
        if (rank(F, m) == n)
            return m;
    }
}

void FlagOfForms::validate() const
{
    auto fail = [](const std::string& what) { throw ConsistencyError("FlagOfForms: " + what); };
    if (dims.empty() || dims.size() != grams.size())
        fail("shape");
    if (kind != FormKind::alternating && kind != FormKind::hermitian)
        fail("forms must be alternating or hermitian");
    int prev = 0;
    for (std::size_t r = 0; r < dims.size(); ++r) {
        if (dims[r] <= prev)
            fail("radical dimensions must increase");
        GramSpace layer{field, dims[r], kind, grams[r], {}};
        layer.validate();
        const Matrix rad = layer.radical();
        if (rad.rows != prev)
            fail("radical of layer " + std::to_string(r + 1) + " has the wrong dimension");
        for (int i = 0; i < rad.rows; ++i)
            for (int j = prev; j < dims[r]; ++j)
                if (rad.at(i, j))
                    fail("radical of layer " + std::to_string(r + 1) + " is not the previous member");
        prev = dims[r];
    }
}

namespace {

bool flag_nondegenerate(const SmallField& F, FormKind kind, const std::vector<int>& dims,
                        const std::vector<Matrix>& grams, const Matrix& U)
{
    const std::size_t k = dims.size() - 1;
    if (k == 0)
        return U.rows == 0 || rank(F, sesquilinear_restrict(F, kind, grams[0], U)) == U.rows;
    for (std::size_t t = 0; t < k; ++t) {
        const int d = dims[t];
        const std::vector<int> sub_dims(dims.begin(), dims.begin() + static_cast<long>(t) + 1);
        const std::vector<Matrix> sub_grams(grams.begin(), grams.begin() + static_cast<long>(t) + 1);
        if (!flag_nondegenerate(F, kind, sub_dims, sub_grams, intersect_leading(F, U, d)))
            return false;
        std::vector<int> q_dims;
        std::vector<Matrix> q_grams;
        for (std::size_t s = t + 1; s <= k; ++s) {
            const int size = dims[s] - d;
            Matrix g(size, size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    g.at(i, j) = grams[s].at(d + i, d + j);
            q_dims.push_back(size);
            q_grams.push_back(std::move(g));
        }
        if (!flag_nondegenerate(F, kind, q_dims, q_grams, project_trailing(F, U, d)))
            return false;
    }
    return true;
}

Matrix standard_block(Kind kind, int size, const SmallField& F) { return standard_space(kind, size, F).gram; }

} // namespace

bool FlagOfForms::is_nondegenerate(const Matrix& basis) const
{
    return flag_nondegenerate(field, kind, dims, grams, basis);
}

FlagOfForms standard_flag_of_forms(Kind kind, int n, Subset I, const SmallField& F)
{
    if (kind == Kind::orthogonal)
        throw DomainError("standard_flag_of_forms: symplectic or unitary only");
    FormedSpaceSpec::make(kind, n, 0, I);
    FlagOfForms b{F, kind == Kind::unitary ? FormKind::hermitian : FormKind::alternating, I.elements(), {}};
    b.dims.push_back(n);
    int prev = 0;
    for (int d : b.dims) {
        Matrix g(d, d);
        const Matrix block = standard_block(kind, d - prev, F);
        for (int i = 0; i < d - prev; ++i)
            for (int j = 0; j < d - prev; ++j)
                g.at(prev + i, prev + j) = block.at(i, j);
        b.grams.push_back(std::move(g));
        prev = d;
    }
    b.validate();
    return b;
}

void OpsBudget::spend(std::uint64_t k)
{
    spent_ += k;
    if (spent_ > max_)
        throw ResourceError("oracle: more than " + std::to_string(max_) + " operations");
}

mpz_class subspace_count(int order, int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    const mpq_class v = gaussian_binomial(n, k).evaluate_at(order);
    return v.get_num();
}

namespace {

void require_feasible(int order, int n, int k)
{
    if (subspace_count(order, n, k) > kMaxSubspaces)
        throw ResourceError("oracle: too many " + std::to_string(k) + "-dimensional subspaces of F_" +
                            std::to_string(order) + "^" + std::to_string(n));
}

} // namespace

void for_each_subspace(const SmallField& F, int n, int k, const std::function<void(const Matrix&)>& fn)
{
    if (k < 0 || k > n)
        return;
    require_feasible(F.order(), n, k);
    std::vector<int> piv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        piv[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<std::pair<int, int>> free;
        std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
        for (int p : piv)
            is_piv[static_cast<std::size_t>(p)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                if (!is_piv[static_cast<std::size_t>(c)])
                    free.emplace_back(r, c);
        Matrix m(k, n);
        for (int r = 0; r < k; ++r)
            m.at(r, piv[static_cast<std::size_t>(r)]) = 1;
        while (true) {
            fn(m);
            std::size_t i = 0;
            while (i < free.size() && m.at(free[i].first, free[i].second) == F.order() - 1)
                m.at(free[i].first, free[i].second) = 0, ++i;
            if (i == free.size())
                break;
            ++m.at(free[i].first, free[i].second);
        }
        int i = k - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void for_each_extension(const SmallField& F, const Matrix& w0, int k, const std::function<void(const Matrix&)>& fn)
{
    Matrix w = w0;
    const std::vector<int> piv = rref(F, w);
    const int a = w.rows;
    const int n = w.cols;
    std::vector<int> rest;
    for (int c = 0; c < n; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c))
            rest.push_back(c);
    for_each_subspace(F, n - a, k - a, [&](const Matrix& s) {
        Matrix u(k, n);
        std::copy(w.a.begin(), w.a.end(), u.a.begin());
        for (int r = 0; r < s.rows; ++r)
            for (int c = 0; c < s.cols; ++c)
                u.at(a + r, rest[static_cast<std::size_t>(c)]) = s.at(r, c);
        fn(u);
    });
}

mpz_class count_flags(const SmallField& F, int n, Subset J, const SubspacePredicate& nondeg, std::uint64_t max_ops)
{
    if (!J.is_subset_of(Subset::full(n - 1)))
        throw DomainError("count_flags: flag type not inside [n-1]");
    const std::vector<int> js = J.elements();
    int prev = 0;
    for (int j : js) {
        require_feasible(F.order(), n - prev, j - prev);
        prev = j;
    }
    OpsBudget budget(max_ops);
    mpz_class total = 0;
    std::function<void(std::size_t, const Matrix&)> extend = [&](std::size_t level, const Matrix& w) {
        if (level == js.size()) {
            ++total;
            return;
        }
        for_each_extension(F, w, js[level], [&](const Matrix& u) {
            budget.spend();
            if (nondeg(u))
                extend(level + 1, u);
        });
    };
    extend(0, Matrix(0, n));
    return total;
}

mpz_class count_flags(const GramSpace& s, Subset J, std::uint64_t max_ops)
{
    return count_flags(
        s.field, s.n, J, [&](const Matrix& u) { return s.restrict_to(u).is_nondegenerate(); }, max_ops);
}

mpz_class count_flags(const FlagOfForms& b, Subset J, std::uint64_t max_ops)
{
    return count_flags(
        b.field, b.n(), J, [&](const Matrix& u) { return b.is_nondegenerate(u); }, max_ops);
}

mpz_class count_typed_subspaces(const GramSpace& s, int j, int delta, std::uint64_t max_ops)
{
    if (s.kind != FormKind::quadratic)
        throw DomainError("count_typed_subspaces: quadratic spaces only");
    if (j < 0 || j > s.n)
        throw DomainError("count_typed_subspaces: j out of range");
    if (j % 2 == 0 && delta != 1 && delta != -1)
        throw DomainError("count_typed_subspaces: delta must be +1 or -1 for even j");
    OpsBudget budget(max_ops);
    mpz_class total = 0;
    for_each_subspace(s.field, s.n, j, [&](const Matrix& u) {
        budget.spend();
        const GramSpace r = s.restrict_to(u);
        if (!r.is_nondegenerate())
            return;
        if (j % 2)
            ++total;
        else if ((j == 0 ? 1 : witt_type(r)) == delta)
            ++total;
    });
    return total;
}

std::vector<mpz_class> a3_counterexample_table(int field_order)
{
    const SmallField F(field_order);
    if (F.characteristic() != 2)
        throw DomainError("a3_counterexample_table: needs characteristic 2");
    const GramSpace s = identity_symmetric_bilinear(4, F);
    std::vector<mpz_class> out;
    for (Subset J : all_subsets(3))
        out.push_back(count_flags(s, J));
    return out;
}

} // namespace formedflags
