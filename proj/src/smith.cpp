#include "confspace/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "confspace/errors.hpp"

namespace confspace {

namespace {

using Index = Eigen::Index;

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Smallest |entry| in A[t:, t:], leftmost column first then topmost row.
bool find_pivot(const IntMatrix& A, Index t, Index& pi, Index& pj) {
    bool found = false;
    BigInt best;
    for (Index j = t; j < A.cols(); ++j)
        for (Index i = t; i < A.rows(); ++i) {
            if (A(i, j) == 0)
                continue;
            BigInt a = abs_big(A(i, j));
            if (!found || a < best) {
                best = std::move(a);
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SNFResult smith_normal_form(const SparseIntMatrix& A) { return smith_normal_form(A.to_dense()); }

SNFResult smith_normal_form(const IntMatrix& input) {
    IntMatrix A = input;
    const Index m = A.rows(), n = A.cols();
    IntMatrix U = IntMatrix::Identity(m, m);
    IntMatrix V = IntMatrix::Identity(n, n);
    SNFResult out;

    for (Index t = 0; t < std::min(m, n); ++t) {
        Index pi = 0, pj = 0;
        for (;;) {
            if (!find_pivot(A, t, pi, pj))
                break;
            if (pi != t) {
                A.row(pi).swap(A.row(t));
                U.row(pi).swap(U.row(t));
            }
            if (pj != t) {
                A.col(pj).swap(A.col(t));
                V.col(pj).swap(V.col(t));
            }
            bool clean = true;
            for (Index i = t + 1; i < m; ++i) {
                if (A(i, t) == 0)
                    continue;
                BigInt q = A(i, t) / A(t, t);
                if (q != 0) {
                    A.row(i) -= q * A.row(t);
                    U.row(i) -= q * U.row(t);
                }
                if (A(i, t) != 0)
                    clean = false;
            }
            for (Index j = t + 1; j < n; ++j) {
                if (A(t, j) == 0)
                    continue;
                BigInt q = A(t, j) / A(t, t);
                if (q != 0) {
                    A.col(j) -= q * A.col(t);
                    V.col(j) -= q * V.col(t);
                }
                if (A(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // divisibility of the remaining block
            bool divides = true;
            for (Index j = t + 1; j < n && divides; ++j)
                for (Index i = t + 1; i < m; ++i)
                    if (A(i, j) % A(t, t) != 0) {
                        A.row(t) += A.row(i);
                        U.row(t) += U.row(i);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (A(t, t) == 0)
            break;
        if (A(t, t) < 0) {
            A.row(t) = -A.row(t);
            U.row(t) = -U.row(t);
        }
        out.diagonal.push_back(A(t, t));
    }
    out.U = std::move(U);
    out.V = std::move(V);
    return out;
}

BigInt determinant(IntMatrix M) {
    if (M.rows() != M.cols())
        throw DomainError("determinant of a non-square matrix");
    const Index n = M.rows();
    if (n == 0)
        return 1;
    BigInt sign = 1, prev = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (M(k, k) == 0) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i)
                if (M(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return 0;
            M.row(k).swap(M.row(swap_row));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

bool verify_snf(const IntMatrix& A, const SNFResult& snf) {
    const Index m = A.rows(), n = A.cols();
    if (snf.U.rows() != m || snf.U.cols() != m || snf.V.rows() != n || snf.V.cols() != n)
        return false;
    IntMatrix D = IntMatrix::Zero(m, n);
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        if (snf.diagonal[i] <= 0)
            return false;
        if (i + 1 < snf.diagonal.size() && snf.diagonal[i + 1] % snf.diagonal[i] != 0)
            return false;
        D(static_cast<Index>(i), static_cast<Index>(i)) = snf.diagonal[i];
    }
    if (IntMatrix(snf.U * A * snf.V) != D)
        return false;
    return abs_big(determinant(snf.U)) == 1 && abs_big(determinant(snf.V)) == 1;
}

namespace {

using SparseRow = std::vector<std::pair<std::ptrdiff_t, BigInt>>;

const BigInt* row_entry(const SparseRow& row, std::ptrdiff_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::ptrdiff_t c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

/// target -= factor * source
SparseRow axpy(const SparseRow& target, const BigInt& factor, const SparseRow& source) {
    SparseRow out;
    out.reserve(target.size() + source.size());
    auto a = target.begin(), b = source.begin();
    while (a != target.end() || b != source.end()) {
        if (b == source.end() || (a != target.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == target.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            BigInt v = a->second - factor * b->second;
            if (v != 0)
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace

std::vector<BigInt> invariant_factors(const SparseIntMatrix& A) {
    const auto m = static_cast<std::size_t>(A.rows());
    const auto n = static_cast<std::size_t>(A.cols());
    std::vector<SparseRow> rows(m);
    std::vector<std::vector<std::size_t>> col_rows(n);
    for (const auto& t : A.entries()) {
        rows[static_cast<std::size_t>(t.row())].emplace_back(t.col(), t.value());
        col_rows[static_cast<std::size_t>(t.col())].push_back(static_cast<std::size_t>(t.row()));
    }
    std::vector<bool> alive(m, true);
    std::size_t unit_pivots = 0;

    std::vector<std::size_t> pending(n);
    for (std::size_t c = 0; c < n; ++c)
        pending[c] = c;

    for (;;) {
        bool progress = false;
        std::vector<std::size_t> deferred;
        for (auto c : pending) {
            auto& list = col_rows[c];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            std::erase_if(list, [&](std::size_t r) {
                return !alive[r] || row_entry(rows[r], static_cast<std::ptrdiff_t>(c)) == nullptr;
            });
            if (list.empty())
                continue;
            std::size_t pivot = m;
            for (auto r : list) {
                const BigInt& v = *row_entry(rows[r], static_cast<std::ptrdiff_t>(c));
                if (v != 1 && v != -1)
                    continue;
                if (pivot == m || rows[r].size() < rows[pivot].size())
                    pivot = r;
            }
            if (pivot == m) {
                deferred.push_back(c);
                continue;
            }
            const BigInt pv = *row_entry(rows[pivot], static_cast<std::ptrdiff_t>(c));
            for (auto r : list) {
                if (r == pivot)
                    continue;
                BigInt factor = *row_entry(rows[r], static_cast<std::ptrdiff_t>(c)) * pv;
                rows[r] = axpy(rows[r], factor, rows[pivot]);
                for (const auto& [col, v] : rows[pivot])
                    if (static_cast<std::size_t>(col) != c)
                        col_rows[static_cast<std::size_t>(col)].push_back(r);
            }
            alive[pivot] = false;
            rows[pivot].clear();
            list.clear();
            ++unit_pivots;
            progress = true;
        }
        pending = std::move(deferred);
        if (!progress || pending.empty())
            break;
    }

    std::vector<BigInt> factors(unit_pivots, BigInt(1));
    std::vector<std::size_t> rest_rows;
    std::set<std::ptrdiff_t> rest_cols;
    for (std::size_t r = 0; r < m; ++r)
        if (alive[r] && !rows[r].empty()) {
            rest_rows.push_back(r);
            for (const auto& e : rows[r])
                rest_cols.insert(e.first);
        }
    if (rest_rows.empty())
        return factors;
    std::map<std::ptrdiff_t, Index> col_pos;
    for (auto c : rest_cols)
        col_pos.emplace(c, static_cast<Index>(col_pos.size()));
    IntMatrix rest = IntMatrix::Zero(static_cast<Index>(rest_rows.size()),
                                     static_cast<Index>(rest_cols.size()));
    for (std::size_t i = 0; i < rest_rows.size(); ++i)
        for (const auto& [c, v] : rows[rest_rows[i]])
            rest(static_cast<Index>(i), col_pos.at(c)) = v;
    auto snf = smith_normal_form(rest);
    factors.insert(factors.end(), snf.diagonal.begin(), snf.diagonal.end());
    return factors;
}

SolveOutcome solve_integer(const SparseIntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows())
        throw DomainError("solve_integer: right-hand side has length " + std::to_string(b.size()) +
                          " but the matrix has " + std::to_string(A.rows()) + " rows");
    auto snf = smith_normal_form(A);
    IntVector c = snf.U * b;
    const auto r = snf.rank();
    for (std::size_t i = 0; i < static_cast<std::size_t>(c.size()); ++i) {
        const auto ii = static_cast<Index>(i);
        const bool fails = i < r ? (c(ii) % snf.diagonal[i] != 0) : (c(ii) != 0);
        if (fails) {
            InfeasibilityCertificate cert;
            cert.u = snf.U.row(ii).transpose();
            cert.modulus = i < r ? snf.diagonal[i] : BigInt(0);
            cert.index = i;
            return cert;
        }
    }
    IntVector y = IntVector::Zero(A.cols());
    for (std::size_t i = 0; i < r; ++i)
        y(static_cast<Index>(i)) = c(static_cast<Index>(i)) / snf.diagonal[i];
    IntegerSolution sol{snf.V * y};
    if (!verify_solution(A, b, sol.x))
        throw std::logic_error("solve_integer: witness failed verification");
    return sol;
}

bool verify_solution(const SparseIntMatrix& A, const IntVector& b, const IntVector& x) {
    return x.size() == A.cols() && A.multiply(x) == b;
}

bool verify_certificate(const SparseIntMatrix& A, const IntVector& b,
                        const InfeasibilityCertificate& cert) {
    if (cert.u.size() != A.rows())
        return false;
    IntVector uA = A.transpose().multiply(cert.u);
    BigInt ub = cert.u.dot(b);
    if (cert.modulus == 0)
        return uA == IntVector::Zero(uA.size()) && ub != 0;
    for (Index j = 0; j < uA.size(); ++j)
        if (uA(j) % cert.modulus != 0)
            return false;
    return ub % cert.modulus != 0;
}

} // namespace confspace
