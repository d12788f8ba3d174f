/*
   Copyright 2026 the mzk authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MZK_FINITE_HPP
#define MZK_FINITE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mzk {

/// Arithmetic tables for F_q with q = p^k <= 81.  An element is an integer
/// in [0, q) whose base-p digits are the coefficients of a polynomial in
/// the field generator, reduced modulo the least monic irreducible of
/// degree k (candidates ordered by their coefficient tuple read as a
/// base-p integer; for q = 4 this is the usual x^2 = x + 1).
class finite_field {
public:
    explicit finite_field(int q) : q_(q) {
        if (q < 2 || q > 81) fail(errc::invalid_value, "field order must lie in [2, 81]");
        p_ = 2;
        while (q % p_ != 0) ++p_;
        k_ = 0;
        int m = q;
        while (m % p_ == 0) {
            m /= p_;
            ++k_;
        }
        if (m != 1) fail(errc::invalid_value, "field order must be a prime power");
        modulus_ = least_irreducible();
        build_tables();
    }

    int q() const { return q_; }
    int p() const { return p_; }
    int k() const { return k_; }
    /// Low coefficients c_0..c_{k-1} of the defining polynomial x^k + sum c_i x^i.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
    int inv(int a) const {
        if (a == 0) fail(errc::internal_contradiction, "inverse of zero in a finite field");
        return inv_[static_cast<std::size_t>(a)];
    }
    int pow(int a, long e) const {
        int r = 1;
        for (long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
        return d;
    }
    int from_digits(const std::vector<int>& d) const {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
        return a;
    }

private:
    // Remainder of u modulo a monic divisor, coefficients over F_p little-endian.
    static bool divisible(int p, const std::vector<int>& u, const std::vector<int>& div) {
        std::vector<int> rem = u;
        const std::size_t dd = div.size() - 1;
        while (rem.size() > dd) {
            int lead = rem.back();
            if (lead != 0) {
                std::size_t shift = rem.size() - 1 - dd;
                for (std::size_t j = 0; j < div.size(); ++j)
                    rem[shift + j] = ((rem[shift + j] - lead * div[j]) % p + p) % p;
            }
            rem.pop_back();
        }
        for (int c : rem)
            if (c != 0) return false;
        return true;
    }

    std::vector<int> least_irreducible() const {
        int pk = 1;
        for (int i = 0; i < k_; ++i) pk *= p_;
        for (int m = 0; m < pk; ++m) {
            std::vector<int> u(static_cast<std::size_t>(k_) + 1, 0);
            u[static_cast<std::size_t>(k_)] = 1;
            for (int i = 0, v = m; i < k_; ++i, v /= p_) u[static_cast<std::size_t>(i)] = v % p_;
            bool irreducible = true;
            for (int t = 1; irreducible && 2 * t <= k_; ++t) {
                int pt = 1;
                for (int i = 0; i < t; ++i) pt *= p_;
                for (int w = 0; w < pt && irreducible; ++w) {
                    std::vector<int> div(static_cast<std::size_t>(t) + 1, 0);
                    div[static_cast<std::size_t>(t)] = 1;
                    for (int i = 0, v = w; i < t; ++i, v /= p_)
                        div[static_cast<std::size_t>(i)] = v % p_;
                    if (divisible(p_, u, div)) irreducible = false;
                }
            }
            if (irreducible) {
                u.pop_back();
                return u;
            }
        }
        fail(errc::internal_contradiction, "no irreducible polynomial found");
    }

    int raw_mul(int a, int b) const {
        std::vector<int> da = digits(a), db = digits(b);
        std::vector<int> c(static_cast<std::size_t>(2 * k_ - 1), 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                c[static_cast<std::size_t>(i + j)] =
                    (c[static_cast<std::size_t>(i + j)] +
                     da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                    p_;
        // x^k is congruent to minus the low part of the modulus.
        for (int i = 2 * k_ - 2; i >= k_; --i) {
            int lead = c[static_cast<std::size_t>(i)];
            if (lead == 0) continue;
            c[static_cast<std::size_t>(i)] = 0;
            for (int j = 0; j < k_; ++j)
                c[static_cast<std::size_t>(i - k_ + j)] =
                    ((c[static_cast<std::size_t>(i - k_ + j)] -
                      lead * modulus_[static_cast<std::size_t>(j)]) %
                         p_ +
                     p_) %
                    p_;
        }
        c.resize(static_cast<std::size_t>(k_));
        return from_digits(c);
    }

    void build_tables() {
        add_.resize(static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_));
        mul_.resize(add_.size());
        neg_.resize(static_cast<std::size_t>(q_));
        inv_.assign(static_cast<std::size_t>(q_), 0);
        for (int a = 0; a < q_; ++a) {
            std::vector<int> da = digits(a);
            for (int b = 0; b < q_; ++b) {
                std::vector<int> s = digits(b);
                for (int i = 0; i < k_; ++i)
                    s[static_cast<std::size_t>(i)] =
                        (s[static_cast<std::size_t>(i)] + da[static_cast<std::size_t>(i)]) % p_;
                add_[static_cast<std::size_t>(a * q_ + b)] = from_digits(s);
                mul_[static_cast<std::size_t>(a * q_ + b)] = raw_mul(a, b);
            }
        }
        for (int a = 0; a < q_; ++a) {
            std::vector<int> d = digits(a);
            for (int i = 0; i < k_; ++i)
                d[static_cast<std::size_t>(i)] = (p_ - d[static_cast<std::size_t>(i)]) % p_;
            neg_[static_cast<std::size_t>(a)] = from_digits(d);
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    }

    int q_, p_, k_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Coordinates of an algebra element in the distinguished basis, each an
/// F_q element.
using algebra_element = std::vector<int>;

enum class scalar_tag { prime_field, full_field };

inline const char* to_string(scalar_tag t) {
    return t == scalar_tag::prime_field ? "prime_field" : "full_field";
}

/// Commutative unital F_q-algebra given by structure constants.  The laws
/// (commutativity, associativity, unit) are verified on all basis triples
/// at construction; invalid tables are rejected, never repaired.
class finite_algebra {
public:
    finite_algebra(finite_field F, std::vector<std::vector<algebra_element>> table,
                   algebra_element unit)
        : F_(std::move(F)), table_(std::move(table)), unit_(std::move(unit)) {
        d_ = static_cast<long>(table_.size());
        if (d_ > 6) fail(errc::invalid_value, "algebra dimension exceeds 6");
        if (static_cast<long>(unit_.size()) != d_)
            fail(errc::invalid_value, "unit vector length must equal the dimension");
        for (const auto& row : table_) {
            if (static_cast<long>(row.size()) != d_)
                fail(errc::invalid_value, "structure constants must form a d x d x d tensor");
            for (const auto& cell : row) {
                if (static_cast<long>(cell.size()) != d_)
                    fail(errc::invalid_value, "structure constants must form a d x d x d tensor");
                for (int c : cell)
                    if (c < 0 || c >= F_.q())
                        fail(errc::invalid_value, "structure constant outside the field");
            }
        }
        for (int c : unit_)
            if (c < 0 || c >= F_.q()) fail(errc::invalid_value, "unit coordinate outside the field");
        for (long i = 0; i < d_; ++i)
            for (long j = 0; j < i; ++j)
                if (table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                    table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                    fail(errc::invalid_value, "structure constants are not commutative");
        for (long i = 0; i < d_; ++i)
            for (long j = 0; j < d_; ++j)
                for (long l = 0; l < d_; ++l) {
                    algebra_element left = mul(mul(basis(i), basis(j)), basis(l));
                    algebra_element right = mul(basis(i), mul(basis(j), basis(l)));
                    if (left != right)
                        fail(errc::invalid_value, "structure constants are not associative");
                }
        for (long i = 0; i < d_; ++i) {
            if (mul(unit_, basis(i)) != basis(i) || mul(basis(i), unit_) != basis(i))
                fail(errc::invalid_value, "unit vector fails the unit law");
        }
    }

    const finite_field& field() const { return F_; }
    long dim() const { return d_; }
    const std::vector<std::vector<algebra_element>>& table() const { return table_; }
    const algebra_element& unit() const { return unit_; }
    algebra_element zero() const { return algebra_element(static_cast<std::size_t>(d_), 0); }
    algebra_element basis(long i) const {
        algebra_element e = zero();
        e[static_cast<std::size_t>(i)] = 1;
        return e;
    }

    long element_count() const {
        long n = 1;
        for (long i = 0; i < d_; ++i) n *= F_.q();
        return n;
    }
    long index_of(const algebra_element& a) const {
        long idx = 0;
        for (long i = d_ - 1; i >= 0; --i) idx = idx * F_.q() + a[static_cast<std::size_t>(i)];
        return idx;
    }
    algebra_element element_at(long idx) const {
        algebra_element a = zero();
        for (long i = 0; i < d_; ++i, idx /= F_.q())
            a[static_cast<std::size_t>(i)] = static_cast<int>(idx % F_.q());
        return a;
    }

    algebra_element add(const algebra_element& a, const algebra_element& b) const {
        algebra_element c = zero();
        for (long i = 0; i < d_; ++i)
            c[static_cast<std::size_t>(i)] =
                F_.add(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
        return c;
    }
    algebra_element scale(int s, const algebra_element& a) const {
        algebra_element c = zero();
        for (long i = 0; i < d_; ++i)
            c[static_cast<std::size_t>(i)] = F_.mul(s, a[static_cast<std::size_t>(i)]);
        return c;
    }
    algebra_element mul(const algebra_element& a, const algebra_element& b) const {
        algebra_element c = zero();
        for (long i = 0; i < d_; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (long j = 0; j < d_; ++j) {
                int s = F_.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
                if (s == 0) continue;
                const algebra_element& t =
                    table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (long l = 0; l < d_; ++l)
                    c[static_cast<std::size_t>(l)] =
                        F_.add(c[static_cast<std::size_t>(l)],
                               F_.mul(s, t[static_cast<std::size_t>(l)]));
            }
        }
        return c;
    }

    /// Dimension of the algebra seen as a vector space over the tagged scalars.
    long flat_dim(scalar_tag tag) const {
        return tag == scalar_tag::prime_field ? d_ * F_.k() : d_;
    }
    finite_field scalar_field(scalar_tag tag) const {
        return tag == scalar_tag::prime_field ? finite_field(F_.p()) : F_;
    }
    /// Coordinates over the tagged scalars: prime scalars see each F_q
    /// coordinate as k base-p digits.
    std::vector<int> flatten(const algebra_element& a, scalar_tag tag) const {
        if (tag == scalar_tag::full_field) return a;
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(flat_dim(tag)));
        for (int c : a)
            for (int dig : F_.digits(c)) flat.push_back(dig);
        return flat;
    }
    algebra_element unflatten(const std::vector<int>& flat, scalar_tag tag) const {
        if (tag == scalar_tag::full_field) return flat;
        algebra_element a = zero();
        for (long i = 0; i < d_; ++i) {
            std::vector<int> dig(flat.begin() + i * F_.k(), flat.begin() + (i + 1) * F_.k());
            a[static_cast<std::size_t>(i)] = F_.from_digits(dig);
        }
        return a;
    }

private:
    finite_field F_;
    std::vector<std::vector<algebra_element>> table_;
    algebra_element unit_;
    long d_ = 0;
};

/// Linear subspace of a finite algebra.  Basis rows are reduced echelon
/// coordinates over the tagged scalar field; `elements` lists every member
/// by index, sorted.
struct subspace {
    scalar_tag tag = scalar_tag::prime_field;
    std::vector<std::vector<int>> basis;
    std::vector<long> elements;

    long dim() const { return static_cast<long>(basis.size()); }
    bool contains(long index) const {
        return std::binary_search(elements.begin(), elements.end(), index);
    }
};

namespace detail {

/// In-place Gauss-Jordan over K; returns the nonzero rows in reduced
/// echelon form, pivots strictly increasing.
inline std::vector<std::vector<int>> rref(const finite_field& K,
                                          std::vector<std::vector<int>> rows) {
    std::size_t rank = 0;
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        int scale = K.inv(rows[rank][col]);
        for (std::size_t j = 0; j < n; ++j) rows[rank][j] = K.mul(scale, rows[rank][j]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int c = rows[r][col];
            for (std::size_t j = 0; j < n; ++j)
                rows[r][j] = K.sub(rows[r][j], K.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

inline long pivot_column(const std::vector<int>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<long>(j);
    return -1;
}

constexpr long enumeration_bound = 1 << 16;

}  // namespace detail

inline void require_enumerable(const finite_algebra& A) {
    if (A.element_count() > detail::enumeration_bound)
        fail(errc::too_large, "algebra too large for exhaustive element scans");
}

/// Canonical subspace spanned by the given elements over the tagged scalars.
inline subspace span_subspace(const finite_algebra& A, scalar_tag tag,
                              const std::vector<algebra_element>& generators) {
    finite_field K = A.scalar_field(tag);
    subspace S;
    S.tag = tag;
    std::vector<std::vector<int>> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) rows.push_back(A.flatten(g, tag));
    S.basis = detail::rref(K, std::move(rows));
    long count = 1;
    for (std::size_t r = 0; r < S.basis.size(); ++r) {
        count *= K.q();
        if (count > detail::enumeration_bound)
            fail(errc::too_large, "subspace too large to enumerate");
    }
    std::size_t n = static_cast<std::size_t>(A.flat_dim(tag));
    for (long c = 0; c < count; ++c) {
        std::vector<int> flat(n, 0);
        long rem = c;
        for (const auto& row : S.basis) {
            int s = static_cast<int>(rem % K.q());
            rem /= K.q();
            if (s == 0) continue;
            for (std::size_t j = 0; j < n; ++j) flat[j] = K.add(flat[j], K.mul(s, row[j]));
        }
        S.elements.push_back(A.index_of(A.unflatten(flat, tag)));
    }
    std::sort(S.elements.begin(), S.elements.end());
    return S;
}

/// All subspaces over the tagged scalars, canonically ordered by size then
/// element list.  Guarded: at most 2^16 subspaces.
inline std::vector<subspace> enumerate_subspaces(const finite_algebra& A, scalar_tag tag) {
    finite_field K = A.scalar_field(tag);
    long n = A.flat_dim(tag);
    // Gaussian binomial count; the coordinate subspaces alone give 2^n, so
    // passing the guard also keeps the pivot mask loop below 2^16 steps.
    bigint total = 0;
    for (long r = 0; r <= n; ++r) {
        bigint ways = 1;
        for (long i = 0; i < r; ++i) {
            bigint num = 1, den = 1;
            for (long t = 0; t < n - i; ++t) num *= K.q();
            for (long t = 0; t < i + 1; ++t) den *= K.q();
            ways = ways * (num - 1) / (den - 1);
        }
        total += ways;
        if (total > detail::enumeration_bound)
            fail(errc::too_large, "more than 2^16 subspaces to enumerate");
    }
    std::vector<subspace> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<long> pivots;
        for (long j = 0; j < n; ++j)
            if (mask & (1L << j)) pivots.push_back(j);
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (long j = pivots[i] + 1; j < n; ++j)
                if (!(mask & (1L << j))) free_pos.emplace_back(i, static_cast<std::size_t>(j));
        long combos = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t) combos *= K.q();
        for (long c = 0; c < combos; ++c) {
            std::vector<std::vector<int>> rows(pivots.size(),
                                               std::vector<int>(static_cast<std::size_t>(n), 0));
            for (std::size_t i = 0; i < pivots.size(); ++i)
                rows[i][static_cast<std::size_t>(pivots[i])] = 1;
            long rem = c;
            for (const auto& [ri, cj] : free_pos) {
                rows[ri][cj] = static_cast<int>(rem % K.q());
                rem /= K.q();
            }
            subspace S;
            S.tag = tag;
            S.basis = std::move(rows);
            long count = 1;
            for (std::size_t r = 0; r < S.basis.size(); ++r) count *= K.q();
            for (long e = 0; e < count; ++e) {
                std::vector<int> flat(static_cast<std::size_t>(n), 0);
                long v = e;
                for (const auto& row : S.basis) {
                    int s = static_cast<int>(v % K.q());
                    v /= K.q();
                    if (s == 0) continue;
                    for (std::size_t j = 0; j < flat.size(); ++j)
                        flat[j] = K.add(flat[j], K.mul(s, row[j]));
                }
                S.elements.push_back(A.index_of(A.unflatten(flat, tag)));
            }
            std::sort(S.elements.begin(), S.elements.end());
            out.push_back(std::move(S));
        }
    }
    std::sort(out.begin(), out.end(), [](const subspace& a, const subspace& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

/// Eventual behaviour of the power sequence a, a^2, a^3, ...: the powers
/// repeat with period pi from exponent tau on, so "all large exponents"
/// becomes a finite check against the cycle.
struct power_tail {
    algebra_element a;
    long tau = 0;
    long pi = 0;
    std::vector<long> cycle;   // indices of a^tau .. a^(tau+pi-1)
    std::vector<long> powers;  // indices of a^1 .. a^(tau+pi-1)
};

inline power_tail compute_power_tail(const finite_algebra& A, const algebra_element& a) {
    power_tail t;
    t.a = a;
    std::map<long, long> first_seen;
    std::vector<long> seq;
    algebra_element x = a;
    for (long m = 1;; ++m) {
        long idx = A.index_of(x);
        auto it = first_seen.find(idx);
        if (it != first_seen.end()) {
            t.tau = it->second;
            t.pi = m - it->second;
            t.powers = seq;
            t.cycle.assign(seq.begin() + (t.tau - 1), seq.end());
            return t;
        }
        first_seen.emplace(idx, m);
        seq.push_back(idx);
        x = A.mul(x, a);
    }
}

/// r(M): elements whose powers eventually all land in M, i.e. whose power
/// cycle is contained in M.
inline std::vector<long> radical_set(const finite_algebra& A, const subspace& M) {
    require_enumerable(A);
    std::vector<long> out;
    for (long i = 0; i < A.element_count(); ++i) {
        power_tail t = compute_power_tail(A, A.element_at(i));
        bool inside = true;
        for (long c : t.cycle)
            if (!M.contains(c)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(i);
    }
    return out;
}

/// Elements all of whose positive powers lie in M (not merely eventually).
inline std::vector<long> strict_radical_set(const finite_algebra& A, const subspace& M) {
    require_enumerable(A);
    std::vector<long> out;
    for (long i = 0; i < A.element_count(); ++i) {
        power_tail t = compute_power_tail(A, A.element_at(i));
        bool inside = true;
        for (long c : t.powers)
            if (!M.contains(c)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(i);
    }
    return out;
}

/// sr(M): elements a such that for every b, the products b a^m eventually
/// all land in M.  For m >= tau the powers run through the cycle, so the
/// eventual products are exactly b times the cycle elements.
inline std::vector<long> strong_radical_set(const finite_algebra& A, const subspace& M) {
    require_enumerable(A);
    std::vector<long> out;
    for (long i = 0; i < A.element_count(); ++i) {
        power_tail t = compute_power_tail(A, A.element_at(i));
        bool inside = true;
        for (long b = 0; b < A.element_count() && inside; ++b) {
            algebra_element bv = A.element_at(b);
            for (long c : t.cycle)
                if (!M.contains(A.index_of(A.mul(bv, A.element_at(c))))) {
                    inside = false;
                    break;
                }
        }
        if (inside) out.push_back(i);
    }
    return out;
}

/// M is a Mathieu-Zhao space iff the strong radical exhausts the radical.
/// Taking b = 1 shows sr(M) is always contained in r(M); that containment
/// is asserted, never assumed.
inline bool is_mz(const finite_algebra& A, const subspace& M) {
    std::vector<long> r = radical_set(A, M);
    std::vector<long> sr = strong_radical_set(A, M);
    for (long s : sr)
        if (!std::binary_search(r.begin(), r.end(), s))
            fail(errc::internal_contradiction, "strong radical escapes the radical");
    return r == sr;
}

inline std::vector<subspace> enumerate_mz(const finite_algebra& A, scalar_tag tag) {
    std::vector<subspace> out;
    for (subspace& S : enumerate_subspaces(A, tag))
        if (is_mz(A, S)) out.push_back(std::move(S));
    return out;
}

/// Sorted element sets closed under addition and under multiplication by
/// every element of the algebra; radical sets are tested against this.
inline bool is_ideal_set(const finite_algebra& A, const std::vector<long>& sorted) {
    require_enumerable(A);
    auto member = [&](long idx) {
        return std::binary_search(sorted.begin(), sorted.end(), idx);
    };
    for (long x : sorted)
        for (long y : sorted)
            if (!member(A.index_of(A.add(A.element_at(x), A.element_at(y))))) return false;
    for (long a = 0; a < A.element_count(); ++a) {
        algebra_element av = A.element_at(a);
        for (long x : sorted)
            if (!member(A.index_of(A.mul(av, A.element_at(x))))) return false;
    }
    return true;
}

inline std::vector<long> idempotents(const finite_algebra& A) {
    require_enumerable(A);
    std::vector<long> out;
    for (long i = 0; i < A.element_count(); ++i) {
        algebra_element e = A.element_at(i);
        if (A.mul(e, e) == e) out.push_back(i);
    }
    return out;
}

/// Element of Q[X]/(X^N) as its N coefficients.
using truncated_poly = std::vector<rational>;

/// Idempotents of Q[X]/(X^N) by triangular lifting: c_0^2 = c_0 forces
/// c_0 in {0, 1}, and the X^k coefficient of e^2 = e then pins each c_k
/// uniquely because 1 - 2 c_0 is a unit.  The lift lands on 0 and 1.
inline std::vector<truncated_poly> local_idempotents(long N) {
    if (N < 1) fail(errc::invalid_value, "local idempotents need N >= 1");
    std::vector<truncated_poly> out;
    for (int c0 : {0, 1}) {
        truncated_poly e(static_cast<std::size_t>(N), rational(0));
        e[0] = rational(c0);
        for (long k = 1; k < N; ++k) {
            rational inner(0);
            for (long i = 1; i < k; ++i)
                inner += e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(k - i)];
            e[static_cast<std::size_t>(k)] = inner / (rational(1) - rational(2) * rational(c0));
        }
        out.push_back(std::move(e));
    }
    return out;
}

/// Both sides of the idempotency criterion: the Mathieu-Zhao property on
/// the left, "A e lies in M for every idempotent e in M" on the right.
struct zhao_report {
    bool mz = false;
    bool idempotents_absorbed = false;
    bool agree = false;
};

inline zhao_report zhao_check(const finite_algebra& A, const subspace& M) {
    zhao_report rep;
    rep.mz = is_mz(A, M);
    rep.idempotents_absorbed = true;
    for (long e : idempotents(A)) {
        if (!M.contains(e)) continue;
        algebra_element ev = A.element_at(e);
        for (long a = 0; a < A.element_count() && rep.idempotents_absorbed; ++a)
            if (!M.contains(A.index_of(A.mul(A.element_at(a), ev))))
                rep.idempotents_absorbed = false;
    }
    rep.agree = rep.mz == rep.idempotents_absorbed;
    return rep;
}

/// The algebra seen over its prime field: basis vector i*k + t represents
/// x^t e_i, products follow by bilinearity.  Identity when k = 1.
inline finite_algebra restrict_scalars(const finite_algebra& A) {
    const finite_field& F = A.field();
    if (F.k() == 1) return A;
    finite_field P(F.p());
    long n = A.dim() * F.k();
    auto flat_basis = [&](long u) {
        algebra_element e = A.zero();
        e[static_cast<std::size_t>(u / F.k())] = F.pow(F.p(), u % F.k());
        return e;
    };
    std::vector<std::vector<algebra_element>> table(
        static_cast<std::size_t>(n), std::vector<algebra_element>(static_cast<std::size_t>(n)));
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v)
            table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                A.flatten(A.mul(flat_basis(u), flat_basis(v)), scalar_tag::prime_field);
    return finite_algebra(std::move(P), std::move(table),
                          A.flatten(A.unit(), scalar_tag::prime_field));
}

/// Quotient of a prime-field algebra by the span of `ideal_basis` (reduced
/// echelon rows).  `project` reduces modulo the ideal and reads off the
/// coordinates at the non-pivot columns.
struct quotient_map {
    finite_algebra Q;
    std::vector<std::vector<int>> ideal_basis;
    std::vector<long> free_columns;

    algebra_element project(const finite_algebra& A, const algebra_element& a) const {
        const finite_field& P = A.field();
        algebra_element v = a;
        for (const auto& row : ideal_basis) {
            long piv = detail::pivot_column(row);
            int c = v[static_cast<std::size_t>(piv)];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = P.sub(v[j], P.mul(c, row[j]));
        }
        algebra_element coords;
        coords.reserve(free_columns.size());
        for (long j : free_columns) coords.push_back(v[static_cast<std::size_t>(j)]);
        return coords;
    }
};

inline quotient_map make_quotient(const finite_algebra& A,
                                  const std::vector<std::vector<int>>& ideal_basis) {
    if (A.field().k() != 1)
        fail(errc::internal_contradiction, "quotients are formed over the prime field");
    long n = A.dim();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const auto& row : ideal_basis) is_pivot[static_cast<std::size_t>(detail::pivot_column(row))] = true;
    std::vector<long> frees;
    for (long j = 0; j < n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) frees.push_back(j);
    quotient_map partial{finite_algebra(A.field(), {}, {}), ideal_basis, frees};
    auto lift = [&](std::size_t t) {
        algebra_element e = A.zero();
        e[static_cast<std::size_t>(frees[t])] = 1;
        return e;
    };
    long m = static_cast<long>(frees.size());
    std::vector<std::vector<algebra_element>> table(
        static_cast<std::size_t>(m), std::vector<algebra_element>(static_cast<std::size_t>(m)));
    for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v)
            table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = partial.project(
                A, A.mul(lift(static_cast<std::size_t>(u)), lift(static_cast<std::size_t>(v))));
    return quotient_map{finite_algebra(A.field(), std::move(table), partial.project(A, A.unit())),
                        ideal_basis, frees};
}

/// Agreement between the Mathieu-Zhao property of M in A and of M/I in A/I.
struct quotient_report {
    bool mz_whole = false;
    bool mz_quotient = false;
    bool agree = false;
};

inline quotient_report quotient_mz_check(const finite_algebra& A, const subspace& I,
                                         const subspace& M) {
    require_enumerable(A);
    // One-sided absorption suffices: multiplication is commutative.
    for (long a = 0; a < A.element_count(); ++a) {
        algebra_element av = A.element_at(a);
        for (long x : I.elements)
            if (!I.contains(A.index_of(A.mul(av, A.element_at(x)))))
                fail(errc::not_an_ideal, "quotients require an ideal");
    }
    for (long x : I.elements)
        if (!M.contains(x)) fail(errc::not_contained, "the ideal must sit inside the subspace");

    finite_algebra Ap = restrict_scalars(A);
    std::vector<algebra_element> igens;
    for (long x : I.elements)
        igens.push_back(A.flatten(A.element_at(x), scalar_tag::prime_field));
    subspace Ip = span_subspace(Ap, scalar_tag::full_field, igens);
    quotient_map qm = make_quotient(Ap, Ip.basis);
    std::vector<algebra_element> qgens;
    for (long x : M.elements)
        qgens.push_back(qm.project(Ap, A.flatten(A.element_at(x), scalar_tag::prime_field)));
    subspace MQ = span_subspace(qm.Q, scalar_tag::full_field, qgens);

    quotient_report rep;
    rep.mz_whole = is_mz(A, M);
    rep.mz_quotient = is_mz(qm.Q, MQ);
    rep.agree = rep.mz_whole == rep.mz_quotient;
    return rep;
}

/// For every prime-field subspace M: the Mathieu-Zhao property holds
/// exactly when r(M) is an ideal.
struct equiv_report {
    long checked = 0;
    long failures = 0;
    bool all_hold() const { return failures == 0; }
};

inline equiv_report r_ideal_equiv_check(const finite_algebra& A) {
    equiv_report rep;
    for (const subspace& M : enumerate_subspaces(A, scalar_tag::prime_field)) {
        bool mz = is_mz(A, M);
        bool ideal = is_ideal_set(A, radical_set(A, M));
        ++rep.checked;
        if (mz != ideal) ++rep.failures;
    }
    return rep;
}

/// F_q as a one-dimensional algebra over itself.
inline finite_algebra make_field_algebra(int q) {
    finite_field F(q);
    return finite_algebra(std::move(F), {{{1}}}, {1});
}

/// F_q[x]/(x^N) with basis 1, x, ..., x^(N-1).
inline finite_algebra make_truncated_algebra(int q, long N) {
    if (N < 1) fail(errc::invalid_value, "truncated polynomial algebras need N >= 1");
    finite_field F(q);
    std::vector<std::vector<algebra_element>> table(
        static_cast<std::size_t>(N), std::vector<algebra_element>(static_cast<std::size_t>(N)));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            algebra_element cell(static_cast<std::size_t>(N), 0);
            if (i + j < N) cell[static_cast<std::size_t>(i + j)] = 1;
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cell;
        }
    algebra_element unit(static_cast<std::size_t>(N), 0);
    unit[0] = 1;
    return finite_algebra(std::move(F), std::move(table), std::move(unit));
}

/// F_q x F_q with componentwise operations.
inline finite_algebra make_product_algebra(int q) {
    finite_field F(q);
    return finite_algebra(std::move(F), {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, {1, 1});
}

}  // namespace mzk

#endif
