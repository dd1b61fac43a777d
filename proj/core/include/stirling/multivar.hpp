/// @file multivar.hpp
/// @brief Sparse multivariate polynomials over exact rationals, plus the
///        multivariate Eulerian generating polynomials obtained from
///        increasing (m+1)-ary trees with typed edges.

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "polynomial.hpp"

namespace stirling {

class MultiPoly {
public:
    using Expo = std::vector<unsigned>;

    explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Rat& c) {
        MultiPoly p(nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }

    static MultiPoly variable(unsigned nvars, unsigned index) {
        if (index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
        MultiPoly p(nvars);
        Expo e(nvars, 0);
        e[index] = 1;
        p.add_term(e, 1);
        return p;
    }

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    Rat coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Expo& e, const Rat& c) {
        if (e.size() != nvars_) throw std::invalid_argument("MultiPoly::add_term: arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_arity(o);
        MultiPoly out(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Expo e(nvars_);
                for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend MultiPoly operator*(const Rat& c, MultiPoly p) { return p.scale(c); }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Same polynomial viewed with a different variable count; shrinking is
    /// only allowed when the dropped variables are absent.
    MultiPoly resized(unsigned new_nvars) const {
        MultiPoly out(new_nvars);
        for (const auto& [e, c] : terms_) {
            Expo f(new_nvars, 0);
            for (unsigned i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (i >= new_nvars)
                    throw std::invalid_argument("MultiPoly::resized: dropped variable in use");
                f[i] = e[i];
            }
            out.add_term(f, c);
        }
        return out;
    }

    /// Image under the variable relabeling i -> perm[i].
    MultiPoly permuted(const std::vector<unsigned>& perm) const {
        if (perm.size() != nvars_) throw std::invalid_argument("MultiPoly::permuted: bad arity");
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Expo f(nvars_, 0);
            for (unsigned i = 0; i < nvars_; ++i) f[perm[i]] += e[i];
            out.add_term(f, c);
        }
        return out;
    }

    Rat evaluate(const std::vector<Rat>& at) const {
        if (at.size() != nvars_) throw std::invalid_argument("MultiPoly::evaluate: bad arity");
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned rep = 0; rep < e[i]; ++rep) term *= at[i];
            total += term;
        }
        return total;
    }

    /// Substitutes a univariate polynomial for every variable.
    Poly<Rat> substitute(const std::vector<Poly<Rat>>& at) const {
        if (at.size() != nvars_) throw std::invalid_argument("MultiPoly::substitute: bad arity");
        Poly<Rat> total;
        for (const auto& [e, c] : terms_) {
            Poly<Rat> term({c});
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned rep = 0; rep < e[i]; ++rep) term = term * at[i];
            total = total + term;
        }
        return total;
    }

    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (denominator(c) != 1) return false;
        return true;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    std::string str(const std::string& stem = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (unsigned i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*" << stem << i;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_arity(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    }

    unsigned nvars_;
    std::map<Expo, Rat> terms_;
};

/// Converts an exact-rational univariate polynomial with integral
/// coefficients to an IntPoly, complaining otherwise.
inline IntPoly to_int_poly(const Poly<Rat>& p) {
    IntPoly out;
    out.c.reserve(p.c.size());
    for (const auto& q : p.c) out.c.push_back(to_integer(q));
    out.trim();
    return out;
}

namespace detail {

struct TypedTreeDfs {
    unsigned m = 2;
    unsigned n = 0;
    std::vector<unsigned long> slots; // free slots per edge type, summed over vertices
    MultiPoly::Expo expo;
    Int mult = 1;
    MultiPoly* out = nullptr;

    void run(unsigned j) {
        if (j > n) {
            out->add_term(expo, Rat(mult));
            return;
        }
        for (unsigned type = 0; type <= m; ++type) {
            if (slots[type] == 0) continue;
            const Int saved = mult;
            mult *= slots[type];
            slots[type] -= 1;
            for (unsigned t2 = 0; t2 <= m; ++t2) slots[t2] += 1;
            expo[type] += 1;
            run(j + 1);
            expo[type] -= 1;
            for (unsigned t2 = 0; t2 <= m; ++t2) slots[t2] -= 1;
            slots[type] += 1;
            mult = saved;
        }
    }
};

} // namespace detail

/// Generating polynomial of increasing (m+1)-ary trees on {0..n} where an
/// edge occupying slot type i carries weight x_i.  Every vertex, including
/// the root, offers one slot of each type; a vertex entering the tree
/// consumes one slot and opens m+1 fresh ones, so only the per-type slot
/// counts matter and the search runs over type sequences with
/// multiplicities.  Homogeneous of degree n and symmetric in all variables.
inline MultiPoly multivariate_eulerian_q(unsigned m, unsigned n) {
    if (m < 1 || m > 3) throw std::invalid_argument("multivariate_eulerian_q: need 1 <= m <= 3");
    if (n > 8) throw GuardError("multivariate_eulerian_q capped at n <= 8");
    detail::TypedTreeDfs dfs;
    dfs.m = m;
    dfs.n = n;
    dfs.slots.assign(m + 1, 1);
    dfs.expo.assign(m + 1, 0);
    MultiPoly out(m + 1);
    dfs.out = &out;
    dfs.run(1);
    return out;
}

/// Same trees restricted to those whose lone root edge has type 0: the factor
/// x_0 times the unrestricted polynomial one size down.  Symmetric only in
/// x_1..x_m.
inline MultiPoly multivariate_eulerian_p(unsigned m, unsigned n) {
    if (n == 0) return MultiPoly::constant(m + 1, 1);
    return MultiPoly::variable(m + 1, 0) * multivariate_eulerian_q(m, n - 1);
}

} // namespace stirling
