/// @file sturm.hpp
/// @brief Sturm sequences, exact real-root counting and isolation.
///
/// Sequences are kept over the integers: each remainder is computed with an
/// even power of the divisor's leading coefficient (sign-safe) and stripped
/// of its integer content to control growth.

#pragma once

#include "stirling/numeric.hpp"
#include "stirling/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirling {

/// p / (x - a) for rational a with p(a) = 0, renormalized to Z[x].
inline IntPoly deflate_rat_root(const IntPoly& p, const Rat& a) {
    RatPoly q;
    q.c.assign(p.c.size() - 1, Rat(0));
    Rat carry = 0;
    for (size_t i = p.c.size(); i-- > 1;) {
        carry = Rat(p.c[i]) + a * carry;
        q.c[i - 1] = carry;
    }
    if (Rat(p.c[0]) + a * carry != 0) throw std::domain_error("deflate_rat_root: not a root");
    q.trim();
    Int lcm = 1;
    for (const auto& v : q.c) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    IntPoly out;
    out.c.reserve(q.c.size());
    for (const auto& v : q.c) out.c.push_back(numerator(v) * (lcm / denominator(v)));
    out.trim();
    return primitive_part(out);
}

class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& p) {
        if (p.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
        seq_.push_back(primitive_part(p));
        if (p.degree() >= 1) {
            seq_.push_back(primitive_part(p.derivative()));
            while (seq_.back().degree() >= 1) {
                IntPoly r = even_pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
                if (r.is_zero()) break;
                // strip content (a positive scalar, so signs are preserved)
                r = divide_exact_scalar(r, content(r));
                seq_.push_back(-r);
            }
        }
    }

    const std::vector<IntPoly>& polys() const { return seq_; }

    int variations_at(const Rat& x) const {
        int var = 0, last = 0;
        for (const auto& s : seq_) {
            const int sg = sign_of(s.template evaluate<Rat>(x));
            if (sg != 0) {
                if (last != 0 && sg != last) ++var;
                last = sg;
            }
        }
        return var;
    }

    int variations_at_pos_inf() const {
        int var = 0, last = 0;
        for (const auto& s : seq_) {
            const int sg = sign_of(s.lc());
            if (last != 0 && sg != last) ++var;
            last = sg;
        }
        return var;
    }

    int variations_at_neg_inf() const {
        int var = 0, last = 0;
        for (const auto& s : seq_) {
            int sg = sign_of(s.lc());
            if (s.degree() % 2 == 1) sg = -sg;
            if (last != 0 && sg != last) ++var;
            last = sg;
        }
        return var;
    }

    /// Distinct real roots in the open interval (a, b); requires nonzero
    /// endpoint values.
    int count_open(const Rat& a, const Rat& b) const {
        if (a >= b) return 0;
        return variations_at(a) - variations_at(b);
    }

    int count_all_real() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<IntPoly> seq_;
};

/// Distinct real roots of p in the open interval (a, b). Endpoint roots are
/// deflated away first, which leaves interior roots untouched.
inline int sturm_count(IntPoly p, Rat a, Rat b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    while (!p.is_zero() && p.degree() >= 1 && p.evaluate<Rat>(a) == 0) p = deflate_rat_root(p, a);
    while (!p.is_zero() && p.degree() >= 1 && p.evaluate<Rat>(b) == 0) p = deflate_rat_root(p, b);
    if (p.degree() < 1) return 0;
    return SturmSequence(p).count_open(a, b);
}

inline int count_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (p.degree() < 1) return 0;
    return SturmSequence(p).count_all_real();
}

/// Open isolating interval: endpoints are never roots.
struct RootInterval {
    Rat lo, hi;
};

/// A point near the middle of (lo, hi) at which p does not vanish.
inline Rat nonroot_split_point(const IntPoly& p, const Rat& lo, const Rat& hi) {
    Rat mid = (lo + hi) / 2;
    Rat step = (hi - lo) / 4;
    while (p.evaluate<Rat>(mid) == 0) {
        mid += step;
        step /= 2;
    }
    return mid;
}

/// Disjoint open isolating intervals for all roots of p inside (lo, hi),
/// sorted; each holds exactly one distinct root and has nonroot endpoints.
/// Requires p(lo) != 0 and p(hi) != 0.
inline std::vector<RootInterval> isolate_roots(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.evaluate<Rat>(lo) == 0 || p.evaluate<Rat>(hi) == 0)
        throw std::invalid_argument("isolate_roots: root at an endpoint");
    SturmSequence sturm(p);
    std::vector<RootInterval> out;
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> stack{{lo, hi, sturm.count_open(lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = nonroot_split_point(p, s.lo, s.hi);
        stack.push_back({s.lo, mid, sturm.count_open(s.lo, mid)});
        stack.push_back({mid, s.hi, sturm.count_open(mid, s.hi)});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

} // namespace stirling
