/* Crossing counts, exact lattice triangle counts, and the graded comparison
   of the two surgery orientations. */

#include "cfk/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cfk/errors.hpp"
#include "cfk/intmath.hpp"
#include "cfk/lens.hpp"

namespace cfk {

long long spin_c_crossings(long long p, long long q, long long i, long long s) {
    if (p <= 0) throw std::domain_error("spin_c_crossings: p must be positive");
    if (q == 0) throw std::domain_error("spin_c_crossings: q must be nonzero");
    if (i < 0 || i >= p) throw std::domain_error("spin_c_crossings: index out of range");
    if (q < 0) return spin_c_crossings(p, -q, i, -s);
    // t with q*s <= i + t*p <= q*(s+1) - 1
    long long lo = ceil_div(q * s - i, p);
    long long hi = floor_div(q * (s + 1) - 1 - i, p);
    return hi >= lo ? hi - lo + 1 : 0;
}

std::vector<long long> crossing_params(long long p, long long q, long long i, long long s) {
    if (q <= 0) throw std::domain_error("crossing_params: q must be positive");
    if (p <= 0 || i < 0 || i >= p) throw std::domain_error("crossing_params: bad arguments");
    long long lo = ceil_div(q * s - i, p);
    long long hi = floor_div(q * (s + 1) - 1 - i, p);
    std::vector<long long> out;
    for (long long t = lo; t <= hi; ++t) out.push_back(t);
    return out;
}

long long triangle_count(long long p, long long q, long long i, long long s, long long j) {
    if (q <= 0) throw std::domain_error("triangle_count: q must be positive");
    auto ts = crossing_params(p, q, i, s);
    if (j < 0 || j >= static_cast<long long>(ts.size()))
        throw std::domain_error("triangle_count: crossing does not exist");
    if (s == 0) return 0;
    long long t = ts[j];
    long long num = i + t * p;  // crossing height is -1/2 + num/q

    /* Count marked points strictly inside the triangle. Rows are half-integer
       heights y_m between the horizontal curve and the crossing; each row
       contributes columns u <= -1 on the far side of the line. The upward
       epsilon shift makes points on the line interior for s > 0; the rotated
       picture for s < 0 carries the shift downward, turning the closed bound
       strict. With |y_c| = |2*num - q| / (2q), row r gives the threshold
       alpha = ((2r+1)q - |2*num - q|) / (2p). */
    long long abs2 = 2 * num - q;
    if (s < 0) abs2 = -abs2;
    if (abs2 <= 0) throw invariant_error("triangle_count: crossing on the wrong side");

    long long k = 0;
    for (long long r = 0; (2 * r + 1) * q < abs2; ++r) {
        long long alpha_num = (2 * r + 1) * q - abs2;  // alpha = alpha_num / (2p)
        long long cnt;
        if (s > 0) {
            cnt = -ceil_div(alpha_num, 2 * p);          // u in [ceil(alpha), -1]
        } else {
            cnt = -1 - floor_div(alpha_num, 2 * p);     // u in (alpha, -1]
        }
        if (cnt > 0) k += cnt;
    }
    return k;
}

long long total_rank(long long p, long long q, long long m, long long n) {
    long long a = p - m * q;
    if (a < 0) a = -a;
    long long b = n * (q < 0 ? -q : q);
    return a + b;
}

GradedSurgeryComparison graded_surgery(const CurveProfile& profile, SlopePair slope) {
    if (slope.p <= 0 || slope.q <= 0)
        throw std::domain_error("graded_surgery: slope must have p, q > 0");
    if (std::gcd(slope.p, slope.q) != 1)
        throw std::domain_error("graded_surgery: slope must be coprime");
    if (profile.epsilon != 0 || !profile.box_class || !profile.e)
        throw std::domain_error(
            "graded_surgery: profile must be box-class with epsilon = 0 "
            "(exotic or non-simple summands are unsupported)");

    const long long p = slope.p, q = slope.q;
    GradedSurgeryComparison cmp;
    cmp.slope = slope;
    cmp.spin_c.resize(p);

    long long generators = 0;
    for (long long i = 0; i < p; ++i) {
        SpinCGradings& sc = cmp.spin_c[i];
        sc.d_plus = d_invariant(p, q, i);
        sc.d_minus = -sc.d_plus;
        sc.multiset_plus.push_back(sc.d_plus);    // distinguished generator, M_rel = 0
        sc.multiset_minus.push_back(sc.d_minus);
        generators += 1;

        for (const auto& [sd, count] : *profile.e) {
            const auto [s, dgr] = sd;
            auto ts = crossing_params(p, q, i, s);
            long long abs_s = s < 0 ? -s : s;
            for (long long j = 0; j < static_cast<long long>(ts.size()); ++j) {
                long long k = triangle_count(p, q, i, s, j);
                long long m_rel = -1 + 2 * k + abs_s - dgr;       // right vertical segment
                long long shift = 1 - 2 * abs_s - 4 * k;          // grading change under reflection
                for (long long cpy = 0; cpy < count; ++cpy) {
                    sc.multiset_plus.push_back(sc.d_plus + Rational(m_rel));
                    sc.multiset_plus.push_back(sc.d_plus + Rational(m_rel + 1));
                    sc.multiset_minus.push_back(sc.d_minus + Rational(m_rel + shift));
                    sc.multiset_minus.push_back(sc.d_minus + Rational(m_rel + 1 + shift));
                    generators += 2;
                }
            }
        }
        std::sort(sc.multiset_plus.begin(), sc.multiset_plus.end());
        std::sort(sc.multiset_minus.begin(), sc.multiset_minus.end());
    }

    long long n_total = 0;
    for (const auto& [s, count] : *profile.n) n_total += count;
    if (generators != total_rank(p, q, profile.m, n_total))
        throw invariant_error("graded_surgery: generator count disagrees with the rank formula");

    // match iff a permutation of spin-c indices aligns the graded multisets:
    // group indices by sorted multiset and compare group sizes
    std::map<std::vector<Rational>, std::vector<int>> plus_groups, minus_groups;
    for (long long i = 0; i < p; ++i) {
        plus_groups[cmp.spin_c[i].multiset_plus].push_back(static_cast<int>(i));
        minus_groups[cmp.spin_c[i].multiset_minus].push_back(static_cast<int>(i));
    }
    cmp.match = true;
    for (const auto& [key, members] : plus_groups) {
        auto it = minus_groups.find(key);
        if (it == minus_groups.end() || it->second.size() != members.size()) {
            cmp.match = false;
            break;
        }
    }
    if (cmp.match) {
        std::vector<int> sigma(p, 0);
        for (const auto& [key, members] : plus_groups) {
            const auto& targets = minus_groups.at(key);
            for (size_t k = 0; k < members.size(); ++k) sigma[members[k]] = targets[k];
        }
        cmp.sigma = std::move(sigma);
    }
    return cmp;
}

bool figure_eight_balance(const std::map<std::pair<int, int>, long long>& census) {
    std::map<int, long long> lhs, rhs;
    for (const auto& [sd, count] : census) {
        const auto [s, d] = sd;
        if (count == 0) continue;
        if (s == 0) {
            lhs[d] += count;
        } else {
            long long width = static_cast<long long>(s) * s - 1;
            for (long long D = d - width; D <= d + width; ++D) rhs[D] += count;
        }
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    return lhs == rhs;
}

}  // namespace cfk
