#include "partid/families.hpp"

#include <stdexcept>
#include <string>

#include "partid/checked.hpp"

namespace partid {

long long ClassVector::nonmultiple_count() const {
    long long p = 0;
    for (long long c : residue_counts) p += c;
    return p;
}

std::string ClassVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < residue_counts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(residue_counts[i]);
    }
    out += ";" + std::to_string(k) + ")";
    return out;
}

bool is_in_C_t(const Partition& p, long long t) {
    if (t <= 2) throw std::invalid_argument("C_t requires t > 2");
    for (long long v : p.parts()) {
        long long r = v % (2 * t);
        if (v % t != 0 && r != t - 1 && r != t + 1) return false;
    }
    return true;
}

bool d_t_adjacent_ok(long long x, long long y, long long t) {
    if (x - y >= t + 1) return true;
    if (x % t == 0 && y % t == 0) return true;
    return (x + y) % (2 * t) == 0;
}

bool is_in_D_t(const Partition& p, long long t) {
    if (t <= 2) throw std::invalid_argument("D_t requires t > 2");
    const auto& parts = p.parts();
    for (long long v : parts) {
        if (v <= 1) return false;
        long long r = v % t;
        if (r != 0 && r != 1 && r != t - 1) return false;
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (!d_t_adjacent_ok(parts[i], parts[i + 1], t)) return false;
    return true;
}

bool is_in_C_st(const Partition& p, const SemigroupParams& params) {
    for (long long v : p.parts())
        if (v % params.s() != 0 && v % params.t() != 0) return false;
    return true;
}

std::vector<long long> d0_f_values(const Partition& p, long long t) {
    const auto& parts = p.parts();
    long long m = static_cast<long long>(parts.size());
    std::vector<long long> positions;  // 1-based positions of parts not = 0 mod t
    for (long long i = 0; i < m; ++i)
        if (parts[static_cast<std::size_t>(i)] % t != 0) positions.push_back(i + 1);
    long long count = static_cast<long long>(positions.size());
    std::vector<long long> f(static_cast<std::size_t>(count));
    // f_j = d_{i_j} - (m - i_j - (p - j)) t ; the parenthesis counts the
    // multiples of t sitting to the right of position i_j.
    for (long long j = 1; j <= count; ++j) {
        long long pos = positions[static_cast<std::size_t>(j - 1)];
        long long mult_after = m - pos - (count - j);
        f[static_cast<std::size_t>(j - 1)] =
            parts[static_cast<std::size_t>(pos - 1)] - mult_after * t;
    }
    return f;
}

bool d0_holds(const std::vector<long long>& parts, const SemigroupParams& params) {
    long long s = params.s(), t = params.t();
    std::vector<long long> f = d0_f_values(Partition(parts), t);
    if (f.empty()) return true;
    long long t_mod_s = mod_floor(t, s);
    long long last = mod_floor(f.back(), s);
    if (last != 0 && last != t_mod_s) return false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        long long d = mod_floor(f[i] - f[i + 1], s);
        if (d != 0 && d != t_mod_s) return false;
    }
    return true;
}

bool d2_holds(const std::vector<long long>& parts, long long t) {
    long long m = static_cast<long long>(parts.size());
    for (long long i = 1; i <= m; ++i) {
        long long d = parts[static_cast<std::size_t>(i - 1)];
        if (d % t == 0 && d <= t * (m - i)) return false;
    }
    return true;
}

// Proximity condition on a D-side candidate, phrased on the staircase-reduced
// values c_i = d_i - (m - i) t.  A multiple of t at position i must sit where
// the insertion step of the constructive map could have left it: every earlier
// non-multiple has c strictly larger, every earlier multiple has c at least as
// large, and the immediate successor has c no larger.  The non-multiples must
// in turn admit the row reconstruction forced by their residues mod s: peeling
// the reconstructed rows off the f-values has to leave a strictly decreasing
// sequence of positive parts.
bool d3_holds(const std::vector<long long>& parts, const SemigroupParams& params) {
    long long s = params.s(), t = params.t();
    long long m = static_cast<long long>(parts.size());
    std::vector<long long> c(parts.size());
    for (long long i = 0; i < m; ++i)
        c[static_cast<std::size_t>(i)] =
            parts[static_cast<std::size_t>(i)] - (m - 1 - i) * t;
    for (long long i = 0; i < m; ++i) {
        if (parts[static_cast<std::size_t>(i)] % t != 0) continue;
        long long ci = c[static_cast<std::size_t>(i)];
        for (long long l = 0; l < i; ++l) {
            long long cl = c[static_cast<std::size_t>(l)];
            if (parts[static_cast<std::size_t>(l)] % t == 0) {
                if (cl < ci) return false;
            } else {
                if (cl <= ci) return false;
            }
        }
        if (i + 1 < m && c[static_cast<std::size_t>(i + 1)] > ci) return false;
    }

    std::vector<long long> f = d0_f_values(Partition(parts), t);
    if (f.empty()) return true;
    long long t_mod_s = mod_floor(t, s);
    std::vector<long long> rows(f.size(), 0);
    rows.back() = mod_floor(f.back(), s) == t_mod_s ? t : 0;
    for (std::size_t j = f.size() - 1; j-- > 0;) {
        long long step = mod_floor(f[j] - f[j + 1], s) == t_mod_s ? t : 0;
        rows[j] = rows[j + 1] + step;
    }
    long long prev = 0;
    for (std::size_t j = f.size(); j-- > 0;) {
        long long reduced = f[j] - rows[j];
        if (reduced <= prev) return false;
        prev = reduced;
    }
    return true;
}

bool is_in_D_st(const Partition& p, const SemigroupParams& params,
                ConditionMask conditions) {
    const auto& parts = p.parts();
    if (conditions.d1) {
        for (long long v : parts)
            if (!params.in_W(v)) return false;
    }
    if (conditions.d3 && !d3_holds(parts, params)) return false;
    if (conditions.d2 && !d2_holds(parts, params.t())) return false;
    if (conditions.d0 && !d0_holds(parts, params)) return false;
    return true;
}

ClassVector class_vector(const Partition& p, const SemigroupParams& params, Side side) {
    long long s = params.s(), t = params.t();
    ClassVector cv;
    cv.residue_counts.assign(static_cast<std::size_t>(t - 1), 0);

    if (side == Side::C) {
        long long count_nonmult = 0;
        for (long long v : p.parts())
            if (v % t != 0) ++count_nonmult;
        long long threshold = t * count_nonmult;
        for (long long v : p.parts()) {
            if (v % t == 0) {
                if (v > threshold) ++cv.k;  // smaller multiples of t stay unclassified
            } else {
                if (v % s != 0)
                    throw std::invalid_argument("C-side part divisible by neither s nor t");
                long long h = mod_floor(v, s * t) / s;  // v = hs mod st, 1 <= h <= t-1
                cv.residue_counts[static_cast<std::size_t>(h - 1)] += 1;
            }
        }
    } else {
        // s is invertible mod t
        long long s_inv = 0;
        for (long long x = 1; x < t; ++x)
            if (mod_floor(s * x, t) == 1) { s_inv = x; break; }
        for (long long v : p.parts()) {
            if (v % t == 0) {
                ++cv.k;
            } else {
                long long h = mod_floor(mod_floor(v, t) * s_inv, t);
                cv.residue_counts[static_cast<std::size_t>(h - 1)] += 1;
            }
        }
    }
    return cv;
}

}  // namespace partid
