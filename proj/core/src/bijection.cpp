#include "partid/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "partid/checked.hpp"

namespace partid {

namespace {

long long sum_of(const std::vector<long long>& v) {
    long long acc = 0;
    for (long long x : v) acc = checked_add(acc, x);
    return acc;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("bijection invariant violated: ") + what);
}

std::vector<long long> staircase_offsets(std::size_t len, long long t) {
    std::vector<long long> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = static_cast<long long>(len - 1 - i) * t;
    return out;
}

}  // namespace

std::vector<long long> t_fold_conjugate(const std::vector<long long>& parts, long long t) {
    std::vector<long long> u;
    u.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || parts[i] % t != 0)
            throw std::invalid_argument("t-fold conjugate needs positive multiples of t");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("t-fold conjugate needs weakly decreasing input");
        u.push_back(parts[i] / t);
    }
    if (u.empty()) return {};
    std::vector<long long> rows(static_cast<std::size_t>(u[0]));
    for (long long j = 1; j <= u[0]; ++j) {
        long long count = 0;
        for (long long ui : u)
            if (ui >= j) ++count;
        rows[static_cast<std::size_t>(j - 1)] = count * t;
    }
    return rows;
}

Partition t_fold_conjugate(const Partition& pi4, long long t) {
    return Partition(t_fold_conjugate(pi4.parts(), t));
}

std::pair<Partition, BijectionTrace> forward_map(const Partition& pi,
                                                 const SemigroupParams& params) {
    if (!is_in_C_st(pi, params))
        throw std::invalid_argument("forward_map input is not in the C family");
    long long t = params.t();
    BijectionTrace tr;
    tr.input = pi;

    // Step 1: split by divisibility by t.
    std::vector<long long> pi1v, pi2v;
    for (long long v : pi.parts())
        (v % t != 0 ? pi1v : pi2v).push_back(v);
    tr.p = static_cast<long long>(pi1v.size());
    tr.pi1 = Partition(pi1v);
    tr.pi2 = Partition(pi2v);

    // Step 2: split the multiples of t at the threshold tp.
    long long threshold = t * tr.p;
    std::vector<long long> pi5v, pi4v;
    for (long long v : pi2v)
        (v > threshold ? pi5v : pi4v).push_back(v);
    tr.k = static_cast<long long>(pi5v.size());
    tr.r = static_cast<long long>(pi4v.size());
    tr.pi5 = Partition(pi5v);
    tr.pi4 = Partition(pi4v);

    // Step 3: t-fold conjugate.
    tr.pi4_star = t_fold_conjugate(pi4v, t);
    std::size_t u1 = tr.pi4_star.size();
    require(u1 <= pi1v.size(), "u_1 <= p");

    // Step 4: add conjugate rows to the leading parts of pi1.
    std::vector<long long> pi6v = pi1v;
    for (std::size_t i = 0; i < u1; ++i)
        pi6v[i] = checked_add(pi6v[i], tr.pi4_star[i]);
    tr.pi6 = Partition(pi6v);  // ctor enforces strict decrease

    // Steps 5-6: juxtapose pi5/pi6 and subtract the staircase.
    std::vector<long long> str = pi5v;
    str.insert(str.end(), pi6v.begin(), pi6v.end());
    tr.staircase = staircase_offsets(str.size(), t);
    tr.s0.resize(str.size());
    for (std::size_t i = 0; i < str.size(); ++i)
        tr.s0[i] = str[i] - tr.staircase[i];

    // Step 7: insert the \bar b' entries rightward, smallest first (the order
    // of the worked reference computation). The scan starts past the prefix of
    // entries still waiting to be moved; among the settled entries the move
    // stops at the first one not strictly larger.
    std::vector<long long> s = tr.s0;
    for (std::size_t idx = static_cast<std::size_t>(tr.k); idx-- > 0;) {
        long long v = s[idx];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(idx));
        std::size_t q = idx;
        while (q < s.size() && s[q] > v) ++q;  // strict: stop at an equal entry
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(q), v);
    }
    tr.sf = s;

    // Step 8: add the staircase back.
    std::vector<long long> d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        d[i] = checked_add(s[i], tr.staircase[i]);
    Partition pi3(d);
    require(pi3.weight() == pi.weight(), "weight conserved by steps 5-8");
    require(checked_add(tr.pi1.weight(), tr.pi2.weight()) == pi.weight(),
            "weight conserved by step 1");
    require(checked_add(tr.pi5.weight(), tr.pi6.weight()) ==
                checked_add(sum_of(tr.s0), sum_of(tr.staircase)),
            "weight conserved by step 6");
    require(is_in_D_st(pi3, params), "image lies in the D family");

    tr.result = pi3;
    return {pi3, tr};
}

std::pair<Partition, BijectionTrace> inverse_map(const Partition& pi3,
                                                 const SemigroupParams& params) {
    if (!is_in_D_st(pi3, params))
        throw std::invalid_argument("inverse_map input is not in the D family");
    long long s_param = params.s(), t = params.t();
    BijectionTrace tr;
    tr.input = pi3;

    // Undo step 8: subtract the full staircase to recover S_f.
    tr.staircase = staircase_offsets(pi3.size(), t);
    tr.sf.resize(pi3.size());
    for (std::size_t i = 0; i < pi3.size(); ++i)
        tr.sf[i] = pi3[i] - tr.staircase[i];

    // Undo step 7: the entries divisible by t are exactly the \bar b' values.
    std::vector<long long> bbar, abar;
    for (long long c : tr.sf)
        (mod_floor(c, t) == 0 ? bbar : abar).push_back(c);
    tr.k = static_cast<long long>(bbar.size());
    tr.p = static_cast<long long>(abar.size());
    std::sort(bbar.begin(), bbar.end(), std::greater<>());

    tr.s0 = bbar;
    tr.s0.insert(tr.s0.end(), abar.begin(), abar.end());
    require(sum_of(tr.s0) == sum_of(tr.sf), "step 7 undo conserves weight");

    // Undo steps 6 and 5: re-add the offsets to rebuild pi5 and pi6.
    std::vector<long long> pi5v(bbar.size()), pi6v(abar.size());
    for (std::size_t i = 0; i < bbar.size(); ++i)
        pi5v[i] = checked_add(bbar[i], static_cast<long long>(tr.p + tr.k - 1 -
                                                              static_cast<long long>(i)) * t);
    for (std::size_t i = 0; i < abar.size(); ++i)
        pi6v[i] = checked_add(abar[i], static_cast<long long>(tr.p - 1 -
                                                              static_cast<long long>(i)) * t);
    tr.pi5 = Partition(pi5v);
    tr.pi6 = Partition(pi6v);
    long long threshold = t * tr.p;
    for (long long v : pi5v)
        require(v > threshold, "pi5 parts exceed the threshold tp");

    // Rebuild the conjugate diagram row by row from the residues of a' mod s.
    long long rem = mod_floor(t, s_param);
    std::vector<long long> rows(pi6v.size(), 0);  // rows[i] pairs with a'_{i+1}
    for (std::size_t i = pi6v.size(); i-- > 0;) {
        long long step;
        if (i + 1 == pi6v.size()) {
            long long res = mod_floor(pi6v[i], s_param);
            require(res == 0 || res == rem, "a'_p congruent to 0 or t mod s");
            step = (res == rem) ? t : 0;
            rows[i] = step;
        } else {
            long long diff = mod_floor(pi6v[i] - pi6v[i + 1], s_param);
            require(diff == 0 || diff == rem,
                    "consecutive a' differ by 0 or t mod s");
            rows[i] = rows[i + 1] + ((diff == rem) ? t : 0);
        }
    }
    std::size_t u1 = 0;
    while (u1 < rows.size() && rows[u1] > 0) ++u1;
    for (std::size_t i = u1; i < rows.size(); ++i)
        require(rows[i] == 0, "positive conjugate rows form a prefix");
    tr.pi4_star.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(u1));

    // Undo step 4: strip the rows to recover pi1.
    std::vector<long long> pi1v = pi6v;
    for (std::size_t i = 0; i < u1; ++i) pi1v[i] -= tr.pi4_star[i];
    tr.pi1 = Partition(pi1v);

    // Undo step 3: column blocks of t give pi4 back.
    std::vector<long long> pi4v = t_fold_conjugate(tr.pi4_star, t);
    tr.pi4 = Partition(pi4v);
    tr.r = static_cast<long long>(pi4v.size());
    require(t_fold_conjugate(pi4v, t) == tr.pi4_star, "conjugation is involutive");
    for (long long v : pi4v)
        require(v <= threshold, "pi4 parts do not exceed the threshold tp");

    // Undo steps 2 and 1: merge everything back together.
    std::vector<long long> all = pi1v;
    all.insert(all.end(), pi4v.begin(), pi4v.end());
    all.insert(all.end(), pi5v.begin(), pi5v.end());
    Partition pi = Partition::from_unsorted(std::move(all));
    std::vector<long long> pi2v = pi4v;
    pi2v.insert(pi2v.end(), pi5v.begin(), pi5v.end());
    tr.pi2 = Partition::from_unsorted(std::move(pi2v));

    require(pi.weight() == pi3.weight(), "weight conserved by the inverse");
    require(is_in_C_st(pi, params), "preimage lies in the C family");

    tr.result = pi;
    return {pi, tr};
}

}  // namespace partid
