#include "partid/enumeration.hpp"

#include <functional>
#include <stdexcept>

#include "partid/checked.hpp"

namespace partid {

void FamilySpec::validate() const {
    switch (family) {
        case Family::C_t:
        case Family::D_t:
            if (t <= 2) throw std::invalid_argument("single-parameter families require t > 2");
            if (s) throw std::invalid_argument("s is not a parameter of this family");
            if (conditions)
                throw std::invalid_argument("enabled_conditions apply to D_st only");
            break;
        case Family::C_st:
            if (conditions)
                throw std::invalid_argument("enabled_conditions apply to D_st only");
            [[fallthrough]];
        case Family::D_st:
            if (!s) throw std::invalid_argument("two-parameter families require s");
            semigroup();  // validates coprimality and ranges
            break;
    }
}

SemigroupParams FamilySpec::semigroup() const {
    if (!s) throw std::invalid_argument("family has no semigroup parameters");
    return SemigroupParams(*s, t);
}

namespace {

struct Dfs {
    Family family;
    long long t;
    std::optional<SemigroupParams> sg;
    ConditionMask mask;

    std::vector<long long> cur;
    std::vector<long long> reachable;  // reachable[v]: max weight from parts <= v

    explicit Dfs(const FamilySpec& spec) : family(spec.family), t(spec.t) {
        if (spec.family == Family::C_st || spec.family == Family::D_st)
            sg.emplace(spec.semigroup());
        if (spec.conditions) mask = *spec.conditions;
    }

    bool admissible(long long v) const {
        switch (family) {
            case Family::C_t: {
                long long r = v % (2 * t);
                return v % t == 0 || r == t - 1 || r == t + 1;
            }
            case Family::D_t: {
                if (v <= 1) return false;
                long long r = v % t;
                return r == 0 || r == 1 || r == t - 1;
            }
            case Family::C_st:
                return v % sg->s() == 0 || v % t == 0;
            case Family::D_st:
                return !mask.d1 || sg->in_W(v);
        }
        return false;
    }

    // Pair conditions between a candidate next part v and the parts chosen so
    // far.  For D_st these are necessary consequences of the full positional
    // conditions, used only to prune; leaf_ok re-checks everything.
    bool pair_ok(long long v) const {
        if (family == Family::D_t)
            return cur.empty() || d_t_adjacent_ok(cur.back(), v, t);
        if (family == Family::D_st && !cur.empty()) {
            long long prev = cur.back();
            long long diff = prev - v;
            bool prev_mult = prev % t == 0, v_mult = v % t == 0;
            if (mask.d3) {
                if (prev_mult && diff < t) return false;
                if (!prev_mult && v_mult && diff <= t) return false;
                if (!prev_mult && !v_mult && diff <= t &&
                    mod_floor(diff, sg->s()) == mod_floor(t, sg->s()))
                    return false;
            }
            if (mask.d0 && !prev_mult && !v_mult) {
                long long r = mod_floor(diff, sg->s());
                if (r != 0 && r != mod_floor(t, sg->s())) return false;
            }
        }
        return true;
    }

    // Conditions that depend on the completed partition (positions and m).
    bool leaf_ok() const {
        if (family != Family::D_st) return true;
        if (mask.d3 && !d3_holds(cur, *sg)) return false;
        if (mask.d2 && !d2_holds(cur, t)) return false;
        if (mask.d0 && !d0_holds(cur, *sg)) return false;
        return true;
    }

    void build_reachable(long long max_part) {
        reachable.assign(static_cast<std::size_t>(max_part + 1), 0);
        long long acc = 0;
        for (long long v = 1; v <= max_part; ++v) {
            if (admissible(v)) acc = checked_add(acc, v);
            reachable[static_cast<std::size_t>(v)] = acc;
        }
    }

    // Visits every family member with weight <= budget whose largest part is
    // <= max_part; emit is called once per member (including the empty one).
    template <typename Emit>
    void sweep(long long budget, long long max_part, const Emit& emit) {
        if (leaf_ok()) emit(cur, budget);
        if (max_part > budget) max_part = budget;
        for (long long v = max_part; v >= 1; --v) {
            if (!admissible(v) || !pair_ok(v)) continue;
            cur.push_back(v);
            sweep(budget - v, v - 1, emit);
            cur.pop_back();
        }
    }

};

}  // namespace

std::vector<Partition> enumerate_family(long long n, const FamilySpec& spec) {
    if (n < 0) throw std::invalid_argument("weight must be nonnegative");
    spec.validate();
    Dfs dfs(spec);
    dfs.build_reachable(n);
    std::vector<Partition> out;
    std::function<void(long long, long long)> rec = [&](long long remaining,
                                                        long long max_part) {
        if (remaining == 0) {
            if (dfs.leaf_ok()) out.emplace_back(Partition(dfs.cur));
            return;
        }
        if (max_part > remaining) max_part = remaining;
        if (max_part < 1 ||
            dfs.reachable[static_cast<std::size_t>(max_part)] < remaining)
            return;
        for (long long v = max_part; v >= 1; --v) {
            if (!dfs.admissible(v) || !dfs.pair_ok(v)) continue;
            dfs.cur.push_back(v);
            rec(remaining - v, v - 1);
            dfs.cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<long long> count_table(long long max_n, const FamilySpec& spec) {
    if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
    spec.validate();
    std::vector<long long> counts(static_cast<std::size_t>(max_n + 1), 0);

    if (spec.family == Family::C_t || spec.family == Family::C_st) {
        // Distinct-part subset-sum recurrence over the admissible part values.
        Dfs dfs(spec);
        counts[0] = 1;
        for (long long v = 1; v <= max_n; ++v) {
            if (!dfs.admissible(v)) continue;
            for (long long w = max_n; w >= v; --w) {
                if (counts[static_cast<std::size_t>(w - v)] == 0) continue;
                counts[static_cast<std::size_t>(w)] =
                    checked_add(counts[static_cast<std::size_t>(w)],
                                counts[static_cast<std::size_t>(w - v)]);
            }
        }
        return counts;
    }

    Dfs dfs(spec);
    dfs.sweep(max_n, max_n, [&](const std::vector<long long>&, long long budget_left) {
        auto& slot = counts[static_cast<std::size_t>(max_n - budget_left)];
        slot = checked_add(slot, 1);
    });
    return counts;
}

std::map<ClassVector, long long> refined_counts(long long n, long long s, long long t,
                                                Side side) {
    FamilySpec spec{side == Side::C ? Family::C_st : Family::D_st, t, s, std::nullopt};
    SemigroupParams params(s, t);
    std::map<ClassVector, long long> out;
    for (const Partition& p : enumerate_family(n, spec)) {
        auto& slot = out[class_vector(p, params, side)];
        slot = checked_add(slot, 1);
    }
    return out;
}

}  // namespace partid
