// Command-line front end: verification sweeps, bijection mapping with traces,
// enumeration dumps, and jagged-partition utilities.
//
// Exit codes: 0 = pass, 1 = verification failure, 2 = usage or input error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partid/bijection.hpp"
#include "partid/enumeration.hpp"
#include "partid/jagged.hpp"
#include "partid/qseries.hpp"

using json = nlohmann::ordered_json;
using namespace partid;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<long long> parse_sequence(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in sequence");
        out.push_back(std::stoll(item));
    }
    return out;
}

std::string join(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

struct Options {
    std::string format = "text";
};

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

ConditionMask mask_from_disabled(const std::vector<std::string>& disabled) {
    ConditionMask m;
    for (const auto& name : disabled) {
        if (name == "D0") m.d0 = false;
        else if (name == "D1") m.d1 = false;
        else if (name == "D2") m.d2 = false;
        else if (name == "D3") m.d3 = false;
        else throw std::invalid_argument("unknown condition: " + name);
    }
    return m;
}

Family family_from_name(const std::string& name) {
    if (name == "C_t") return Family::C_t;
    if (name == "D_t") return Family::D_t;
    if (name == "C_st") return Family::C_st;
    if (name == "D_st") return Family::D_st;
    throw std::invalid_argument("unknown family: " + name);
}

json trace_to_json(const BijectionTrace& tr) {
    json j;
    j["p"] = tr.p;
    j["k"] = tr.k;
    j["r"] = tr.r;
    j["pi1"] = tr.pi1.parts();
    j["pi2"] = tr.pi2.parts();
    j["pi4"] = tr.pi4.parts();
    j["pi5"] = tr.pi5.parts();
    j["pi4_star"] = tr.pi4_star;
    j["pi6"] = tr.pi6.parts();
    j["staircase"] = tr.staircase;
    j["s0"] = tr.s0;
    j["sf"] = tr.sf;
    return j;
}

std::string trace_to_text(const BijectionTrace& tr) {
    std::ostringstream os;
    os << "  p=" << tr.p << " k=" << tr.k << " r=" << tr.r << "\n";
    os << "  pi1       = " << join(tr.pi1.parts()) << "\n";
    os << "  pi2       = " << join(tr.pi2.parts()) << "\n";
    os << "  pi5       = " << join(tr.pi5.parts()) << "\n";
    os << "  pi4       = " << join(tr.pi4.parts()) << "\n";
    os << "  pi4*      = " << join(tr.pi4_star) << "\n";
    os << "  pi6       = " << join(tr.pi6.parts()) << "\n";
    os << "  staircase = " << join(tr.staircase) << "\n";
    os << "  S0        = " << join(tr.s0) << "\n";
    os << "  Sf        = " << join(tr.sf) << "\n";
    return os.str();
}

int cmd_verify_analytic(const Options& opt, long long t, long long degree,
                        bool bivariate, long long xdeg, bool exploratory) {
    auto prod = product_side(t, degree, exploratory);
    auto sum = sum_side(t, degree, exploratory);
    long long first_mismatch = -1;
    for (long long n = 0; n <= degree; ++n)
        if (prod[n] != sum[n]) {
            first_mismatch = n;
            break;
        }
    bool chain_ok = true;
    if (bivariate) {
        auto blocks = block_product_bivariate(t, degree, xdeg);
        auto quad = quadruple_sum_bivariate(t, degree, xdeg);
        chain_ok = blocks == quad &&
                   apply_staircase(quad, t).eval_x1() == sum_side(t, degree, exploratory);
    }
    bool pass = first_mismatch < 0 && chain_ok;

    if (opt.format == "csv") {
        std::cout << "n,product,sum\n";
        for (long long n = 0; n <= degree; ++n)
            std::cout << n << "," << prod[n] << "," << sum[n] << "\n";
    } else {
        json j{{"command", "verify-analytic"}, {"t", t}, {"degree", degree},
               {"status", pass ? "pass" : "fail"}};
        if (bivariate) j["bivariate_chain"] = chain_ok ? "pass" : "fail";
        if (first_mismatch >= 0) j["first_mismatch"] = first_mismatch;
        std::ostringstream os;
        os << (pass ? "pass" : "FAIL") << ": t=" << t
           << " max degree checked=" << degree;
        if (bivariate) os << " bivariate-chain=" << (chain_ok ? "pass" : "FAIL");
        if (first_mismatch >= 0) os << " first mismatch at n=" << first_mismatch;
        os << "\n";
        emit(opt, j, os.str());
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_verify_cardinality(const Options& opt, const std::string& pair, long long t,
                           long long s, long long max_n, bool refined,
                           const std::vector<std::string>& disabled) {
    FamilySpec c_spec, d_spec;
    if (pair == "t") {
        if (!disabled.empty())
            throw std::invalid_argument("--disable applies to the st pair only");
        c_spec = {Family::C_t, t};
        d_spec = {Family::D_t, t};
    } else if (pair == "st") {
        c_spec = {Family::C_st, t, s};
        d_spec = {Family::D_st, t, s};
        if (!disabled.empty()) d_spec.conditions = mask_from_disabled(disabled);
    } else {
        throw std::invalid_argument("--family-pair must be t or st");
    }
    auto c = count_table(max_n, c_spec);
    auto d = count_table(max_n, d_spec);
    long long first_mismatch = -1;
    for (long long n = 0; n <= max_n; ++n)
        if (c[static_cast<std::size_t>(n)] != d[static_cast<std::size_t>(n)]) {
            first_mismatch = n;
            break;
        }
    long long first_refined_mismatch = -1;
    if (refined && pair == "st" && first_mismatch < 0) {
        for (long long n = 0; n <= max_n; ++n)
            if (refined_counts(n, s, t, Side::C) != refined_counts(n, s, t, Side::D)) {
                first_refined_mismatch = n;
                break;
            }
    }
    bool pass = first_mismatch < 0 && first_refined_mismatch < 0;

    if (opt.format == "csv") {
        std::cout << "n,c_count,d_count\n";
        for (long long n = 0; n <= max_n; ++n)
            std::cout << n << "," << c[static_cast<std::size_t>(n)] << ","
                      << d[static_cast<std::size_t>(n)] << "\n";
    } else {
        json j{{"command", "verify-cardinality"}, {"pair", pair}, {"t", t},
               {"max_n", max_n}, {"status", pass ? "pass" : "fail"}};
        if (pair == "st") j["s"] = s;
        if (first_mismatch >= 0) j["first_mismatch"] = first_mismatch;
        if (first_refined_mismatch >= 0)
            j["first_refined_mismatch"] = first_refined_mismatch;
        std::ostringstream os;
        os << (pass ? "pass" : "FAIL") << ": " << pair << "-pair t=" << t;
        if (pair == "st") os << " s=" << s;
        os << " n=0.." << max_n;
        if (refined) os << " refined";
        if (first_mismatch >= 0) os << " first mismatch at n=" << first_mismatch;
        if (first_refined_mismatch >= 0)
            os << " first refined mismatch at n=" << first_refined_mismatch;
        os << "\n";
        emit(opt, j, os.str());
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_map(const Options& opt, long long s, long long t, const std::string& parts,
            bool trace, bool invert) {
    SemigroupParams params(s, t);
    Partition input(parse_sequence(parts));
    auto [result, tr] =
        invert ? inverse_map(input, params) : forward_map(input, params);

    json j{{"command", invert ? "unmap" : "map"}, {"s", s}, {"t", t},
           {"input", input.parts()}, {"result", result.parts()}};
    if (trace) j["trace"] = trace_to_json(tr);
    std::ostringstream os;
    os << join(result.parts()) << "\n";
    if (trace) os << trace_to_text(tr);
    emit(opt, j, os.str());
    return kExitPass;
}

int cmd_count(const Options& opt, const std::string& family_name, long long t,
              long long s, bool has_s, long long n, bool list,
              const std::vector<std::string>& disabled) {
    Family family = family_from_name(family_name);
    FamilySpec spec;
    spec.family = family;
    spec.t = t;
    if (family == Family::C_st || family == Family::D_st) {
        if (!has_s) throw std::invalid_argument("--s is required for st families");
        spec.s = s;
    } else if (has_s) {
        throw std::invalid_argument("--s applies to st families only");
    }
    if (!disabled.empty()) spec.conditions = mask_from_disabled(disabled);
    spec.validate();

    auto members = enumerate_family(n, spec);
    json j{{"command", "count"}, {"family", family_name}, {"t", t}, {"n", n},
           {"count", static_cast<long long>(members.size())}};
    if (spec.s) j["s"] = *spec.s;
    std::ostringstream os;
    if (opt.format == "csv") {
        std::cout << "partition\n";
        for (const auto& p : members) std::cout << join(p.parts()) << "\n";
        return kExitPass;
    }
    os << members.size() << "\n";
    if (list) {
        json arr = json::array();
        for (const auto& p : members) {
            arr.push_back(p.parts());
            os << p.to_string() << "\n";
        }
        j["partitions"] = arr;
    }
    emit(opt, j, os.str());
    return kExitPass;
}

int cmd_jagged_blocks(const Options& opt, long long k, const std::string& seq_text) {
    auto seq = parse_sequence(seq_text);
    auto blocks = maximal_blocks(seq, k);
    json arr = json::array();
    std::ostringstream os;
    for (const auto& b : blocks) {
        arr.push_back(json{{"label", b.label}, {"entries", b.entries}});
        os << "M_" << b.label << " = (" << join(b.entries) << ")\n";
    }
    json j{{"command", "jagged-blocks"}, {"k", k}, {"sequence", seq},
           {"blocks", arr}};
    emit(opt, j, os.str());
    return kExitPass;
}

int cmd_jagged_staircase(const Options& opt, long long k, const std::string& seq_text,
                         bool remove) {
    auto seq = parse_sequence(seq_text);
    auto out = remove ? remove_staircase(seq, k) : add_staircase(seq, k);
    json j{{"command", "jagged-staircase"}, {"k", k}, {"remove", remove},
           {"sequence", seq}, {"result", out}};
    emit(opt, j, join(out) + "\n");
    return kExitPass;
}

int cmd_witness_d2(const Options& opt, long long s, long long t, long long max_n) {
    FamilySpec all{Family::D_st, t, s};
    FamilySpec no_d2{Family::D_st, t, s, ConditionMask{true, true, false, true}};
    auto with = count_table(max_n, all);
    auto without = count_table(max_n, no_d2);
    long long witness = -1;
    for (long long n = 0; n <= max_n; ++n)
        if (without[static_cast<std::size_t>(n)] > with[static_cast<std::size_t>(n)]) {
            witness = n;
            break;
        }
    json j{{"command", "witness-d2"}, {"s", s}, {"t", t}, {"max_n", max_n},
           {"status", witness >= 0 ? "pass" : "fail"}};
    std::ostringstream os;
    if (witness >= 0) {
        j["witness"] = witness;
        j["count_with_d2"] = with[static_cast<std::size_t>(witness)];
        j["count_without_d2"] = without[static_cast<std::size_t>(witness)];
        os << "witness n=" << witness << ": |D| with D2 = "
           << with[static_cast<std::size_t>(witness)] << ", without D2 = "
           << without[static_cast<std::size_t>(witness)] << "\n";
    } else {
        os << "no witness up to n=" << max_n << "\n";
    }
    emit(opt, j, os.str());
    return witness >= 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition-identity toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    // verify-analytic
    long long va_t = 0, va_degree = 300, va_xdeg = 12;
    bool va_bivariate = false, va_exploratory = false;
    auto* va = app.add_subcommand("verify-analytic",
                                  "compare product and sum sides coefficientwise");
    va->add_option("--t", va_t, "modulus")->required();
    va->add_option("--degree", va_degree, "truncation degree");
    va->add_flag("--bivariate", va_bivariate, "also check the bivariate chain");
    va->add_option("--xdeg", va_xdeg, "x-degree bound for the bivariate chain");
    va->add_flag("--exploratory", va_exploratory, "allow t=3 without asserting");

    // verify-cardinality
    std::string vc_pair;
    long long vc_t = 0, vc_s = 0, vc_max_n = 40;
    bool vc_refined = false;
    std::vector<std::string> vc_disable;
    auto* vc = app.add_subcommand("verify-cardinality",
                                  "compare family counts by exhaustive enumeration");
    vc->add_option("--family-pair", vc_pair, "t or st")->required();
    vc->add_option("--t", vc_t, "modulus")->required();
    vc->add_option("--s", vc_s, "second parameter (st pair)");
    vc->add_option("--max-n", vc_max_n, "largest weight to check");
    vc->add_flag("--refined", vc_refined, "also compare class-vector refinements");
    vc->add_option("--disable", vc_disable, "conditions to disable on the D side");

    // map / unmap
    long long m_s = 0, m_t = 0;
    std::string m_parts;
    bool m_trace = false;
    auto* mp = app.add_subcommand("map", "apply the C -> D bijection");
    mp->add_option("--s", m_s)->required();
    mp->add_option("--t", m_t)->required();
    mp->add_option("--partition", m_parts, "comma-separated decreasing parts")
        ->required();
    mp->add_flag("--trace", m_trace, "print all intermediate stages");
    long long u_s = 0, u_t = 0;
    std::string u_parts;
    bool u_trace = false;
    auto* um = app.add_subcommand("unmap", "apply the D -> C inverse bijection");
    um->add_option("--s", u_s)->required();
    um->add_option("--t", u_t)->required();
    um->add_option("--partition", u_parts, "comma-separated decreasing parts")
        ->required();
    um->add_flag("--trace", u_trace, "print all intermediate stages");

    // count
    std::string ct_family;
    long long ct_t = 0, ct_s = 0, ct_n = 0;
    bool ct_list = false;
    std::vector<std::string> ct_disable;
    auto* ct = app.add_subcommand("count", "enumerate one family at one weight");
    ct->add_option("--family", ct_family, "C_t, D_t, C_st or D_st")->required();
    ct->add_option("--t", ct_t)->required();
    auto* ct_s_opt = ct->add_option("--s", ct_s);
    ct->add_option("--n", ct_n)->required();
    ct->add_flag("--list", ct_list, "list the partitions");
    ct->add_option("--disable", ct_disable, "conditions to disable (D_st)");

    // jagged
    auto* jg = app.add_subcommand("jagged", "jagged-partition utilities");
    jg->require_subcommand(1);
    long long jb_k = 0;
    std::string jb_seq;
    auto* jb = jg->add_subcommand("blocks", "maximal-block decomposition");
    jb->add_option("--k", jb_k)->required();
    jb->add_option("--seq", jb_seq, "comma-separated entries (may be negative)")
        ->required();
    long long js_k = 0;
    std::string js_seq;
    bool js_remove = false;
    auto* js = jg->add_subcommand("staircase", "add or remove a k-staircase");
    js->add_option("--k", js_k)->required();
    js->add_option("--seq", js_seq)->required();
    js->add_flag("--remove", js_remove, "remove instead of add");

    // witness-d2
    long long w_s = 0, w_t = 0, w_max_n = 120;
    auto* wd = app.add_subcommand("witness-d2",
                                  "smallest weight where dropping D2 grows the D family");
    wd->add_option("--s", w_s)->required();
    wd->add_option("--t", w_t)->required();
    wd->add_option("--max-n", w_max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (va->parsed())
            return cmd_verify_analytic(opt, va_t, va_degree, va_bivariate, va_xdeg,
                                       va_exploratory);
        if (vc->parsed())
            return cmd_verify_cardinality(opt, vc_pair, vc_t, vc_s, vc_max_n,
                                          vc_refined, vc_disable);
        if (mp->parsed()) return cmd_map(opt, m_s, m_t, m_parts, m_trace, false);
        if (um->parsed()) return cmd_map(opt, u_s, u_t, u_parts, u_trace, true);
        if (ct->parsed())
            return cmd_count(opt, ct_family, ct_t, ct_s, ct_s_opt->count() > 0, ct_n,
                             ct_list, ct_disable);
        if (jg->parsed()) {
            if (jb->parsed()) return cmd_jagged_blocks(opt, jb_k, jb_seq);
            if (js->parsed()) return cmd_jagged_staircase(opt, js_k, js_seq, js_remove);
        }
        if (wd->parsed()) return cmd_witness_d2(opt, w_s, w_t, w_max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
