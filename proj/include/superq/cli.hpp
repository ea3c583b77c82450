#pragma once

// Command implementations behind the superq executable; kept here so tests can call them directly.

#include "superq/suites.hpp"

#include <fstream>
#include <iomanip>

namespace superq::cli {

enum class Group { gl, sl };
enum class Output { json, table };

struct Config {
    int m = 0;  // 0: infer from the inputs
    Group group = Group::gl;
    bool normalize_parity = false;
    Output output = Output::json;
    long oracle_dim_bound = 4000;
    std::uint64_t seed = oracle::default_seed();
};

// Bad input from the command line; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandResult {
    Json json;
    std::string table;
    int exit_code = 0;
};

inline Weight parse_weight(int m, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || s.find('/', slash + 1) != std::string::npos)
        throw UsageError("weight must look like a1,...,am/b");
    std::vector<long> even;
    long odd = 0;
    try {
        std::string head = s.substr(0, slash);
        std::size_t start = 0;
        while (true) {
            auto comma = head.find(',', start);
            std::string tok = head.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t used = 0;
            even.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw UsageError("bad integer '" + tok + "'");
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        std::size_t used = 0;
        std::string tail = s.substr(slash + 1);
        odd = std::stol(tail, &used);
        if (used != tail.size()) throw UsageError("bad integer '" + tail + "'");
    } catch (const std::logic_error&) {
        throw UsageError("malformed weight '" + s + "'");
    }
    if (m && static_cast<int>(even.size()) != m)
        throw UsageError("weight has " + std::to_string(even.size()) + " even entries, expected " + std::to_string(m));
    try {
        return make_weight(even, odd);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Label text, or a weight a1,...,am/b standing for its irreducible module.
inline IndecompLabel parse_input(int m, const std::string& s) {
    try {
        if (s.find('/') != std::string::npos) return irr_label(parse_weight(m, s));
        auto x = parse_label(s);
        validate(x);
        int mx = x.kind == Kind::typical ? static_cast<int>(x.block.crosses.size())
                                         : static_cast<int>(x.block.crosses.size()) + 1;
        if (m && mx != m) throw UsageError("label " + s + " has rank " + std::to_string(mx));
        return x;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline int rank_of(const IndecompLabel& x) {
    return static_cast<int>(x.block.crosses.size()) + (x.kind == Kind::typical ? 0 : 1);
}

inline CommandResult cmd_diagram(const Config& cfg, const std::string& weight) {
    if (cfg.m < 2) throw UsageError("diagram needs --m >= 2");
    auto w = parse_weight(cfg.m, weight);
    auto d = build_diagram(w);
    Json j{{"schema", 1}, {"command", "diagram"}, {"weight", to_json(w)}, {"diagram", to_json(d)},
           {"atypicality", atypicality(w)}, {"rendered", render_diagram(d)}};
    if (atypicality(w)) {
        auto [b, v] = block_of(w);
        j["block"] = b.crosses;
        j["vee"] = v;
        j["berezin_charge"] = berezin_charge(w);
        j["core"] = core_weight(w).parts;
        j["label"] = format_label(irr_label(w));
    }
    std::string t = "weight " + format_weight(w) + (atypicality(w) ? "  atypical" : "  typical") + "\n" +
                    render_diagram(d);
    return {j, t, 0};
}

inline IndecompLabel with_positive_sdim(IndecompLabel x) {
    if (superdimension(x) < 0) x.parity ^= 1;
    return x;
}

inline FormalObject present(const FormalObject& f, const Config& cfg) {
    if (!cfg.normalize_parity) return f;
    FormalObject out;
    for (const auto& [x, c] : f.summands) out.add(with_positive_sdim(x), c);
    return out;
}

inline Json decomposition_json(const FormalObject& f, const Config& cfg, int m) {
    auto shown = present(f, cfg);
    Json j{{"summands", to_json(shown)}, {"sdim", to_json(superdimension(f))}};
    if (cfg.group == Group::sl) {
        std::map<SlTriple, Integer> img;
        for (const auto& [x, c] : shown.summands) img[sl_reduce(rho(x))] += c;
        Json arr = Json::array();
        for (const auto& [t, c] : img) arr.push_back(Json{{"triple", to_json(t)}, {"mult", to_json(c)}});
        j["sl_image"] = arr;
        if (m == 2) {
            Json names = Json::array();
            for (const auto& [x, c] : shown.summands)
                names.push_back(Json{{"name", to_json(sl21_name(x))}, {"mult", to_json(c)}});
            j["sl21"] = names;
        }
    } else {
        Json arr = Json::array();
        for (const auto& [x, c] : shown.summands) arr.push_back(Json{{"triple", to_json(rho(x))}, {"mult", to_json(c)}});
        j["triples"] = arr;
    }
    return j;
}

inline std::string decomposition_table(const std::string& method, const FormalObject& f, const Config& cfg) {
    std::ostringstream s;
    s << method << ":\n";
    if (f.empty()) s << "  0\n";
    for (const auto& [x, c] : present(f, cfg).summands) {
        auto t = rho(x);
        s << "  " << std::setw(4) << c.get_str() << " x " << std::left << std::setw(34) << format_label(x)
          << std::right << " sdim " << superdimension(x).get_str() << "  d=" << t.d << " b=" << t.b << " core="
          << suites::detail::show(t.core.parts) << " parity=" << t.parity << "\n";
    }
    return s.str();
}

inline CommandResult cmd_tensor(const Config& cfg, const std::string& xs, const std::string& ys,
                                const std::string& method) {
    static const std::vector<std::string> methods = {"direct", "rho", "oracle", "all"};
    if (std::find(methods.begin(), methods.end(), method) == methods.end())
        throw UsageError("unknown method '" + method + "'");
    auto x = parse_input(cfg.m, xs), y = parse_input(cfg.m, ys);
    int m = rank_of(x);
    if (rank_of(y) != m) throw UsageError("rank mismatch between tensor factors");
    auto X = omega(single(x)), Y = omega(single(y));
    Json j{{"schema", 1}, {"command", "tensor"}, {"m", m}, {"group", cfg.group == Group::sl ? "sl" : "gl"},
           {"normalize_parity", cfg.normalize_parity}, {"inputs", {to_json(x), to_json(y)}},
           {"negligible_inputs", {is_negligible(x), is_negligible(y)}}};
    Json ws = Json::array();
    for (const auto& l : {x, y})
        ws.push_back(l.kind == Kind::irr ? to_json(weight_at(l.block, l.lo))
                     : l.kind == Kind::typical ? to_json(typical_weight(l))
                                               : Json());
    j["input_weights"] = ws;
    std::string table = "x = " + format_label(x) + "\ny = " + format_label(y) + "\n";
    std::map<std::string, FormalObject> results;
    bool want = method == "all";
    if (want || method == "direct") results["direct"] = tensor_direct(X, Y);
    if (want || method == "rho") results["rho"] = tensor_quotient(X, Y);
    if (want || method == "oracle") {
        std::string skip;
        if (m > 3) skip = "oracle path needs m <= 3";
        else if (x.kind == Kind::proj || y.kind == Kind::proj) skip = "no explicit projective modules";
        if (skip.empty()) {
            oracle::Oracle o(cfg.seed, cfg.oracle_dim_bound);
            auto A = o.label_module(x), B = o.label_module(y);
            if (static_cast<long>(A.dim()) * B.dim() > cfg.oracle_dim_bound)
                skip = "dimension " + std::to_string(static_cast<long>(A.dim()) * B.dim()) + " exceeds the bound";
            else {
                auto full = o.decompose_tensor(A, B);
                results["oracle"] = omega(full);
                j["oracle_seed"] = cfg.seed;
                j["oracle_full"] = to_json(present(full, cfg));
            }
        }
        if (!skip.empty()) {
            if (!want) throw UsageError(skip);
            j["oracle_skipped"] = skip;
        }
    }
    Json methods_json = Json::object();
    for (const auto& [name, f] : results) {
        methods_json[name] = decomposition_json(f, cfg, m);
        table += decomposition_table(name, f, cfg);
    }
    j["methods"] = methods_json;
    bool agree = true;
    for (const auto& [name, f] : results) agree = agree && f == results.begin()->second;
    j["agree"] = agree;
    const auto& first = results.begin()->second;
    j["ds"] = to_json(ds_of(first, m - 1));
    if (results.size() > 1) {
        table += agree ? "all methods agree\n" : "METHODS DISAGREE\n";
        if (!agree) {
            Json diff = Json::object();
            for (const auto& [name, f] : results) {
                FormalObject d = f;
                for (const auto& [l, c] : first.summands) d.add(l, -c);
                diff[name + "-" + results.begin()->first] = to_json(d);
            }
            j["diff"] = diff;
        }
    }
    return {j, table, agree ? 0 : 1};
}

inline CommandResult cmd_check(const Config& cfg, const std::string& suite, const std::string& report_path) {
    std::vector<std::string> names;
    if (suite == "all")
        for (const auto& [n, f] : suites::registry()) names.push_back(n);
    else {
        bool known = false;
        for (const auto& [n, f] : suites::registry()) known = known || n == suite;
        if (!known) throw UsageError("unknown suite '" + suite + "'");
        names.push_back(suite);
    }
    suites::Context ctx{cfg.seed, cfg.oracle_dim_bound};
    if (!report_path.empty() && !std::ifstream(report_path)) {
        std::ofstream(report_path) << suites::calibration_report(ctx).dump(2) << "\n";
    }
    Json arr = Json::array();
    std::ostringstream t;
    bool ok = true;
    for (const auto& n : names) {
        auto r = suites::run(n, ctx);
        ok = ok && r.passed();
        arr.push_back(Json{{"suite", n}, {"criterion", r.criterion}, {"passed", r.passed()}, {"cases", r.cases},
                           {"failures", r.failures}});
        t << (r.passed() ? "PASS " : "FAIL ") << n << "  (" << r.cases << " cases, " << std::fixed
          << std::setprecision(2) << r.seconds << " s)\n";
        for (const auto& f : r.failures) t << "    " << f << "\n";
    }
    return {Json{{"schema", 1}, {"command", "check"}, {"seed", cfg.seed}, {"results", arr}, {"passed", ok}}, t.str(),
            ok ? 0 : 1};
}

}  // namespace superq::cli
