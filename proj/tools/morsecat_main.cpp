#include "morsecat/builder.hpp"
#include "morsecat/contiguity.hpp"
#include "morsecat/io.hpp"
#include "morsecat/search.hpp"
#include "morsecat/strong.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace morsecat;
using ojson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string complex_path;
    std::string morse_path;
    std::string out_path;
    std::string morse_out;
    std::string at_value;
    std::string a_value;
    std::string b_value;
    std::string scat_mode = "exact";
    std::string strategy = "anneal";
    long long budget = -1; // -1: command default
    std::uint64_t seed = 0;
    int jobs = 0;
    int trials = 8;
    bool bounds_only = false;
    bool restrict_st = false;
    bool strict_lm = false;
    bool serial = false;
};

StrongOptions strong_options(const Options& o) {
    return {o.restrict_st, o.strict_lm, o.serial ? Exec::Serial : Exec::Parallel};
}

ojson complex_info(const Options& o, const NamedComplex& nc) {
    ojson j;
    j["path"] = o.complex_path;
    j["digest"] = file_digest(o.complex_path);
    j["vertices"] = nc.complex.vertices().size();
    j["simplices"] = nc.complex.size();
    j["dim"] = nc.complex.dim();
    return j;
}

ojson morse_info(const Options& o) {
    ojson j;
    j["path"] = o.morse_path;
    j["digest"] = file_digest(o.morse_path);
    return j;
}

ojson pair_json(const GradientPair& p, const NameTable& names) {
    return ojson::array(
        {simplex_key(p.first, names), simplex_key(p.second, names)});
}

ojson witness_json(const std::vector<std::pair<VertexId, VertexId>>& order,
                   const NameTable& names) {
    ojson arr = ojson::array();
    for (const auto& [v, by] : order) {
        ojson step;
        step["vertex"] = names.name(v);
        step["dominated_by"] = names.name(by);
        arr.push_back(step);
    }
    return arr;
}

ojson cover_json(const Cover& cover, const NameTable& names) {
    ojson arr = ojson::array();
    for (const auto& block : cover.blocks) {
        ojson b = ojson::array();
        for (const Simplex& f : block)
            b.push_back(simplex_key(f, names));
        arr.push_back(b);
    }
    return arr;
}

ojson scrit_json(const ScritReport& rep, const NameTable& names) {
    ojson j;
    ojson objs = ojson::array();
    for (const CriticalObject& o : rep.objects) {
        ojson e;
        if (o.kind == CriticalObject::Kind::Simplex) {
            e["kind"] = "critical-simplex";
            e["simplex"] = simplex_key(o.simplex, names);
        } else {
            e["kind"] = "critical-pair";
            e["pair"] = pair_json(o.pair, names);
        }
        e["value"] = rat_str(o.value);
        objs.push_back(e);
    }
    j["objects"] = objs;
    j["count"] = rep.count();
    ojson ivs = ojson::array();
    for (const StrongInterval& iv : rep.intervals) {
        ojson e;
        e["v"] = names.name(iv.owner.v);
        e["u"] = names.name(iv.owner.u);
        e["lo"] = rat_str(iv.lo);
        e["hi"] = rat_str(iv.hi);
        ojson members = ojson::array();
        for (const GradientPair& p : iv.members)
            members.push_back(pair_json(p, names));
        e["members"] = members;
        ivs.push_back(e);
    }
    j["strong_intervals"] = ivs;
    ojson pvs = ojson::array();
    for (const PairValues& pv : rep.pair_values) {
        ojson e;
        e["v"] = names.name(pv.pair.v);
        e["u"] = names.name(pv.pair.u);
        e["m"] = pv.m.to_string();
        e["l"] = pv.l ? ojson(rat_str(*pv.l)) : ojson(nullptr);
        pvs.push_back(e);
    }
    j["pair_values"] = pvs;
    return j;
}

ojson function_json(const MorseFunction& f, const NameTable& names) {
    ojson j = ojson::object();
    for (const auto& [s, val] : f.values())
        j[simplex_key(s, names)] = rat_str(val);
    return j;
}

void emit(const Options& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write file: " + o.out_path);
    out << text;
}

void emit_report(const Options& o, ojson& report, Clock::time_point t0) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              Clock::now() - t0)
                              .count();
    emit(o, report.dump(2) + "\n");
}

void write_morse_out(const Options& o, const MorseFunction& f,
                     const NameTable& names) {
    if (o.morse_out.empty())
        return;
    std::ofstream out(o.morse_out, std::ios::binary);
    if (!out)
        throw DomainError("cannot write file: " + o.morse_out);
    out << serialize_morse(f, names);
}

int scat_for_verify(const Options& o, const SimplicialComplex& K) {
    if (o.scat_mode == "exact") {
        ContiguityBudget b;
        if (o.budget > 0)
            b = {o.budget, o.budget};
        return scat_exact(K, b).value;
    }
    try {
        std::size_t pos = 0;
        int v = std::stoi(o.scat_mode, &pos);
        if (pos != o.scat_mode.size() || v < 0)
            throw std::invalid_argument(o.scat_mode);
        return v;
    } catch (const std::exception&) {
        throw DomainError("--scat expects 'exact' or a non-negative integer, "
                          "got '" + o.scat_mode + "'");
    }
}

int run(const std::string& cmd, const Options& o) {
    auto t0 = Clock::now();
    ojson report;
    report["command"] = cmd;

    NamedComplex nc = parse_complex_file(o.complex_path);
    report["inputs"]["complex"] = complex_info(o, nc);
    const NameTable& names = nc.names;
    const SimplicialComplex& K = nc.complex;

    if (cmd == "validate") {
        auto raw = parse_morse_values_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        ValidationResult res = validate_dmf(K, raw);
        report["valid"] = res.ok();
        ojson viols = ojson::array();
        for (const MorseViolation& v : res.violations) {
            ojson e;
            e["rule"] = v.rule;
            e["simplex"] = simplex_key(v.simplex, names);
            ojson off = ojson::array();
            for (const Simplex& s : v.offenders)
                off.push_back(simplex_key(s, names));
            e["offenders"] = off;
            viols.push_back(e);
        }
        report["violations"] = viols;
        report["summary"] =
            res.ok() ? "valid discrete Morse function"
                     : "invalid: " + std::to_string(res.violations.size()) +
                           " violation(s)";
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "gradient") {
        MorseFunction f = parse_morse_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        GradientField V = gradient_field(K, f);
        ojson pairs = ojson::array();
        for (const GradientPair& p : V.pairs())
            pairs.push_back(pair_json(p, names));
        report["pairs"] = pairs;
        report["summary"] = std::to_string(V.size()) + " gradient pair(s)";
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "critical") {
        MorseFunction f = parse_morse_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        auto crit = forman_critical(K, f);
        ojson arr = ojson::array();
        for (const Simplex& s : crit)
            arr.push_back(simplex_key(s, names));
        report["critical"] = arr;
        report["summary"] =
            std::to_string(crit.size()) + " critical simplex(es)";
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "scrit") {
        MorseFunction f = parse_morse_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        ScritReport rep = scrit(K, f, strong_options(o));
        report.update(scrit_json(rep, names));
        report["summary"] = "#scrit = " + std::to_string(rep.count());
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "sublevel") {
        MorseFunction f = parse_morse_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        Level c = Level::parse(o.at_value);
        SimplicialComplex sub = sublevel_complex(K, f, c);
        ojson facets = ojson::array();
        for (const Simplex& s : sub.facets())
            facets.push_back(simplex_key(s, names));
        report["at"] = c.to_string();
        report["facets"] = facets;
        report["simplices"] = sub.size();
        report["summary"] = "K(" + c.to_string() + "): " +
                            std::to_string(sub.size()) + " simplices";
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "collapse-check") {
        MorseFunction f = parse_morse_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        Level a = Level::parse(o.a_value);
        Level b = Level::parse(o.b_value);
        long long budget = o.budget > 0 ? o.budget : kDefaultWitnessBudget;
        auto witness = check_interval_collapse(K, f, a, b, budget,
                                               strong_options(o));
        report["a"] = a.to_string();
        report["b"] = b.to_string();
        report["found"] = witness.has_value();
        report["witness"] =
            witness ? witness_json(witness->order, names) : ojson(nullptr);
        report["summary"] =
            witness ? "witness with " + std::to_string(witness->order.size()) +
                          " deletion(s)"
                    : "no witness found";
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "core") {
        CoreResult res = core(K);
        report["removed"] = witness_json(res.removed, names);
        ojson facets = ojson::array();
        for (const Simplex& s : res.complex.facets())
            facets.push_back(simplex_key(s, names));
        report["core_facets"] = facets;
        report["core_simplices"] = res.complex.size();
        report["summary"] = "core has " +
                            std::to_string(res.complex.size()) +
                            " simplices (" +
                            std::to_string(res.removed.size()) +
                            " vertices removed)";
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "scat") {
        if (o.bounds_only) {
            ScatBounds b = scat_bounds(K);
            report["lower"] = b.lower;
            report["upper"] = b.upper;
            report["star_cover"] = cover_json(b.star_cover, names);
            report["summary"] = std::to_string(b.lower) + " <= scat <= " +
                                std::to_string(b.upper);
            emit_report(o, report, t0);
            return 0;
        }
        ContiguityBudget b;
        if (o.budget > 0)
            b = {o.budget, o.budget};
        ScatResult res = scat_exact(K, b);
        report["scat"] = res.value;
        report["cover"] = cover_json(res.cover, names);
        report["summary"] = "scat = " + std::to_string(res.value);
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "verify-ls") {
        MorseFunction f = parse_morse_file(o.morse_path, nc);
        report["inputs"]["morse"] = morse_info(o);
        int scat_value = scat_for_verify(o, K);
        LsReport ls = verify_ls(K, f, scat_value, strong_options(o));
        report["scat"] = ls.scat_value;
        report["scrit_count"] = ls.scrit_count;
        report["holds"] = ls.holds;
        report["equality"] = ls.equality;
        std::string rel = std::to_string(ls.scat_value) + "+1 ≤ " +
                          std::to_string(ls.scrit_count);
        report["summary"] = rel + ": " +
                            (ls.holds ? (ls.equality ? "OK (equality)" : "OK")
                                      : "FAIL");
        emit_report(o, report, t0);
        return ls.holds ? 0 : 1;
    }
    if (cmd == "build-greedy") {
        MorseFunction f = greedy_strong_dmf(K, o.seed);
        ScritReport rep = scrit(K, f, strong_options(o));
        report["seed"] = o.seed;
        report["function"] = function_json(f, names);
        report["scrit_count"] = rep.count();
        report["summary"] = "#scrit = " + std::to_string(rep.count());
        write_morse_out(o, f, names);
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "optimize") {
        OptimizerConfig cfg;
        cfg.budget = o.budget > 0 ? o.budget : 200;
        cfg.seed = o.seed;
        cfg.trials = o.trials;
        cfg.jobs = o.jobs;
        cfg.strong = strong_options(o);
        cfg.strong.exec = Exec::Serial;
        if (o.strategy == "greedy")
            cfg.strategy = OptimizerConfig::Strategy::Greedy;
        else if (o.strategy == "anneal")
            cfg.strategy = OptimizerConfig::Strategy::Anneal;
        else
            throw DomainError("--strategy expects 'greedy' or 'anneal'");
        OptimizerResult res = optimize_scrit(K, cfg);
        report["seed"] = o.seed;
        report["budget"] = cfg.budget;
        report["strategy"] = o.strategy;
        report["best_count"] = res.best_count;
        report["history"] = res.history;
        report["function"] = function_json(res.best, names);
        report["summary"] = "best #scrit = " + std::to_string(res.best_count);
        write_morse_out(o, res.best, names);
        emit_report(o, report, t0);
        return 0;
    }
    if (cmd == "export-dot") {
        if (!o.morse_path.empty()) {
            MorseFunction f = parse_morse_file(o.morse_path, nc);
            ScritReport rep = scrit(K, f, strong_options(o));
            emit(o, export_dot(nc, &f, &rep));
        } else {
            emit(o, export_dot(nc, nullptr, nullptr));
        }
        return 0;
    }
    throw DomainError("unknown command: " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong discrete Morse theory toolkit"};
    app.require_subcommand(1);

    Options o;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    auto add = [&](const std::string& name, const std::string& desc,
                   bool needs_morse, bool morse_required) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("-c,--complex", o.complex_path, "complex file")
            ->required();
        if (needs_morse) {
            auto* opt =
                s->add_option("-f,--morse", o.morse_path, "Morse function file");
            if (morse_required)
                opt->required();
        }
        s->add_option("--out", o.out_path, "write the report here");
        s->add_option("--budget", o.budget, "search/iteration budget")
            ->envname("MORSECAT_BUDGET");
        s->add_option("--seed", o.seed, "random seed")
            ->envname("MORSECAT_SEED");
        s->add_option("--jobs", o.jobs, "parallel trial count")
            ->envname("MORSECAT_JOBS");
        s->add_flag("--restrict-strong-set-to-st", o.restrict_st,
                    "restrict S^f_v members to St(v,u)");
        s->add_flag("--strict-l-below-m", o.strict_lm,
                    "require l_v strictly below m_v");
        s->add_flag("--serial", o.serial, "disable parallel kernels");
        subs.push_back({name, s});
        return s;
    };

    add("validate", "check a Morse function against its complex", true, true);
    add("gradient", "induced gradient vector field", true, true);
    add("critical", "Forman-critical simplices", true, true);
    add("scrit", "critical objects, strong intervals, m/l values", true, true);
    CLI::App* sub = add("sublevel", "level subcomplex K(c)", true, true);
    sub->add_option("--at", o.at_value, "level value (rational or inf)")
        ->required();
    sub = add("collapse-check", "strong collapse witness between sublevels",
              true, true);
    sub->add_option("-a", o.a_value, "lower level")->required();
    sub->add_option("-b", o.b_value, "upper level")->required();
    add("core", "iterated strong collapse", false, false);
    sub = add("scat", "simplicial LS-category", false, false);
    sub->add_flag("--bounds", o.bounds_only, "report bounds instead of exact");
    sub = add("verify-ls", "check scat(K)+1 <= #scrit(f)", true, true);
    sub->add_option("--scat", o.scat_mode,
                    "'exact' or a supplied scat value");
    sub = add("build-greedy", "greedy strong-collapse Morse function", false,
              false);
    sub->add_option("--morse-out", o.morse_out, "write the function here");
    sub = add("optimize", "minimize #scrit over orderings", false, false);
    sub->add_option("--morse-out", o.morse_out, "write the best function here");
    sub->add_option("--strategy", o.strategy, "greedy or anneal");
    sub->add_option("--trials", o.trials, "independent optimizer restarts");
    add("export-dot", "Hasse diagram with gradient arcs", true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        for (const auto& [name, s] : subs)
            if (s->parsed())
                return run(name, o);
        std::cerr << "morsecat: error: no command given\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "morsecat: error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "morsecat: error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "morsecat: error: " << e.what() << "\n";
        return 1;
    }
}
