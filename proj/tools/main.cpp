#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "warrant/equivalence.hpp"
#include "warrant/parse.hpp"
#include "warrant/report.hpp"
#include "warrant/simplify.hpp"

namespace {

using namespace warrant;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string base_kind = "general";
    std::string amend_star;
    std::string config_file;
    bool all_different = false;
    std::string scope = "reachable";
    std::uint64_t max_states = 200000;
    std::uint64_t max_checks = 10000000;
    std::uint64_t max_steps = 10000;
    int bound = 4;
    std::string chooser = "first";
    std::string format = "text";
    std::string output;
    bool no_timestamp = false;
};

std::set<std::string> split_list(const std::string& csv) {
    std::set<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.insert(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.insert(cur);
    return out;
}

// Config files carry the two base keys as `key = value` lines; command
// line flags take precedence.
void apply_config(CommonOpts& opts, bool base_kind_set, bool amend_set) {
    if (opts.config_file.empty()) return;
    std::ifstream in(opts.config_file);
    if (!in) throw InputError("cannot open config file: " + opts.config_file);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw ParseError(opts.config_file, lineno, 1,
                                 "expected key = value");
            }
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string()
                                          : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "base.kind") {
            if (!base_kind_set) opts.base_kind = value;
        } else if (key == "base.amended_star") {
            if (!amend_set) opts.amend_star = value;
        } else {
            throw ParseError(opts.config_file, lineno, 1,
                             "unknown config key '" + key + "'");
        }
    }
}

BaseOptions base_options(const CommonOpts& opts) {
    BaseOptions b;
    if (opts.base_kind == "general") {
        b.kind = BaseKind::General;
    } else if (opts.base_kind == "trivial") {
        b.kind = BaseKind::Trivial;
    } else {
        throw InputError("unknown base kind: " + opts.base_kind);
    }
    b.amended_star = split_list(opts.amend_star);
    return b;
}

void emit(const CommonOpts& opts, const std::string& text_body, Json json_body,
          std::chrono::steady_clock::time_point started) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::string out;
    if (opts.format == "json") {
        if (!opts.no_timestamp) {
            Json meta;
            auto now = std::chrono::system_clock::now();
            meta["generated_unix"] =
                std::chrono::duration_cast<std::chrono::seconds>(
                    now.time_since_epoch())
                    .count();
            meta["elapsed_ms"] = elapsed;
            json_body["meta"] = std::move(meta);
        }
        out = json_body.dump(2) + "\n";
    } else {
        std::ostringstream ss;
        if (!opts.no_timestamp) {
            auto now = std::chrono::system_clock::to_time_t(
                std::chrono::system_clock::now());
            char buf[64];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            ss << "; generated " << buf << " (" << elapsed << " ms)\n";
        }
        ss << text_body;
        out = ss.str();
    }
    if (opts.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(opts.output, std::ios::binary);
        if (!f) throw InputError("cannot write output file: " + opts.output);
        f << out;
    }
}

int run_synth(const CommonOpts& opts, const std::string& domain_file,
              const std::string& abstraction_file) {
    auto started = std::chrono::steady_clock::now();
    auto domain = parse_domain_file(domain_file);
    Abstraction abs = parse_abstraction_file(abstraction_file, *domain->signature);
    auto base = make_base(base_options(opts));
    GuaranteeSet gs = synthesize(abs, *domain, *base);

    Json body;
    body["domain"] = domain_file;
    body["abstraction"] = abstraction_file;
    body["base"] = opts.base_kind;
    if (!opts.amend_star.empty()) body["amended_star"] = opts.amend_star;
    Json g = guarantees_to_json(gs, abs);
    body["guarantees"] = std::move(g["guarantees"]);

    std::ostringstream text;
    text << "; domain " << domain_file << "\n; abstraction " << abstraction_file
         << "\n; base " << opts.base_kind;
    if (!opts.amend_star.empty()) text << " (amended star: " << opts.amend_star << ")";
    text << "\n\n" << guarantees_to_text(gs, abs);
    emit(opts, text.str(), std::move(body), started);
    return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& domain_file,
               const std::string& abstraction_file,
               const std::string& instance_file, const std::string& mode,
               const std::string& policy_file, const std::string& invariant_file) {
    auto started = std::chrono::steady_clock::now();
    auto domain = parse_domain_file(domain_file);
    Abstraction abs = parse_abstraction_file(abstraction_file, *domain->signature);
    auto inst = parse_instance_file(instance_file, domain);
    GroundOptions gopts;
    gopts.all_different = opts.all_different;
    Problem prob(inst, gopts);
    Budgets budgets{opts.max_states, opts.max_checks};
    Scope scope = opts.scope == "all-states" ? Scope::AllStates : Scope::Reachable;

    int exit_code = kExitOk;
    Json body;
    std::string text;
    if (mode == "guarantee" || mode == "member") {
        auto base = make_base(base_options(opts));
        GuaranteeSet gs = synthesize_sufficient(abs, *domain, *base);
        if (mode == "guarantee") {
            auto r = check_guarantee_valid(gs, abs, prob, scope, budgets);
            body = report_to_json(prob, r);
            text = report_to_text(prob, r);
            exit_code = r.valid ? kExitOk : kExitCounterexample;
        } else {
            auto r = check_membership(abs, gs, prob, budgets);
            body = report_to_json(prob, r);
            text = report_to_text(prob, r);
            exit_code = r.verdict == MembershipVerdict::Member
                            ? kExitOk
                            : kExitCounterexample;
        }
    } else if (mode == "sound") {
        auto r = check_soundness_direct(abs, prob, budgets);
        body = report_to_json(prob, r);
        text = report_to_text(prob, r);
        exit_code = r.sound ? kExitOk : kExitCounterexample;
    } else if (mode == "invariant") {
        if (invariant_file.empty()) {
            throw InputError("--mode invariant needs --invariant FILE");
        }
        FormulaRef f = parse_formula_file(invariant_file, *domain->signature);
        auto r = check_invariant(f, prob, budgets);
        body = report_to_json(prob, r);
        text = report_to_text(prob, r);
        exit_code = r.holds ? kExitOk : kExitCounterexample;
    } else if (mode == "policy") {
        if (policy_file.empty()) {
            throw InputError("--mode policy needs --policy FILE");
        }
        Policy policy = parse_policy_file(policy_file, abs);
        ChooseMode chooser =
            opts.chooser == "all" ? ChooseMode::All : ChooseMode::First;
        auto r = run_policy(policy, abs, prob, opts.max_steps, chooser);
        body = report_to_json(prob, r);
        text = report_to_text(prob, r);
        exit_code = r.outcome == PolicyOutcome::GoalReached ? kExitOk
                                                            : kExitCounterexample;
    } else {
        throw InputError("unknown mode: " + mode);
    }
    emit(opts, text, std::move(body), started);
    return exit_code;
}

int run_equiv(const CommonOpts& opts, const std::string& domain_file,
              const std::string& file1, const std::string& file2) {
    auto started = std::chrono::steady_clock::now();
    auto domain = parse_domain_file(domain_file);
    auto sig = domain->signature;
    FormulaRef f1 = parse_formula_file(file1, *sig);
    FormulaRef f2 = parse_formula_file(file2, *sig);
    EquivResult r = semantically_equivalent(f1, f2, sig, opts.bound);

    Json body;
    body["mode"] = "equiv";
    body["bound"] = opts.bound;
    body["verdict"] = r.equivalent ? "equivalent-up-to-bound" : "counterexample";
    body["structures_covered"] = r.structures_covered;
    std::ostringstream text;
    text << (r.equivalent ? "equivalent-up-to-bound" : "counterexample")
         << " (bound " << opts.bound << ", " << r.structures_covered
         << " structures)\n";
    if (r.counterexample) {
        const auto& ce = *r.counterexample;
        Json cj;
        Json atoms = Json::array();
        std::string atom_text;
        for (std::size_t p = 0; p < sig->predicates().size(); ++p) {
            for (const auto& tup : ce.structure.tuples(static_cast<int>(p))) {
                std::string s = sig->predicate(static_cast<int>(p)).name + "(";
                for (std::size_t i = 0; i < tup.size(); ++i) {
                    if (i) s += ',';
                    s += ce.structure.object_name(tup[i]);
                }
                s += ')';
                atoms.push_back(s);
                atom_text += "  " + s + "\n";
            }
        }
        cj["universe"] = Json(ce.structure.universe());
        cj["atoms"] = std::move(atoms);
        Json consts;
        for (std::size_t c = 0; c < sig->constants().size(); ++c) {
            consts[sig->constants()[c]] =
                ce.structure.object_name(ce.structure.constant_object(
                    static_cast<int>(c)));
        }
        cj["constants"] = std::move(consts);
        cj["binding"] = Json(ce.binding);
        body["counterexample"] = std::move(cj);
        text << "universe:";
        for (const auto& o : ce.structure.universe()) text << " " << o;
        text << "\natoms:\n" << atom_text;
        text << "constants:";
        for (std::size_t c = 0; c < sig->constants().size(); ++c) {
            text << " " << sig->constants()[c] << "="
                 << ce.structure.object_name(
                        ce.structure.constant_object(static_cast<int>(c)));
        }
        text << "\nbinding:";
        for (const auto& [var, obj] : ce.binding) {
            text << " " << var << "=" << obj;
        }
        text << "\n";
    }
    emit(opts, text.str(), std::move(body), started);
    return r.equivalent ? kExitOk : kExitCounterexample;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order soundness guarantees for qualitative numerical "
                 "abstractions of STRIPS domains"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string domain_file, abstraction_file, instance_file;
    std::string mode = "guarantee";
    std::string policy_file, invariant_file, file1, file2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--base", opts.base_kind, "base kind: general | trivial");
        cmd->add_option("--amend-star", opts.amend_star,
                        "predicates whose sufficient closure row gets the "
                        "bridging term, comma separated");
        cmd->add_option("--config", opts.config_file,
                        "config file with base.kind / base.amended_star keys");
        cmd->add_option("--format", opts.format, "output format: text | json");
        cmd->add_option("-o,--output", opts.output, "write the report here");
        cmd->add_flag("--no-timestamp", opts.no_timestamp,
                      "omit the timestamp header (byte-identical reruns)");
    };

    CLI::App* synth = app.add_subcommand(
        "synth", "synthesize sufficient and necessary guarantees");
    synth->add_option("domain", domain_file)->required();
    synth->add_option("abstraction", abstraction_file)->required();
    add_common(synth);

    CLI::App* verify = app.add_subcommand("verify", "verify against an instance");
    verify->add_option("domain", domain_file)->required();
    verify->add_option("abstraction", abstraction_file)->required();
    verify->add_option("instance", instance_file)->required();
    verify->add_option("--mode", mode,
                       "guarantee | sound | member | invariant | policy");
    verify->add_option("--policy", policy_file, "policy file for --mode policy");
    verify->add_option("--invariant", invariant_file,
                       "formula file for --mode invariant");
    verify->add_option("--scope", opts.scope, "reachable | all-states");
    verify->add_option("--max-states", opts.max_states, "state budget");
    verify->add_option("--max-checks", opts.max_checks, "check budget");
    verify->add_option("--max-steps", opts.max_steps, "policy step budget");
    verify->add_option("--chooser", opts.chooser, "first | all");
    verify->add_flag("--all-different", opts.all_different,
                     "ground with pairwise distinct arguments");
    add_common(verify);

    CLI::App* equiv = app.add_subcommand(
        "equiv", "bounded semantic equivalence of two formula files");
    equiv->add_option("domain", domain_file)->required();
    equiv->add_option("formula1", file1)->required();
    equiv->add_option("formula2", file2)->required();
    equiv->add_option("--bound", opts.bound, "maximum universe size");
    add_common(equiv);

    CLI11_PARSE(app, argc, argv);

    try {
        bool base_set = synth->count("--base") || verify->count("--base") ||
                        equiv->count("--base");
        bool amend_set = synth->count("--amend-star") ||
                         verify->count("--amend-star") ||
                         equiv->count("--amend-star");
        apply_config(opts, base_set, amend_set);
        if (app.got_subcommand(synth)) {
            return run_synth(opts, domain_file, abstraction_file);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(opts, domain_file, abstraction_file, instance_file,
                              mode, policy_file, invariant_file);
        }
        return run_equiv(opts, domain_file, file1, file2);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
