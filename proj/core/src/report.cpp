#include "warrant/report.hpp"

#include <sstream>

namespace warrant {

namespace {

const char* change_name(ChangeKind c) {
    switch (c) {
    case ChangeKind::Inc:
        return "inc";
    case ChangeKind::Dec:
        return "dec";
    case ChangeKind::Eq:
        return "eq";
    case ChangeKind::ToTrue:
        return "true (aka top)";
    case ChangeKind::ToFalse:
        return "false (aka bottom)";
    }
    return "?";
}

Json partition_json(const DeltaPartition& d, const std::vector<Feature>& fs) {
    auto names = [&](const std::vector<int>& idx) {
        Json arr = Json::array();
        for (int i : idx) arr.push_back(fs[i].name);
        return arr;
    };
    Json j;
    j["inc"] = names(d.inc);
    j["dec"] = names(d.dec);
    j["eq"] = names(d.eq);
    j[change_name(ChangeKind::ToTrue)] = names(d.set_true);
    j[change_name(ChangeKind::ToFalse)] = names(d.set_false);
    return j;
}

std::string partition_text(const DeltaPartition& d,
                           const std::vector<Feature>& fs) {
    auto names = [&](const std::vector<int>& idx) {
        std::string out = "{";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) out += ",";
            out += fs[idx[i]].name;
        }
        return out + "}";
    };
    std::string out;
    out += "inc=" + names(d.inc) + " dec=" + names(d.dec) + " eq=" + names(d.eq);
    out += " true(top)=" + names(d.set_true);
    out += " false(bottom)=" + names(d.set_false);
    return out;
}

} // namespace

Json guarantees_to_json(const GuaranteeSet& gs, const Abstraction& abs) {
    Json out;
    Json actions = Json::array();
    const std::size_t count =
        std::max(gs.sufficient.size(), gs.necessary.size());
    for (std::size_t i = 0; i < count; ++i) {
        const GuaranteeEntry* suff =
            i < gs.sufficient.size() ? &gs.sufficient[i] : nullptr;
        const GuaranteeEntry* nec =
            i < gs.necessary.size() ? &gs.necessary[i] : nullptr;
        const std::string& name =
            suff ? suff->abstract_action : nec->abstract_action;
        Json entry;
        entry["abstract_action"] = name;
        const AbstractAction* abar = abs.action(name);
        if (abar) {
            entry["delta_partition"] =
                partition_json(effect_partition(*abar, abs.features), abs.features);
        }
        if (suff) {
            entry["precondition"] = to_sexpr(suff->precondition);
            Json dis = Json::array();
            for (const auto& [schema, psi] : suff->disjuncts) {
                Json d;
                d["schema"] = schema;
                d["sufficient"] = to_sexpr(psi);
                dis.push_back(std::move(d));
            }
            entry["sufficient_disjuncts"] = std::move(dis);
            entry["sufficient_sentence"] = to_sexpr(suff->assembled);
        }
        if (nec) {
            Json dis = Json::array();
            for (const auto& [schema, gamma] : nec->disjuncts) {
                Json d;
                d["schema"] = schema;
                d["necessary"] = to_sexpr(gamma);
                dis.push_back(std::move(d));
            }
            entry["necessary_disjuncts"] = std::move(dis);
            entry["necessary_sentence"] = to_sexpr(nec->assembled);
        }
        actions.push_back(std::move(entry));
    }
    out["guarantees"] = std::move(actions);
    return out;
}

std::string guarantees_to_text(const GuaranteeSet& gs, const Abstraction& abs) {
    std::ostringstream out;
    const std::size_t count =
        std::max(gs.sufficient.size(), gs.necessary.size());
    for (std::size_t i = 0; i < count; ++i) {
        const GuaranteeEntry* suff =
            i < gs.sufficient.size() ? &gs.sufficient[i] : nullptr;
        const GuaranteeEntry* nec =
            i < gs.necessary.size() ? &gs.necessary[i] : nullptr;
        const std::string& name =
            suff ? suff->abstract_action : nec->abstract_action;
        out << "; abstract action " << name << "\n";
        const AbstractAction* abar = abs.action(name);
        if (abar) {
            out << ";   delta partition: "
                << partition_text(effect_partition(*abar, abs.features),
                                  abs.features)
                << "\n";
        }
        if (suff) {
            out << ";   abstract precondition\n";
            out << "(pre " << name << " " << to_sexpr(suff->precondition) << ")\n";
            for (const auto& [schema, psi] : suff->disjuncts) {
                out << "(sufficient " << name << " " << schema << " "
                    << to_sexpr(psi) << ")\n";
            }
            out << "(sufficient-sentence " << name << " "
                << to_sexpr(suff->assembled) << ")\n";
        }
        if (nec) {
            for (const auto& [schema, gamma] : nec->disjuncts) {
                out << "(necessary " << name << " " << schema << " "
                    << to_sexpr(gamma) << ")\n";
            }
            out << "(necessary-sentence " << name << " " << to_sexpr(nec->assembled)
                << ")\n";
        }
        out << "\n";
    }
    return out.str();
}

Json state_to_json(const Problem& prob, const State& s) {
    Json arr = Json::array();
    for (const auto& atom : prob.atoms_of(s)) arr.push_back(atom.to_string());
    return arr;
}

std::string state_to_text(const Problem& prob, const State& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& atom : prob.atoms_of(s)) {
        if (!first) out += ", ";
        first = false;
        out += atom.to_string();
    }
    return out + "}";
}

namespace {

Json stats_json(const CheckStats& stats) {
    Json j;
    j["states"] = stats.states;
    j["checks"] = stats.checks;
    return j;
}

} // namespace

Json report_to_json(const Problem& prob, const GuaranteeReport& r) {
    Json j;
    j["mode"] = "guarantee";
    j["verdict"] = r.valid ? "valid" : "counterexample";
    if (r.counterexample) {
        Json c;
        c["state"] = state_to_json(prob, r.counterexample->state);
        c["abstract_action"] = r.counterexample->abstract_action;
        c["ground_action"] = r.counterexample->ground_action;
        c["detail"] = r.counterexample->verdict.detail;
        j["counterexample"] = std::move(c);
    }
    j["stats"] = stats_json(r.stats);
    return j;
}

Json report_to_json(const Problem& prob, const SoundnessReport& r) {
    Json j;
    j["mode"] = "sound";
    j["verdict"] = r.sound ? "sound" : "unsound";
    if (r.witness) {
        Json w;
        w["state"] = state_to_json(prob, r.witness->state);
        w["abstract_action"] = r.witness->abstract_action;
        j["witness"] = std::move(w);
    }
    j["stats"] = stats_json(r.stats);
    return j;
}

Json report_to_json(const Problem& prob, const MembershipReport& r) {
    Json j;
    j["mode"] = "member";
    j["verdict"] = r.verdict == MembershipVerdict::Member ? "member"
                   : r.verdict == MembershipVerdict::FailsCompliance
                       ? "fails-compliance"
                       : "fails-implication";
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.witness) j["witness"] = state_to_json(prob, *r.witness);
    if (r.abstract_action) j["abstract_action"] = *r.abstract_action;
    j["stats"] = stats_json(r.stats);
    return j;
}

Json report_to_json(const Problem& prob, const InvariantReport& r) {
    Json j;
    j["mode"] = "invariant";
    j["verdict"] = r.holds ? "holds-on-reachable" : "counterexample";
    if (r.witness) j["witness"] = state_to_json(prob, *r.witness);
    j["stats"] = stats_json(r.stats);
    return j;
}

Json report_to_json(const Problem& prob, const PolicyReport& r) {
    Json j;
    j["mode"] = "policy";
    switch (r.outcome) {
    case PolicyOutcome::GoalReached:
        j["verdict"] = "goal-reached";
        break;
    case PolicyOutcome::Stuck:
        j["verdict"] = "stuck";
        break;
    case PolicyOutcome::StepLimit:
        j["verdict"] = "step-limit";
        break;
    case PolicyOutcome::PolicyIncomplete:
        j["verdict"] = "policy-incomplete";
        break;
    case PolicyOutcome::NonTerminating:
        j["verdict"] = "non-terminating";
        break;
    }
    Json trace = Json::array();
    for (const auto& step : r.trace) {
        Json t;
        t["abstract"] = step.abstract_action;
        t["ground"] = step.ground_action;
        trace.push_back(std::move(t));
    }
    j["trace"] = std::move(trace);
    if (r.stop_state) j["stop_state"] = state_to_json(prob, *r.stop_state);
    j["branches"] = r.branches_explored;
    j["max_depth"] = r.max_depth;
    return j;
}

std::string report_to_text(const Problem& prob, const GuaranteeReport& r) {
    std::ostringstream out;
    out << "guarantee: " << (r.valid ? "valid" : "counterexample") << "\n";
    if (r.counterexample) {
        out << "  state: " << state_to_text(prob, r.counterexample->state) << "\n";
        out << "  abstract action: " << r.counterexample->abstract_action << "\n";
        out << "  ground action: " << r.counterexample->ground_action << "\n";
        out << "  reason: " << r.counterexample->verdict.detail << "\n";
    }
    out << "  states examined: " << r.stats.states
        << ", checks: " << r.stats.checks << "\n";
    return out.str();
}

std::string report_to_text(const Problem& prob, const SoundnessReport& r) {
    std::ostringstream out;
    out << "soundness: " << (r.sound ? "sound" : "unsound") << "\n";
    if (r.witness) {
        out << "  witness state: " << state_to_text(prob, r.witness->state) << "\n";
        out << "  applicable but uninstantiable: " << r.witness->abstract_action
            << "\n";
    }
    out << "  states examined: " << r.stats.states
        << ", checks: " << r.stats.checks << "\n";
    return out.str();
}

std::string report_to_text(const Problem& prob, const MembershipReport& r) {
    std::ostringstream out;
    out << "membership: ";
    switch (r.verdict) {
    case MembershipVerdict::Member:
        out << "member\n";
        break;
    case MembershipVerdict::FailsCompliance:
        out << "fails-compliance\n";
        break;
    case MembershipVerdict::FailsImplication:
        out << "fails-implication\n";
        break;
    }
    if (!r.detail.empty()) out << "  " << r.detail << "\n";
    if (r.witness) out << "  witness: " << state_to_text(prob, *r.witness) << "\n";
    return out.str();
}

std::string report_to_text(const Problem& prob, const InvariantReport& r) {
    std::ostringstream out;
    out << "invariant: " << (r.holds ? "holds-on-reachable" : "counterexample")
        << "\n";
    if (r.witness) out << "  witness: " << state_to_text(prob, *r.witness) << "\n";
    out << "  states examined: " << r.stats.states << "\n";
    return out.str();
}

std::string report_to_text(const Problem& prob, const PolicyReport& r) {
    std::ostringstream out;
    out << "policy: ";
    switch (r.outcome) {
    case PolicyOutcome::GoalReached:
        out << "goal-reached";
        break;
    case PolicyOutcome::Stuck:
        out << "stuck";
        break;
    case PolicyOutcome::StepLimit:
        out << "step-limit";
        break;
    case PolicyOutcome::PolicyIncomplete:
        out << "policy-incomplete";
        break;
    case PolicyOutcome::NonTerminating:
        out << "non-terminating";
        break;
    }
    out << " (branches: " << r.branches_explored << ", max depth: " << r.max_depth
        << ")\n";
    for (const auto& step : r.trace) {
        out << "  " << step.abstract_action << " via " << step.ground_action << "\n";
    }
    if (r.stop_state) {
        out << "  stopped at: " << state_to_text(prob, *r.stop_state) << "\n";
    }
    return out.str();
}

} // namespace warrant
