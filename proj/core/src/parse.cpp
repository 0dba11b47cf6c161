#include "warrant/parse.hpp"

#include <algorithm>

namespace warrant {

namespace {

Term parse_term(const Sexpr& node, const Signature& sig) {
    return resolve_term(sig, node.as_atom("a term"));
}

std::vector<std::string> parse_var_list(const Sexpr& node) {
    if (node.is_atom) node.fail("expected a variable list");
    std::vector<std::string> vars;
    for (const auto& v : node.items) {
        vars.push_back(v.as_atom("a variable"));
    }
    return vars;
}

} // namespace

FormulaRef parse_formula(const Sexpr& node, const Signature& sig) {
    if (node.is_atom) {
        if (node.atom == "true") return Formula::truth();
        if (node.atom == "false") return Formula::falsity();
        node.fail("expected a formula, got '" + node.atom + "'");
    }
    if (node.items.empty()) node.fail("empty formula");
    const std::string& head = node[0].as_atom("an operator or predicate");

    auto expect_args = [&](std::size_t n) {
        if (node.size() != n + 1) {
            node.fail(head + " expects " + std::to_string(n) + " arguments");
        }
    };

    if (head == "and" || head == "or") {
        std::vector<FormulaRef> kids;
        for (std::size_t i = 1; i < node.size(); ++i) {
            kids.push_back(parse_formula(node[i], sig));
        }
        return head == "and" ? Formula::conj(std::move(kids))
                             : Formula::disj(std::move(kids));
    }
    if (head == "not") {
        expect_args(1);
        return Formula::negation(parse_formula(node[1], sig));
    }
    if (head == "implies") {
        expect_args(2);
        return Formula::implies(parse_formula(node[1], sig),
                                parse_formula(node[2], sig));
    }
    if (head == "exists" || head == "forall") {
        expect_args(2);
        auto vars = parse_var_list(node[1]);
        for (const auto& v : vars) {
            if (sig.is_constant(v)) {
                node[1].fail("cannot quantify over constant '" + v + "'");
            }
        }
        FormulaRef body = parse_formula(node[2], sig);
        return head == "exists" ? Formula::exists(std::move(vars), std::move(body))
                                : Formula::forall(std::move(vars), std::move(body));
    }
    if (head == "=") {
        expect_args(2);
        return Formula::equal(parse_term(node[1], sig), parse_term(node[2], sig));
    }

    // Closure atom: predicate name suffixed with * or +.
    if (head.size() > 1 && (head.back() == '*' || head.back() == '+')) {
        std::string pred = head.substr(0, head.size() - 1);
        auto pidx = sig.predicate_index(pred);
        if (pidx) {
            if (!sig.is_closure_enabled(pred)) {
                node.fail("closure not available for predicate '" + pred + "'");
            }
            expect_args(2);
            return Formula::closure(pred,
                                    head.back() == '*' ? ClosureKind::Star
                                                       : ClosureKind::Plus,
                                    parse_term(node[1], sig),
                                    parse_term(node[2], sig));
        }
    }

    auto pidx = sig.predicate_index(head);
    if (!pidx) node.fail("unknown predicate '" + head + "'");
    int arity = sig.predicate(*pidx).arity;
    if (static_cast<int>(node.size()) != arity + 1) {
        node.fail("predicate " + head + " expects " + std::to_string(arity) +
                  " arguments");
    }
    std::vector<Term> terms;
    for (std::size_t i = 1; i < node.size(); ++i) {
        terms.push_back(parse_term(node[i], sig));
    }
    return Formula::atom(head, std::move(terms));
}

FormulaRef parse_formula_text(const std::string& text, const Signature& sig,
                              const std::string& file) {
    return parse_formula(parse_sexpr(text, file), sig);
}

FormulaRef parse_formula_file(const std::string& path, const Signature& sig) {
    return parse_formula(parse_sexpr(read_file(path), path), sig);
}

namespace {

SchemaAtom parse_schema_atom(const Sexpr& node, const Signature& sig) {
    if (node.is_atom || node.items.empty()) node.fail("expected an atom");
    SchemaAtom atom;
    atom.pred = node[0].as_atom("a predicate");
    auto pidx = sig.predicate_index(atom.pred);
    if (!pidx) node[0].fail("unknown predicate '" + atom.pred + "'");
    if (static_cast<int>(node.size()) != sig.predicate(*pidx).arity + 1) {
        node.fail("predicate " + atom.pred + " expects " +
                  std::to_string(sig.predicate(*pidx).arity) + " arguments");
    }
    for (std::size_t i = 1; i < node.size(); ++i) {
        atom.args.push_back(parse_term(node[i], sig));
    }
    return atom;
}

std::vector<SchemaAtom> parse_atom_list(const Sexpr& node, const Signature& sig) {
    if (node.is_atom) node.fail("expected an atom list");
    std::vector<SchemaAtom> atoms;
    for (const auto& a : node.items) {
        atoms.push_back(parse_schema_atom(a, sig));
    }
    return atoms;
}

} // namespace

std::shared_ptr<const DomainSchema> parse_domain(const Sexpr& node) {
    if (node.is_atom || node.items.empty() || node[0].atom != "domain") {
        node.fail("expected (domain ...)");
    }
    std::vector<std::string> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<const Sexpr*> action_nodes;
    for (std::size_t i = 1; i < node.size(); ++i) {
        const Sexpr& section = node[i];
        if (section.is_atom || section.items.empty()) {
            section.fail("expected a domain section");
        }
        const std::string& tag = section[0].as_atom("a section tag");
        if (tag == "constants") {
            for (std::size_t j = 1; j < section.size(); ++j) {
                constants.push_back(section[j].as_atom("a constant"));
            }
        } else if (tag == "predicates") {
            for (std::size_t j = 1; j < section.size(); ++j) {
                const Sexpr& p = section[j];
                if (p.is_atom || p.size() != 2) {
                    p.fail("expected (name arity)");
                }
                PredicateDecl decl;
                decl.name = p[0].as_atom("a predicate name");
                try {
                    decl.arity = std::stoi(p[1].as_atom("an arity"));
                } catch (const std::exception&) {
                    p[1].fail("expected an arity");
                }
                predicates.push_back(std::move(decl));
            }
        } else if (tag == "action") {
            action_nodes.push_back(&section);
        } else {
            section.fail("unknown domain section '" + tag + "'");
        }
    }

    auto domain = std::make_shared<DomainSchema>();
    try {
        domain->signature = std::make_shared<const Signature>(
            Signature::with_all_closures(constants, predicates));
    } catch (const InputError& e) {
        node.fail(e.what());
    }
    const Signature& sig = *domain->signature;

    for (const Sexpr* anode : action_nodes) {
        const Sexpr& a = *anode;
        ActionSchema schema;
        schema.name = a.nth(1, "an action name").as_atom("an action name");
        std::size_t i = 2;
        while (i < a.size()) {
            const std::string& key = a[i].as_atom("an action keyword");
            if (i + 1 >= a.size()) a[i].fail("missing value after " + key);
            const Sexpr& val = a[i + 1];
            if (key == ":params") {
                schema.params = parse_var_list(val);
                for (const auto& p : schema.params) {
                    if (sig.is_constant(p)) {
                        val.fail("parameter '" + p + "' shadows a constant");
                    }
                }
            } else if (key == ":pre") {
                schema.pre = parse_atom_list(val, sig);
            } else if (key == ":add") {
                schema.add = parse_atom_list(val, sig);
            } else if (key == ":del") {
                schema.del = parse_atom_list(val, sig);
            } else {
                a[i].fail("unknown action keyword '" + key + "'");
            }
            i += 2;
        }
        domain->schemas.push_back(std::move(schema));
    }
    try {
        domain->validate();
    } catch (const InputError& e) {
        node.fail(e.what());
    }
    return domain;
}

std::shared_ptr<const DomainSchema> parse_domain_file(const std::string& path) {
    return parse_domain(parse_sexpr(read_file(path), path));
}

namespace {

GroundAtom parse_ground_atom(const Sexpr& node, const Signature& sig) {
    SchemaAtom atom = parse_schema_atom(node, sig);
    GroundAtom out;
    out.pred = atom.pred;
    for (const auto& t : atom.args) out.args.push_back(t.name);
    return out;
}

} // namespace

std::shared_ptr<const Instance>
parse_instance(const Sexpr& node, std::shared_ptr<const DomainSchema> domain) {
    if (node.is_atom || node.items.empty() || node[0].atom != "instance") {
        node.fail("expected (instance ...)");
    }
    auto inst = std::make_shared<Instance>();
    inst->domain = domain;
    const Signature& sig = *domain->signature;
    for (std::size_t i = 1; i < node.size(); ++i) {
        const Sexpr& section = node[i];
        if (section.is_atom || section.items.empty()) {
            section.fail("expected an instance section");
        }
        const std::string& tag = section[0].as_atom("a section tag");
        if (tag == "objects") {
            for (std::size_t j = 1; j < section.size(); ++j) {
                inst->objects.push_back(section[j].as_atom("an object"));
            }
        } else if (tag == "init" || tag == "goal") {
            auto& target = tag == "init" ? inst->init : inst->goal;
            for (std::size_t j = 1; j < section.size(); ++j) {
                target.push_back(parse_ground_atom(section[j], sig));
            }
        } else {
            section.fail("unknown instance section '" + tag + "'");
        }
    }
    // Objects must be fresh names; ground atoms must mention only
    // universe objects.
    std::set<std::string> universe(sig.constants().begin(),
                                   sig.constants().end());
    for (const auto& o : inst->objects) {
        if (!universe.insert(o).second) {
            throw InputError("instance object '" + o +
                             "' duplicates a constant or another object");
        }
    }
    for (const auto* list : {&inst->init, &inst->goal}) {
        for (const auto& atom : *list) {
            for (const auto& arg : atom.args) {
                if (!universe.count(arg)) {
                    node.fail("atom " + atom.to_string() +
                              " mentions unknown object '" + arg + "'");
                }
            }
        }
    }
    return inst;
}

std::shared_ptr<const Instance>
parse_instance_file(const std::string& path,
                    std::shared_ptr<const DomainSchema> domain) {
    return parse_instance(parse_sexpr(read_file(path), path), std::move(domain));
}

namespace {

FeatureLiteral parse_literal(const Sexpr& node, const Abstraction& abs) {
    if (node.is_atom || node.size() != 2) {
        node.fail("expected a literal like (gt n) or (true X)");
    }
    const std::string& op = node[0].as_atom("a literal operator");
    FeatureLiteral lit;
    lit.feature = node[1].as_atom("a feature name");
    const Feature* f = abs.feature(lit.feature);
    if (!f) node[1].fail("unknown feature '" + lit.feature + "'");
    if (op == "gt") {
        lit.kind = LiteralKind::NumPositive;
    } else if (op == "eqz") {
        lit.kind = LiteralKind::NumZero;
    } else if (op == "true") {
        lit.kind = LiteralKind::BoolTrue;
    } else if (op == "false") {
        lit.kind = LiteralKind::BoolFalse;
    } else {
        node[0].fail("unknown literal operator '" + op + "'");
    }
    return lit;
}

std::vector<FeatureLiteral> parse_literal_list(const Sexpr& node,
                                               const Abstraction& abs) {
    if (node.is_atom) node.fail("expected a literal list");
    std::vector<FeatureLiteral> lits;
    for (const auto& l : node.items) lits.push_back(parse_literal(l, abs));
    return lits;
}

AbstractEffect parse_effect(const Sexpr& node, const Abstraction& abs) {
    if (node.is_atom || node.size() != 2) {
        node.fail("expected an effect like (dec n) or (true X)");
    }
    const std::string& op = node[0].as_atom("an effect operator");
    AbstractEffect eff;
    eff.feature = node[1].as_atom("a feature name");
    if (!abs.feature(eff.feature)) {
        node[1].fail("unknown feature '" + eff.feature + "'");
    }
    if (op == "inc") {
        eff.kind = EffectKind::Inc;
    } else if (op == "dec") {
        eff.kind = EffectKind::Dec;
    } else if (op == "true") {
        eff.kind = EffectKind::SetTrue;
    } else if (op == "false") {
        eff.kind = EffectKind::SetFalse;
    } else {
        node[0].fail("unknown effect operator '" + op + "'");
    }
    return eff;
}

} // namespace

Abstraction parse_abstraction(const Sexpr& node, const Signature& sig) {
    if (node.is_atom || node.items.empty() || node[0].atom != "abstraction") {
        node.fail("expected (abstraction ...)");
    }
    Abstraction abs;
    const Sexpr* actions_node = nullptr;
    const Sexpr* init_node = nullptr;
    const Sexpr* goal_node = nullptr;
    for (std::size_t i = 1; i < node.size(); ++i) {
        const Sexpr& section = node[i];
        if (section.is_atom || section.items.empty()) {
            section.fail("expected an abstraction section");
        }
        const std::string& tag = section[0].as_atom("a section tag");
        if (tag == "features") {
            for (std::size_t j = 1; j < section.size(); ++j) {
                const Sexpr& fnode = section[j];
                if (fnode.is_atom || fnode.size() != 4) {
                    fnode.fail("expected (num|bool name (vars) formula)");
                }
                Feature f;
                const std::string& kind = fnode[0].as_atom("num or bool");
                if (kind == "num") {
                    f.kind = FeatureKind::Numerical;
                } else if (kind == "bool") {
                    f.kind = FeatureKind::Boolean;
                } else {
                    fnode[0].fail("expected num or bool");
                }
                f.name = fnode[1].as_atom("a feature name");
                f.concept_vars = parse_var_list(fnode[2]);
                f.concept_formula = parse_formula(fnode[3], sig);
                try {
                    check_well_formed(f.concept_formula, sig);
                } catch (const InputError& e) {
                    fnode[3].fail(e.what());
                }
                abs.features.push_back(std::move(f));
            }
        } else if (tag == "actions") {
            actions_node = &section;
        } else if (tag == "init") {
            init_node = &section;
        } else if (tag == "goal") {
            goal_node = &section;
        } else {
            section.fail("unknown abstraction section '" + tag + "'");
        }
    }
    if (actions_node) {
        for (std::size_t j = 1; j < actions_node->size(); ++j) {
            const Sexpr& anode = (*actions_node)[j];
            if (anode.is_atom || anode.items.empty()) {
                anode.fail("expected (name :pre (...) :eff (...))");
            }
            AbstractAction action;
            action.name = anode[0].as_atom("an abstract action name");
            std::size_t i = 1;
            while (i < anode.size()) {
                const std::string& key = anode[i].as_atom("a keyword");
                if (i + 1 >= anode.size()) anode[i].fail("missing value after " + key);
                const Sexpr& val = anode[i + 1];
                if (key == ":pre") {
                    action.pre = parse_literal_list(val, abs);
                } else if (key == ":eff") {
                    if (val.is_atom) val.fail("expected an effect list");
                    for (const auto& e : val.items) {
                        action.eff.push_back(parse_effect(e, abs));
                    }
                } else {
                    anode[i].fail("unknown keyword '" + key + "'");
                }
                i += 2;
            }
            abs.actions.push_back(std::move(action));
        }
    }
    if (init_node) {
        abs.init_lits = parse_literal_list(init_node->nth(1, "an init literal list"),
                                           abs);
    }
    if (goal_node) {
        abs.goal_lits = parse_literal_list(goal_node->nth(1, "a goal literal list"),
                                           abs);
    }
    try {
        abs.validate();
    } catch (const InputError& e) {
        node.fail(e.what());
    }
    return abs;
}

Abstraction parse_abstraction_file(const std::string& path, const Signature& sig) {
    return parse_abstraction(parse_sexpr(read_file(path), path), sig);
}

Policy parse_policy(const Sexpr& node, const Abstraction& abs) {
    if (node.is_atom || node.items.empty() || node[0].atom != "policy") {
        node.fail("expected (policy ...)");
    }
    Policy policy;
    for (std::size_t i = 1; i < node.size(); ++i) {
        const Sexpr& rnode = node[i];
        if (rnode.is_atom || rnode.size() != 3 || rnode[0].atom != "rule") {
            rnode.fail("expected (rule (literals) action)");
        }
        Policy::Rule rule;
        rule.condition = parse_literal_list(rnode[1], abs);
        rule.action = rnode[2].as_atom("an abstract action name");
        if (!abs.action(rule.action)) {
            rnode[2].fail("unknown abstract action '" + rule.action + "'");
        }
        policy.rules.push_back(std::move(rule));
    }
    return policy;
}

Policy parse_policy_file(const std::string& path, const Abstraction& abs) {
    return parse_policy(parse_sexpr(read_file(path), path), abs);
}

} // namespace warrant
