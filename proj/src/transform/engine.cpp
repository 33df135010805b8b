#include "natrob/transform/engine.hpp"

#include "operators.hpp"

#include <stdexcept>

namespace natrob::transform {

namespace detail {

std::vector<const Node*> nodes_in_region(const Analysis& a, std::initializer_list<NodeKind> kinds) {
    std::vector<const Node*> out;
    const SourceMethod& m = a.method();
    const Node& body = m.tree().child(2);
    if (!body.present())
        return out;
    source::walk(body, [&](const Node& n) {
        if (std::find(kinds.begin(), kinds.end(), n.kind) != kinds.end() && m.in_region(n))
            out.push_back(&n);
        return true;
    });
    return out;
}

std::string replace_and_render(const SourceMethod& m, std::size_t first, std::size_t last, std::string text) {
    source::Rewriter rw(m);
    rw.replace(first, last, std::move(text));
    return rw.render();
}

}  // namespace detail

namespace {

using namespace detail;

OperatorImpl impl_of(OperatorId op) {
    switch (op) {
    case OperatorId::RenameVariable1: return {find_rename1, apply_rename};
    case OperatorId::RenameVariable2: return {find_rename2, apply_rename};
    case OperatorId::SwitchRelation: return {find_switch_relation, apply_switch_relation};
    case OperatorId::Unary2Add: return {find_unary2add, apply_unary2add};
    case OperatorId::Add2Equal: return {find_add2equal, apply_add2equal};
    case OperatorId::MergeVarDecl: return {find_merge_var_decl, apply_merge_var_decl};
    case OperatorId::InfixDividing: return {find_infix_dividing, apply_infix_dividing};
    case OperatorId::SwitchEqualExp: return {find_switch_equal, apply_switch_equal};
    case OperatorId::SwitchStringEqual: return {find_switch_string_equal, apply_switch_string_equal};
    case OperatorId::For2While: return {find_for2while, apply_for2while};
    case OperatorId::While2For: return {find_while2for, apply_while2for};
    case OperatorId::ElseIf2If: return {find_elseif2if, apply_elseif2if};
    case OperatorId::Switch2If: return {find_switch2if, apply_switch2if};
    case OperatorId::SwapStatement: return {find_swap_statement, apply_swap_statement};
    case OperatorId::ReverseIf: return {find_reverse_if, apply_reverse_if};
    case OperatorId::If2CondExp: return {find_if2condexp, apply_if2condexp};
    case OperatorId::CondExp2If: return {find_condexp2if, apply_condexp2if};
    case OperatorId::DividingComposedIf: return {find_dividing_composed_if, apply_dividing_composed_if};
    }
    throw std::logic_error("unknown operator");
}

TransformationRecord finish(OperatorId op, const SourceMethod& m, const Candidate& c, Outcome outcome) {
    TransformationRecord r;
    r.bug_id = m.id();
    r.op = op;
    r.site = c.site;
    r.id = m.id() + ":" + std::string(to_string(op)) + ":" + std::to_string(c.site.first_token);
    if (!c.site.candidate.empty() && op == OperatorId::RenameVariable2)
        r.id += ":" + c.site.candidate;
    r.original_source = m.source();
    r.status = outcome.status;
    r.note = std::move(outcome.note);
    if (r.status != Status::Valid)
        return r;
    r.transformed_source = std::move(outcome.text);
    try {
        const auto tokens = source::lex(r.transformed_source);
        source::parse_method_tree(tokens);
    } catch (const source::ParseError& e) {
        r.status = Status::DiscardedUnparseable;
        r.note = e.what();
        return r;
    }
    if (source::token_equal(r.original_source, r.transformed_source)) {
        r.status = Status::DiscardedInapplicable;
        r.note = "no token changed";
    }
    return r;
}

}  // namespace

std::vector<Site> applicable_sites(OperatorId op, const source::SourceMethod& method,
                                   const SubstitutionProvider* provider, const EngineOptions& options) {
    const Analysis analysis(method);
    const Context ctx{provider, &options};
    std::vector<Site> out;
    for (const auto& c : impl_of(op).find(analysis, ctx))
        out.push_back(c.site);
    return out;
}

TransformationRecord apply(OperatorId op, const source::SourceMethod& method, const Site& site,
                           const SubstitutionProvider* provider, const EngineOptions& options) {
    const Analysis analysis(method);
    const Context ctx{provider, &options};
    const OperatorImpl impl = impl_of(op);
    for (const auto& c : impl.find(analysis, ctx))
        if (c.site == site)
            return finish(op, method, c, impl.apply(analysis, c, ctx));
    throw std::invalid_argument(std::string(to_string(op)) + ": site is not applicable");
}

std::vector<TransformationRecord> apply_all(const source::SourceMethod& method, const SubstitutionProvider* provider,
                                            const EngineOptions& options) {
    const Analysis analysis(method);
    const Context ctx{provider, &options};
    std::vector<TransformationRecord> out;
    for (OperatorId op : all_operators()) {
        if (!options.enabled.count(op))
            continue;
        const OperatorImpl impl = impl_of(op);
        for (const auto& c : impl.find(analysis, ctx))
            out.push_back(finish(op, method, c, impl.apply(analysis, c, ctx)));
    }
    return out;
}

}  // namespace natrob::transform
