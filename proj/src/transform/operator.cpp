#include "natrob/transform/operator.hpp"

namespace natrob::transform {

namespace {

constexpr std::array<OperatorId, kOperatorCount> kAll = {
    OperatorId::RenameVariable1, OperatorId::RenameVariable2,   OperatorId::SwitchRelation,
    OperatorId::Unary2Add,       OperatorId::Add2Equal,         OperatorId::MergeVarDecl,
    OperatorId::InfixDividing,   OperatorId::SwitchEqualExp,    OperatorId::SwitchStringEqual,
    OperatorId::For2While,       OperatorId::While2For,         OperatorId::ElseIf2If,
    OperatorId::Switch2If,       OperatorId::SwapStatement,     OperatorId::ReverseIf,
    OperatorId::If2CondExp,      OperatorId::CondExp2If,        OperatorId::DividingComposedIf,
};

}  // namespace

const std::array<OperatorId, kOperatorCount>& all_operators() { return kAll; }

Level level_of(OperatorId op) {
    switch (op) {
    case OperatorId::RenameVariable1:
    case OperatorId::RenameVariable2:
        return Level::Naming;
    case OperatorId::SwitchRelation:
    case OperatorId::Unary2Add:
    case OperatorId::Add2Equal:
    case OperatorId::MergeVarDecl:
    case OperatorId::InfixDividing:
    case OperatorId::SwitchEqualExp:
    case OperatorId::SwitchStringEqual:
        return Level::Expression;
    default:
        return Level::Statement;
    }
}

std::string_view to_string(OperatorId op) {
    switch (op) {
    case OperatorId::RenameVariable1: return "RenameVariable1";
    case OperatorId::RenameVariable2: return "RenameVariable2";
    case OperatorId::SwitchRelation: return "SwitchRelation";
    case OperatorId::Unary2Add: return "Unary2Add";
    case OperatorId::Add2Equal: return "Add2Equal";
    case OperatorId::MergeVarDecl: return "MergeVarDecl";
    case OperatorId::InfixDividing: return "InfixDividing";
    case OperatorId::SwitchEqualExp: return "SwitchEqualExp";
    case OperatorId::SwitchStringEqual: return "SwitchStringEqual";
    case OperatorId::For2While: return "For2While";
    case OperatorId::While2For: return "While2For";
    case OperatorId::ElseIf2If: return "ElseIf2If";
    case OperatorId::Switch2If: return "Switch2If";
    case OperatorId::SwapStatement: return "SwapStatement";
    case OperatorId::ReverseIf: return "ReverseIf";
    case OperatorId::If2CondExp: return "If2CondExp";
    case OperatorId::CondExp2If: return "CondExp2If";
    case OperatorId::DividingComposedIf: return "DividingComposedIf";
    }
    return "?";
}

std::string_view to_string(Level level) {
    switch (level) {
    case Level::Naming: return "Naming";
    case Level::Expression: return "Expression";
    case Level::Statement: return "Statement";
    }
    return "?";
}

std::optional<OperatorId> operator_from_string(std::string_view name) {
    for (auto op : kAll)
        if (to_string(op) == name)
            return op;
    return std::nullopt;
}

std::string_view to_string(Status status) {
    switch (status) {
    case Status::Valid: return "Valid";
    case Status::DiscardedConflict: return "DiscardedConflict";
    case Status::DiscardedInapplicable: return "DiscardedInapplicable";
    case Status::DiscardedUnparseable: return "DiscardedUnparseable";
    }
    return "?";
}

std::optional<Status> status_from_string(std::string_view name) {
    for (auto s : {Status::Valid, Status::DiscardedConflict, Status::DiscardedInapplicable,
                   Status::DiscardedUnparseable})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

}  // namespace natrob::transform
