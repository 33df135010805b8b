#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace natrob::transform {

/// The semantic-preserving operators, in canonical (output) order.
enum class OperatorId {
    RenameVariable1,
    RenameVariable2,
    SwitchRelation,
    Unary2Add,
    Add2Equal,
    MergeVarDecl,
    InfixDividing,
    SwitchEqualExp,
    SwitchStringEqual,
    For2While,
    While2For,
    ElseIf2If,
    Switch2If,
    SwapStatement,
    ReverseIf,
    If2CondExp,
    CondExp2If,
    DividingComposedIf,
};

enum class Level { Naming, Expression, Statement };

inline constexpr std::size_t kOperatorCount = 18;

const std::array<OperatorId, kOperatorCount>& all_operators();
Level level_of(OperatorId op);
std::string_view to_string(OperatorId op);
std::string_view to_string(Level level);
std::optional<OperatorId> operator_from_string(std::string_view name);

enum class Status { Valid, DiscardedConflict, DiscardedInapplicable, DiscardedUnparseable };

std::string_view to_string(Status status);
std::optional<Status> status_from_string(std::string_view name);

}  // namespace natrob::transform
