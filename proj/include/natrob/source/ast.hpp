#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace natrob::source {

enum class NodeKind {
    None,  // placeholder for an absent optional child

    // declarations
    Method,        // [ReturnType|None, ParamList, Body|None]; op = name, anchor = name token
    ParamList,     // [Parameter...]
    Parameter,     // [TypeRef|None]; op = name, anchor = name token, aux = extra dims
    TypeRef,       // op = normalized type text
    ClassBody,     // [member...]
    ClassDecl,     // [ClassBody]; op = name
    FieldDecl,     // [TypeRef, Declarator...]
    Initializer,   // [Block]

    // statements
    Block,         // [stmt...]
    LocalVarDecl,  // [TypeRef, Declarator...]; op = modifiers
    Declarator,    // [init]|[]; op = name, anchor = name token, aux = extra dims
    ExprStmt,      // [expr]
    If,            // [cond, then, else|None]
    For,           // [ForInit, cond|None, ForUpdate, body]
    ForInit,       // [LocalVarDecl] | [expr...]
    ForUpdate,     // [expr...]
    ForEach,       // [Parameter, iterable, body]
    While,         // [cond, body]
    Do,            // [body, cond]
    Switch,        // [selector, SwitchGroup...]; aux = 1 for arrow form
    SwitchGroup,   // [CaseLabels, stmt...]
    CaseLabels,    // [label expr...]; aux = 1 if the group includes `default`
    Return,        // [expr]|[]
    Break,         // op = label
    Continue,      // op = label
    Throw,         // [expr]
    Try,           // [Resources|None, Block, Catch..., Finally block|None]
    Resources,     // [LocalVarDecl|expr...]
    Catch,         // [Parameter, Block]
    Synchronized,  // [expr, Block]
    Labeled,       // [stmt]; op = label
    Empty,
    Assert,        // [cond, message|None]
    Yield,         // [expr]
    LocalClass,    // [ClassDecl]

    // expressions
    Name,          // op = identifier, anchor = token
    Literal,       // op = literal text
    FieldAccess,   // [target]; op = field name, anchor = name token
    MethodCall,    // [target|None, Arguments]; op = method name, anchor = name token
    Arguments,     // [expr...]
    ArrayAccess,   // [array, index]
    New,           // [TypeRef, Arguments, ClassBody|None]
    NewArray,      // [TypeRef, dim expr..., ArrayInit|None]
    ArrayInit,     // [expr...]
    Paren,         // [expr]
    This,
    Super,
    ClassLit,      // [TypeRef]
    Cast,          // [TypeRef, expr]
    Unary,         // [expr]; op = prefix operator
    Postfix,       // [expr]; op = postfix operator
    Binary,        // [lhs, rhs]; op = operator
    InstanceOf,    // [expr, TypeRef]
    Conditional,   // [cond, then, else]
    Assign,        // [lhs, rhs]; op = assignment operator
    Lambda,        // [ParamList, body]
    MethodRef,     // [target]; op = member name
    SwitchExpr,    // same layout as Switch
};

std::string_view to_string(NodeKind kind);

/// Syntax tree node. `first` and `last` are inclusive indices into the owning
/// method's token vector and always name code (non-comment) tokens.
struct Node {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    NodeKind kind = NodeKind::None;
    std::size_t first = npos;
    std::size_t last = npos;
    std::string op;
    std::size_t anchor = npos;
    int aux = 0;
    std::vector<Node> children;

    bool present() const { return kind != NodeKind::None; }
    const Node& child(std::size_t i) const { return children.at(i); }
};

bool is_statement(NodeKind kind);
bool is_expression(NodeKind kind);

/// Pre-order traversal. Returning false from the visitor skips the subtree.
void walk(const Node& root, const std::function<bool(const Node&)>& visit);

}  // namespace natrob::source
