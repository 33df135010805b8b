#pragma once

#include "analysis.hpp"

namespace natrob::transform::detail {

using FindFn = std::vector<Candidate> (*)(const Analysis&, const Context&);
using ApplyFn = Outcome (*)(const Analysis&, const Candidate&, const Context&);

struct OperatorImpl {
    FindFn find;
    ApplyFn apply;
};

// operators_naming.cpp
std::vector<Candidate> find_rename1(const Analysis&, const Context&);
std::vector<Candidate> find_rename2(const Analysis&, const Context&);
Outcome apply_rename(const Analysis&, const Candidate&, const Context&);

// operators_expression.cpp
std::vector<Candidate> find_switch_relation(const Analysis&, const Context&);
Outcome apply_switch_relation(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_switch_equal(const Analysis&, const Context&);
Outcome apply_switch_equal(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_switch_string_equal(const Analysis&, const Context&);
Outcome apply_switch_string_equal(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_unary2add(const Analysis&, const Context&);
Outcome apply_unary2add(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_add2equal(const Analysis&, const Context&);
Outcome apply_add2equal(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_merge_var_decl(const Analysis&, const Context&);
Outcome apply_merge_var_decl(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_infix_dividing(const Analysis&, const Context&);
Outcome apply_infix_dividing(const Analysis&, const Candidate&, const Context&);

// operators_statement.cpp
std::vector<Candidate> find_for2while(const Analysis&, const Context&);
Outcome apply_for2while(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_while2for(const Analysis&, const Context&);
Outcome apply_while2for(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_elseif2if(const Analysis&, const Context&);
Outcome apply_elseif2if(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_switch2if(const Analysis&, const Context&);
Outcome apply_switch2if(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_swap_statement(const Analysis&, const Context&);
Outcome apply_swap_statement(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_reverse_if(const Analysis&, const Context&);
Outcome apply_reverse_if(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_if2condexp(const Analysis&, const Context&);
Outcome apply_if2condexp(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_condexp2if(const Analysis&, const Context&);
Outcome apply_condexp2if(const Analysis&, const Candidate&, const Context&);
std::vector<Candidate> find_dividing_composed_if(const Analysis&, const Context&);
Outcome apply_dividing_composed_if(const Analysis&, const Candidate&, const Context&);

/// Pre-order list of nodes of `kinds` under the method body whose span
/// intersects the buggy region.
std::vector<const Node*> nodes_in_region(const Analysis& a, std::initializer_list<NodeKind> kinds);

/// Replaces one node's span and renders the method.
std::string replace_and_render(const SourceMethod& m, std::size_t first, std::size_t last, std::string text);

}  // namespace natrob::transform::detail
