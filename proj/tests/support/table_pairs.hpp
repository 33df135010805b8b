#pragma once

// Original/transformed pairs for every operator, completed into compilable
// Java methods. The buggy line is the one holding the edited code.

#include "natrob/transform/engine.hpp"

#include <string>
#include <vector>

namespace natrob::testing {

struct TablePair {
    transform::OperatorId op;
    std::string original;
    std::string expected;
    int buggy_line;
    transform::Unary2AddStyle style = transform::Unary2AddStyle::Expanded;
};

inline std::vector<TablePair> table_pairs() {
    using transform::OperatorId;
    return {
        {OperatorId::RenameVariable1,
         "void f() {\n    int data;\n    data = 1;\n}\n",
         "void f() {\n    int d;\n    d = 1;\n}\n", 3},
        {OperatorId::RenameVariable2,
         "void f() {\n    int[] list;\n    list = new int[] {1, 2};\n}\n",
         "void f() {\n    int[] arr;\n    arr = new int[] {1, 2};\n}\n", 3},
        {OperatorId::SwitchRelation,
         "boolean f(int a, int b) {\n    return a < b;\n}\n",
         "boolean f(int a, int b) {\n    return b > a;\n}\n", 2},
        {OperatorId::Unary2Add,
         "void f(int i) {\n    i++;\n}\n",
         "void f(int i) {\n    i = i + 1;\n}\n", 2},
        {OperatorId::Unary2Add,
         "void f(int i) {\n    i++;\n}\n",
         "void f(int i) {\n    i += 1;\n}\n", 2, transform::Unary2AddStyle::Compound},
        {OperatorId::Add2Equal,
         "void f(int a) {\n    a += 9;\n}\n",
         "void f(int a) {\n    a = a + 9;\n}\n", 2},
        {OperatorId::Add2Equal,
         "void f(int b) {\n    b -= 10;\n}\n",
         "void f(int b) {\n    b = b - 10;\n}\n", 2},
        {OperatorId::MergeVarDecl,
         "void f() {\n    int a;\n    int b;\n}\n",
         "void f() {\n    int a, b;\n}\n", 2},
        {OperatorId::InfixDividing,
         "void f(int x, int a, int b, int c) {\n    x = a + b * c;\n}\n",
         "void f(int x, int a, int b, int c) {\n    int temp = b * c;\n    x = a + temp;\n}\n", 2},
        {OperatorId::SwitchEqualExp,
         "boolean f(int a, int b) {\n    return a == b;\n}\n",
         "boolean f(int a, int b) {\n    return b == a;\n}\n", 2},
        {OperatorId::SwitchStringEqual,
         "boolean f(String a, String b) {\n    return a.equals(b);\n}\n",
         "boolean f(String a, String b) {\n    return b.equals(a);\n}\n", 2},
        {OperatorId::For2While,
         "void f(int i) {\n    for (i = 0; i < 10; i++) {\n        //Body\n    }\n}\n",
         "void f(int i) {\n    i = 0;\n    while (i < 10) {\n        //Body\n        i++;\n    }\n}\n", 2},
        {OperatorId::While2For,
         "void f(int i) {\n    i = 0;\n    while (i < 10) {\n        //Body\n        i++;\n    }\n}\n",
         "void f(int i) {\n    for (i = 0; i < 10; i++) {\n        //Body\n    }\n}\n", 3},
        {OperatorId::ElseIf2If,
         "void f(int a) {\n    if (a < 80) {\n        //BodyA\n    } else if (a < 100) {\n        //BodyB\n"
         "    } else {\n        //BodyC\n    }\n}\n",
         "void f(int a) {\n    if (a < 80) {\n        //BodyA\n    } else {\n        if (a < 100) {\n"
         "            //BodyB\n        } else {\n            //BodyC\n        }\n    }\n}\n", 4},
        {OperatorId::Switch2If,
         "void f(int a) {\n    switch (a) {\n        case 60:\n            bodyA();\n            break;\n"
         "        default:\n            bodyB();\n    }\n}\n",
         "void f(int a) {\n    if (a == 60) {\n        bodyA();\n    } else {\n        bodyB();\n    }\n}\n", 2},
        {OperatorId::SwapStatement,
         "void f(int a, int b, int c, int d) {\n    a = b + 10;\n    c = d + 1;\n}\n",
         "void f(int a, int b, int c, int d) {\n    c = d + 1;\n    a = b + 10;\n}\n", 2},
        {OperatorId::ReverseIf,
         "void f(boolean condition) {\n    if (condition) {\n        //BodyA\n    } else {\n        //BodyB\n    }\n}\n",
         "void f(boolean condition) {\n    if (!condition) {\n        //BodyB\n    } else {\n        //BodyA\n    }\n}\n", 2},
        {OperatorId::If2CondExp,
         "int f(boolean condition, int a, int b) {\n    if (condition) {\n        return a;\n    } else {\n"
         "        return b;\n    }\n}\n",
         "int f(boolean condition, int a, int b) {\n    return condition ? a : b;\n}\n", 2},
        {OperatorId::CondExp2If,
         "int f(boolean condition, int a, int b) {\n    return condition ? a : b;\n}\n",
         "int f(boolean condition, int a, int b) {\n    if (condition) {\n        return a;\n    } else {\n"
         "        return b;\n    }\n}\n", 2},
        {OperatorId::DividingComposedIf,
         "void f(boolean condition1, boolean condition2) {\n    if (condition1 && condition2) {\n        //Body\n"
         "    }\n}\n",
         "void f(boolean condition1, boolean condition2) {\n    if (condition1) {\n        if (condition2) {\n"
         "            //Body\n        }\n    }\n}\n", 2},
    };
}

}  // namespace natrob::testing
