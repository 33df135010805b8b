#include "doctest.h"

#include "natrob/source/source_method.hpp"

#include <algorithm>

using namespace natrob::source;

TEST_CASE("lexer kinds and positions") {
    const auto toks = lex("int x = 0x1F + 'a'; // done\nString s = \"a\\\"b\";");
    REQUIRE(toks.size() == 13);
    CHECK(toks[0].kind == TokenKind::Keyword);
    CHECK(toks[1].kind == TokenKind::Identifier);
    CHECK(toks[3].text == "0x1F");
    CHECK(toks[3].kind == TokenKind::Literal);
    CHECK(toks[5].text == "'a'");
    CHECK(toks[7].kind == TokenKind::Comment);
    CHECK(toks[8].line == 2);
    CHECK(toks[8].column == 1);
    CHECK(toks[11].text == "\"a\\\"b\"");
    for (std::size_t i = 1; i < toks.size(); ++i)
        CHECK(std::pair(toks[i - 1].line, toks[i - 1].column) < std::pair(toks[i].line, toks[i].column));
}

TEST_CASE("lexer handles numbers, text blocks and longest-match operators") {
    const auto texts = code_token_texts("a >>>= 1_000L; b = 1.5e-3f + .5 + 0b101; c = \"\"\"\n  hi\n  \"\"\"; d -> d::m");
    const std::vector<std::string> expected = {"a", ">>>=", "1_000L", ";", "b", "=", "1.5e-3f", "+", ".5", "+",
                                               "0b101", ";", "c", "=", "\"\"\"\n  hi\n  \"\"\"", ";", "d", "->",
                                               "d", "::", "m"};
    CHECK(texts == expected);
}

TEST_CASE("lexer errors") {
    CHECK_THROWS_AS(lex("\"open"), ParseError);
    CHECK_THROWS_AS(lex("/* never closed"), ParseError);
    CHECK_THROWS_AS(lex("a # b"), ParseError);
}

TEST_CASE("token count of a one-line method") {
    const auto m = parse_method("public int f(){return 1;}", {1, 1});
    // public int f ( ) { return 1 ; }
    CHECK(m.code_tokens().size() == 10);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_method("", {1, 1}), ParseError);
    CHECK_THROWS_AS(parse_method("void f() { int x = ; }", {1, 1}), ParseError);
    CHECK_THROWS_AS(parse_method("void f() { return 1 }", {1, 1}), ParseError);
    try {
        parse_method("void f() {\n  int x = 1;\n  x = = 2;\n}", {1, 1});
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("region must lie inside the method") {
    const std::string text = "void f() {\n    g();\n}\n";
    CHECK_THROWS_AS(parse_method(text, {0, 1}), RegionError);
    CHECK_THROWS_AS(parse_method(text, {2, 4}), RegionError);
    CHECK_THROWS_AS(parse_method(text, {3, 2}), RegionError);
    CHECK_NOTHROW(parse_method(text, {2, 2}));
}

TEST_CASE("first_line offsets line numbers") {
    const auto m = parse_method("void f() {\n    g();\n}\n", {11, 11}, {"x", 10});
    CHECK(m.first_line() == 10);
    CHECK(m.last_line() == 12);
    CHECK(m.tokens()[5].line == 11);
}

TEST_CASE("safeMultiply keeps its buggy identifier in the region") {
    const std::string text =
        "public static long safeMultiply(long val1, int val2) {\n"
        "    long total = val1 * val2;\n"
        "    return total;\n"
        "}\n";
    const auto m = parse_method(text, {2, 2}, {"Time-14"});
    CHECK(m.id() == "Time-14");
    const auto& toks = m.tokens();
    CHECK(std::any_of(toks.begin(), toks.end(), [&](const Token& t) {
        return t.text == "val1" && m.buggy_region().contains(t.line);
    }));
}

TEST_CASE("round trip over varied syntax") {
    const std::vector<std::string> methods = {
        "public <T extends Comparable<? super T>> List<List<T>> f(Map<String, List<T>> m, T... xs) throws IOException {\n"
        "    List<List<T>> out = new ArrayList<>();\n"
        "    for (Map.Entry<String, List<T>> e : m.entrySet()) { out.add(e.getValue()); }\n"
        "    return out;\n"
        "}",
        "int g(int[] a) {\n"
        "    int s = 0, t[] = {1, 2};\n"
        "    outer:\n"
        "    for (int i = 0, j = a.length - 1; i < j; i++, j--) {\n"
        "        if (a[i] > a[j] >> 1) continue outer; else if (a[i] == 0) break;\n"
        "        s += (int) a[i] * -a[j] + (a[i] > 0 ? 1 : 2);\n"
        "    }\n"
        "    do { s--; } while (s > 100);\n"
        "    switch (s) { case 1: case 2: s = 3; break; default: s = 4; }\n"
        "    int k = switch (s) { case 3 -> 1; default -> { yield 2; } };\n"
        "    return s + k;\n"
        "}",
        "void h(final Object o) throws Exception {\n"
        "    Runnable r = () -> System.out.println(o);\n"
        "    java.util.function.Function<Integer, Integer> f = x -> x + 1;\n"
        "    try (java.io.InputStream in = open(); Reader rd = reader()) { r.run(); }\n"
        "    catch (IOException | RuntimeException e) { throw e; } finally { close(); }\n"
        "    synchronized (this) { assert o != null : \"null\"; }\n"
        "    Object a = new Object() { @Override public String toString() { return \"x\"; } };\n"
        "    int[][] grid = new int[3][];\n"
        "    Class<?> c = String[].class;\n"
        "    Supplier<List<String>> s = ArrayList::new;\n"
        "    if (o instanceof String str && !str.isEmpty()) { label: { break label; } }\n"
        "    class Local { int v; }\n"
        "}",
        "Foo(int x) {\n    this(x, 0);\n}",
    };
    for (const auto& text : methods) {
        CAPTURE(text);
        const auto m = parse_method(text, {2, 2});
        CHECK(token_equal(render(m), text));
        CHECK(render(m) == text);
    }
}

TEST_CASE("rewriter edits spans and keeps comments") {
    const auto m = parse_method("int f(int a) {\n    // keep me\n    return a + 1; /* and me */\n}\n", {3, 3});
    const auto& ret = m.tree().child(2).child(0);
    REQUIRE(ret.kind == NodeKind::Return);
    Rewriter rw(m);
    rw.replace(ret.child(0), "a * 2");
    const std::string out = rw.render();
    CHECK(out == "int f(int a) {\n    // keep me\n    return a * 2; /* and me */\n}\n");
    Rewriter bad(m);
    bad.replace(ret, "return 0;");
    CHECK_THROWS_AS(bad.replace(ret.child(0), "x"), std::logic_error);
}

TEST_CASE("token_equal") {
    CHECK(token_equal("a<b", "a < b"));
    CHECK_FALSE(token_equal("a<b", "b>a"));
    CHECK_FALSE(token_equal("a < b", "b > a"));
    CHECK(token_equal("a /* x */ + b", "a+b"));
}

TEST_CASE("extract_methods finds methods in nested types") {
    const std::string file =
        "package p;\n"
        "public class A {\n"
        "    private int n;\n"
        "    public A(int n) { this.n = n; }\n"
        "    int get() {\n"
        "        return n;\n"
        "    }\n"
        "    static class B {\n"
        "        void run() { }\n"
        "    }\n"
        "    interface C { void call(); default int d() { return 1; } }\n"
        "}\n";
    const auto ms = extract_methods(file);
    std::vector<std::string> names;
    for (const auto& m : ms)
        names.push_back(m.name);
    CHECK(names == std::vector<std::string>{"A", "get", "run", "d"});
    REQUIRE(ms.size() == 4);
    CHECK(ms[1].first_line == 5);
    CHECK(ms[1].last_line == 7);
    const auto m = parse_method(ms[1].text, {6, 6}, {"get", ms[1].first_line});
    CHECK(m.first_line() == 5);
    CHECK(render(m).find("return n;") != std::string::npos);
}
