#pragma once

// Shallow identifier extraction from C, C++ and Java sources. This is a
// token-level heuristic, not a parser: it recognises the common shapes of
// function definitions, class/struct/interface names, parameter lists,
// member attributes and local or global declarations.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "idpos/error.hpp"
#include "idpos/record.hpp"
#include "idpos/splitter.hpp"

namespace idpos {

/// A named site found in one source file, before ids are assigned.
struct ExtractedIdentifier {
    std::string name;
    IdentifierContext context = IdentifierContext::DECLARATION;
    std::string type_hint;
};

namespace detail::extract {

enum class TokKind { Word, Number, Punct };

struct Token {
    TokKind kind;
    std::string text;

    bool is(std::string_view s) const { return text == s; }
    bool word() const { return kind == TokKind::Word; }
};

inline bool contains_test(std::string_view s) {
    std::string lower(s);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return lower.find("test") != std::string::npos;
}

/// Blanks out comments, string and character literals and preprocessor
/// lines, keeping newlines.
inline std::string strip_source(std::string_view src) {
    std::string out;
    out.reserve(src.size());
    enum class S { Code, Line, Block, Str, Chr, Pre } s = S::Code;
    bool line_start = true;
    for (std::size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        char next = i + 1 < src.size() ? src[i + 1] : '\0';
        switch (s) {
        case S::Code:
            if (c == '/' && next == '/') { s = S::Line; ++i; out += "  "; continue; }
            if (c == '/' && next == '*') { s = S::Block; ++i; out += "  "; continue; }
            if (c == '"') { s = S::Str; out.push_back(' '); line_start = false; continue; }
            if (c == '\'') { s = S::Chr; out.push_back(' '); line_start = false; continue; }
            if (c == '#' && line_start) { s = S::Pre; out.push_back(' '); continue; }
            out.push_back(c);
            if (c == '\n') line_start = true;
            else if (!std::isspace(static_cast<unsigned char>(c))) line_start = false;
            continue;
        case S::Line:
            if (c == '\n') { s = S::Code; line_start = true; out.push_back('\n'); }
            else out.push_back(' ');
            continue;
        case S::Block:
            if (c == '*' && next == '/') { s = S::Code; ++i; out += "  "; continue; }
            out.push_back(c == '\n' ? '\n' : ' ');
            continue;
        case S::Str:
        case S::Chr:
            if (c == '\\') { out.push_back(' '); if (next != '\n') { out.push_back(' '); ++i; } continue; }
            if ((s == S::Str && c == '"') || (s == S::Chr && c == '\'')) { s = S::Code; out.push_back(' '); continue; }
            if (c == '\n') { s = S::Code; line_start = true; out.push_back('\n'); continue; }  // unterminated
            out.push_back(' ');
            continue;
        case S::Pre:
            if (c == '\\' && next == '\n') { out += " \n"; ++i; continue; }
            if (c == '/' && next == '*') { s = S::Block; ++i; out += "  "; continue; }
            if (c == '\n') { s = S::Code; line_start = true; out.push_back('\n'); }
            else out.push_back(' ');
            continue;
        }
    }
    return out;
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

/// Tokenizes stripped source. Java annotations are dropped with their
/// arguments.
inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && is_ident_char(s[j])) ++j;
            out.push_back({TokKind::Word, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && (is_ident_char(s[j]) || s[j] == '.')) ++j;
            out.push_back({TokKind::Number, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (c == '@' && i + 1 < s.size() && is_ident_start(s[i + 1])) {
            std::size_t j = i + 1;
            while (j < s.size() && (is_ident_char(s[j]) || s[j] == '.')) ++j;
            std::size_t k = j;
            while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
            if (s.substr(i + 1, j - i - 1) != "interface" && k < s.size() && s[k] == '(') {
                int depth = 0;
                for (; k < s.size(); ++k) {
                    if (s[k] == '(') ++depth;
                    else if (s[k] == ')' && --depth == 0) { ++k; break; }
                }
                j = k;
            }
            i = j;
            continue;
        }
        if (c == ':' && i + 1 < s.size() && s[i + 1] == ':') { out.push_back({TokKind::Punct, "::"}); i += 2; continue; }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') { out.push_back({TokKind::Punct, "->"}); i += 2; continue; }
        out.push_back({TokKind::Punct, std::string(1, c)});
        ++i;
    }
    return out;
}

inline bool is_keyword(std::string_view w) {
    static const std::set<std::string_view> kw = {
        "alignas", "alignof", "and", "asm", "auto", "bool", "break", "case", "catch", "char", "class", "const",
        "constexpr", "consteval", "constinit", "const_cast", "continue", "co_await", "co_return", "co_yield",
        "decltype", "default", "delete", "do", "double", "dynamic_cast", "else", "enum", "explicit", "export",
        "extern", "false", "float", "for", "friend", "goto", "if", "inline", "int", "long", "mutable", "namespace",
        "new", "noexcept", "not", "nullptr", "operator", "or", "private", "protected", "public", "register",
        "reinterpret_cast", "return", "short", "signed", "sizeof", "static", "static_assert", "static_cast",
        "struct", "switch", "template", "this", "thread_local", "throw", "true", "try", "typedef", "typeid",
        "typename", "union", "unsigned", "using", "virtual", "void", "volatile", "while", "abstract", "boolean",
        "byte", "extends", "final", "finally", "implements", "import", "instanceof", "interface", "native",
        "package", "strictfp", "super", "synchronized", "throws", "transient", "var", "null", "override",
        "NULL", "restrict", "__attribute__", "__declspec", "size_t", "uint8_t", "uint16_t", "uint32_t",
        "uint64_t", "int8_t", "int16_t", "int32_t", "int64_t", "permits"};
    return kw.contains(w);
}

/// Words that never form part of a recorded type.
inline bool is_modifier(std::string_view w) {
    static const std::set<std::string_view> mods = {
        "static", "extern", "inline", "virtual", "explicit", "mutable", "register", "public", "private",
        "protected", "final", "abstract", "transient", "synchronized", "native", "strictfp", "constexpr",
        "consteval", "constinit", "thread_local", "default", "friend", "override", "sealed", "volatile"};
    return mods.contains(w);
}

inline bool is_control(std::string_view w) {
    static const std::set<std::string_view> ctl = {"if",    "else",   "for",   "while",  "do",    "switch",
                                                    "try",   "catch",  "finally", "case", "default", "goto",
                                                    "break", "continue", "synchronized"};
    return ctl.contains(w);
}

inline bool rejects_declaration(std::string_view w) {
    static const std::set<std::string_view> bad = {
        "return",   "using",     "typedef",   "package",  "import",  "goto",   "break", "continue",
        "throw",    "delete",    "friend",    "case",     "default", "static_assert", "namespace",
        "operator", "new",       "sizeof",    "assert",   "else",    "if",     "for",   "while",
        "do",       "switch",    "yield",     "co_return", "co_yield", "this"};
    return bad.contains(w);
}

/// Type tokens rendered compactly: a space only between adjacent words.
inline std::string render_type(std::span<const Token> toks) {
    std::string out;
    const Token* prev = nullptr;
    for (const auto& t : toks) {
        if (t.word() && is_modifier(t.text)) continue;
        if (prev && prev->kind != TokKind::Punct && t.kind != TokKind::Punct) out.push_back(' ');
        out += t.text;
        prev = &t;
    }
    return out;
}

/// Index of the token closing the bracket opened at `open`, or npos.
inline std::size_t match_close(std::span<const Token> t, std::size_t open) {
    const std::string& o = t[open].text;
    const std::string_view c = o == "(" ? ")" : o == "[" ? "]" : o == "{" ? "}" : ">";
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (t[i].text == o) ++depth;
        else if (t[i].text == c && --depth == 0) return i;
    }
    return std::string_view::npos;
}

inline std::vector<Token> drop_template_prefix(std::vector<Token> s) {
    while (!s.empty() && s[0].is("template") && s.size() > 1 && s[1].is("<")) {
        auto close = match_close(s, 1);
        if (close == std::string_view::npos) return {};
        s.erase(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(close) + 1);
    }
    return s;
}

/// Splits at top-level commas, counting (), [], {} and <>.
inline std::vector<std::vector<Token>> split_commas(std::span<const Token> t) {
    std::vector<std::vector<Token>> parts(1);
    int depth = 0;
    for (const auto& tok : t) {
        if (tok.is("(") || tok.is("[") || tok.is("{") || tok.is("<")) ++depth;
        else if (tok.is(")") || tok.is("]") || tok.is("}") || tok.is(">")) --depth;
        if (depth == 0 && tok.is(",")) { parts.emplace_back(); continue; }
        parts.back().push_back(tok);
    }
    return parts;
}

inline bool type_tokens_ok(std::span<const Token> type) {
    bool has_word = false;
    int angle = 0;
    for (const auto& t : type) {
        if (t.word()) {
            if (rejects_declaration(t.text) || t.is("class") || t.is("interface")) return false;
            if (!is_modifier(t.text)) has_word = true;
            continue;
        }
        if (t.kind == TokKind::Number) { if (angle == 0) return false; continue; }
        if (t.is("<")) { ++angle; continue; }
        if (t.is(">")) { if (--angle < 0) return false; continue; }
        if (t.is("::") || t.is("*") || t.is("&") || t.is("[") || t.is("]")) continue;
        if (t.is(",") && angle > 0) continue;
        if (t.is("?") && angle > 0) continue;
        return false;
    }
    return has_word && angle == 0;
}

struct Declarator {
    std::string name;
    std::string type;
};

/// Declarators of `type name [= init], name2 ...`. Empty when the tokens
/// do not look like a declaration. `allow_call_init` accepts `T x(args)`.
inline std::vector<Declarator> parse_declaration(std::span<const Token> s, bool allow_call_init) {
    std::vector<Declarator> out;
    if (s.empty()) return out;
    if (s.size() == 2 && (s[0].is("struct") || s[0].is("union") || s[0].is("enum") || s[0].is("class")))
        return out;

    // The first declarator fixes the type.
    int depth = 0;
    std::size_t stop = s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& t = s[i];
        if (depth == 0 && (t.is("=") || t.is(",") || t.is("(") || t.is(":") || t.is("{") ||
                           (t.is("[") && i > 0 && s[i - 1].word()))) {
            stop = i;
            break;
        }
        if (t.is("<") || t.is("(") || t.is("[")) ++depth;
        else if (t.is(">") || t.is(")") || t.is("]")) --depth;
    }
    if (stop == 0 || !s[stop - 1].word()) return out;
    if (stop < s.size() && s[stop].is("(") && !allow_call_init) return out;
    if (stop < s.size() && s[stop].is(":") && (stop + 1 >= s.size() || s[stop + 1].kind != TokKind::Number))
        return out;
    const auto& name = s[stop - 1].text;
    if (is_keyword(name)) return out;
    auto type = s.subspan(0, stop - 1);
    if (!type_tokens_ok(type)) return out;
    if (!type.empty() && type.back().is("::")) return out;
    if (stop < s.size() && s[stop].is("(")) {
        // `T x(args)` only when the parenthesised part reads as arguments.
        auto close = match_close(s, stop);
        if (close == std::string_view::npos) return out;
        if (close > stop + 1 && s[stop + 1].word() && close > stop + 2 && s[stop + 2].word()) return out;
    }
    std::string base = render_type(type);
    out.push_back({name, base});

    // Remaining declarators: `, *name [= init]`.
    auto parts = split_commas(s.subspan(stop));
    for (std::size_t p = 1; p < parts.size(); ++p) {
        const auto& part = parts[p];
        std::size_t j = 0;
        while (j < part.size() && (part[j].is("*") || part[j].is("&"))) ++j;
        if (j < part.size() && part[j].word() && !is_keyword(part[j].text) &&
            (j + 1 == part.size() || part[j + 1].is("=") || part[j + 1].is("[") || part[j + 1].is("{")))
            out.push_back({part[j].text, base});
    }
    return out;
}

inline std::vector<Declarator> parse_parameters(std::span<const Token> inside) {
    std::vector<Declarator> out;
    for (auto& part : split_commas(inside)) {
        std::vector<Token> p;
        for (auto& t : part) {
            if (t.is("=")) break;
            if (t.word() && (t.is("final") || t.is("register"))) continue;
            p.push_back(t);
        }
        while (!p.empty() && (p.back().is("]") || p.back().is("["))) {
            if (p.back().is("]")) {
                auto it = std::find_if(p.rbegin(), p.rend(), [](const Token& t) { return t.is("["); });
                if (it == p.rend()) break;
                p.erase(std::prev(it.base()), p.end());
            } else {
                p.pop_back();
            }
        }
        if (p.size() < 2) continue;
        if (std::any_of(p.begin(), p.end(), [](const Token& t) { return t.is("(") || t.is("."); })) continue;
        if (!p.back().word() || is_keyword(p.back().text)) continue;
        std::span<const Token> type(p.data(), p.size() - 1);
        if (!type_tokens_ok(type)) continue;
        out.push_back({p.back().text, render_type(type)});
    }
    return out;
}

enum class Scope { Global, Class, Function, Block, Ignored };

class Walker {
public:
    explicit Walker(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    std::vector<ExtractedIdentifier> run() {
        frames_.push_back({Scope::Global, {}, 0});
        for (const auto& t : toks_) step(t);
        return std::move(out_);
    }

private:
    struct Frame {
        Scope scope;
        std::vector<Token> stmt;  // statement being accumulated in this scope
        int parens;
    };

    std::vector<Token> toks_;
    std::vector<Frame> frames_;
    std::vector<ExtractedIdentifier> out_;
    std::size_t ignored_ = 0;  // open frames at or below an ignored one

    Frame& top() { return frames_.back(); }

    bool in_function() const {
        for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
            if (it->scope == Scope::Function) return true;
            if (it->scope == Scope::Class) return false;
        }
        return false;
    }

    void emit(std::string name, IdentifierContext ctx, std::string type) {
        if (ignored_) return;
        out_.push_back({std::move(name), ctx, std::move(type)});
    }

    void push(Scope s) {
        if (s == Scope::Ignored || ignored_) ++ignored_;
        frames_.push_back({s, {}, 0});
    }

    void step(const Token& t) {
        auto& f = top();
        if (t.is("(")) ++f.parens;
        if (t.is(")")) f.parens = std::max(0, f.parens - 1);
        if (t.is("{")) { open_brace(); return; }
        if (t.is("}")) { close_brace(); return; }
        if (t.is(";") && f.parens == 0) { end_statement(); return; }
        if (t.is(":") && f.parens == 0 && is_label(f.stmt)) { f.stmt.clear(); return; }
        f.stmt.push_back(t);
    }

    static bool is_label(const std::vector<Token>& s) {
        if (s.empty()) return false;
        if (s[0].is("case") || s[0].is("default")) return true;
        if (s.size() == 1 && s[0].word()) return true;
        static const std::set<std::string_view> access = {"public", "private", "protected", "signals", "slots",
                                                          "Q_SIGNALS", "Q_SLOTS"};
        return std::all_of(s.begin(), s.end(), [](const Token& t) { return access.contains(t.text); });
    }

    void close_brace() {
        if (frames_.size() == 1) { top().stmt.clear(); return; }  // unbalanced
        Scope s = top().scope;
        frames_.pop_back();
        if (ignored_) --ignored_;
        // An ignored brace group stays part of the enclosing statement.
        if (s != Scope::Ignored) top().stmt.clear();
    }

    void open_brace() {
        auto& f = top();
        auto s = drop_template_prefix(f.stmt);
        if (f.parens > 0) { push(Scope::Ignored); return; }
        if (s.empty()) { f.stmt.clear(); push(Scope::Block); return; }

        if (is_control(s[0].text)) {
            if (s[0].is("for")) for_init(s);
            f.stmt.clear();
            push(Scope::Block);
            return;
        }
        const bool has_assign = std::any_of(s.begin(), s.end(), [](const Token& t) { return t.is("="); });
        if (s[0].is("return") || s[0].is("throw") || has_assign ||
            std::any_of(s.begin(), s.end(), [](const Token& t) { return t.is("new"); })) {
            push(Scope::Ignored);
            return;
        }
        if (s[0].is("extern") || std::any_of(s.begin(), s.end(), [](const Token& t) { return t.is("namespace"); })) {
            f.stmt.clear();
            push(Scope::Global);
            return;
        }
        if (std::any_of(s.begin(), s.end(), [](const Token& t) { return t.is("enum"); })) {
            f.stmt.clear();
            push(Scope::Ignored);
            return;
        }
        if (auto cls = class_name(s)) {
            f.stmt.clear();
            if (cls->empty()) { push(Scope::Class); return; }
            if (contains_test(*cls)) { push(Scope::Ignored); return; }
            emit(*cls, IdentifierContext::CLASS, "");
            push(Scope::Class);
            return;
        }
        auto paren = std::find_if(s.begin(), s.end(), [](const Token& t) { return t.is("("); });
        if (paren != s.end()) {
            f.stmt.clear();
            function_definition(s, static_cast<std::size_t>(paren - s.begin()));
            return;
        }
        if (s.size() >= 2 && s.back().word()) {  // brace initializer: `T x{...}`
            push(Scope::Ignored);
            return;
        }
        f.stmt.clear();
        push(Scope::Block);
    }

    static std::optional<std::string> class_name(const std::vector<Token>& s) {
        std::size_t kw = s.size();
        int angle = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].is("<")) ++angle;
            else if (s[i].is(">")) --angle;
            else if (angle == 0 && (s[i].is("class") || s[i].is("struct") || s[i].is("interface") ||
                                    s[i].is("union"))) {
                kw = i;
                break;
            }
        }
        if (kw == s.size()) return std::nullopt;
        if (std::any_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(kw),
                        [](const Token& t) { return t.is("("); }))
            return std::nullopt;
        std::string name;
        for (std::size_t i = kw + 1; i < s.size(); ++i) {
            const auto& t = s[i];
            if (t.is(":") || t.is("extends") || t.is("implements") || t.is("<") || t.is("final") ||
                t.is("permits") || t.is("("))
                break;
            if (t.word() && !is_keyword(t.text)) name = t.text;
        }
        return name;
    }

    void function_definition(const std::vector<Token>& s, std::size_t paren) {
        auto close = match_close(s, paren);
        if (paren == 0 || close == std::string_view::npos || !s[paren - 1].word()) {
            push(Scope::Function);
            return;
        }
        const std::string& name = s[paren - 1].text;
        bool is_operator = std::any_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(paren),
                                       [](const Token& t) { return t.is("operator"); });
        bool destructor = paren >= 2 && s[paren - 2].is("~");
        if (is_keyword(name) || is_operator || destructor) {
            push(Scope::Function);
            return;
        }
        if (contains_test(name)) {
            push(Scope::Ignored);
            return;
        }
        // Return type: tokens before the name, minus `Qualifier::` chains and
        // Java generic method parameters.
        std::size_t end = paren - 1;
        while (end >= 2 && s[end - 1].is("::")) {
            end -= 2;
            if (end > 0 && s[end].is(">")) {
                std::size_t depth = 0, j = end + 1;
                while (j-- > 0) {
                    if (s[j].is(">")) ++depth;
                    else if (s[j].is("<") && --depth == 0) break;
                }
                end = j > 0 ? j - 1 : 0;
            }
        }
        std::size_t begin = 0;
        while (begin < end && s[begin].word() && is_modifier(s[begin].text)) ++begin;
        if (begin < end && s[begin].is("<")) {
            auto c = match_close(s, begin);
            if (c != std::string_view::npos && c < end) begin = c + 1;
        }
        std::span<const Token> type(s.data() + begin, end - begin);
        emit(name, IdentifierContext::FUNCTION, render_type(type));
        std::span<const Token> params(s.data() + paren + 1, close - paren - 1);
        for (auto& d : parse_parameters(params)) emit(d.name, IdentifierContext::PARAMETER, d.type);
        push(Scope::Function);
    }

    void for_init(const std::vector<Token>& s) {
        if (s.size() < 2 || !s[1].is("(")) return;
        std::vector<Token> init;
        int depth = 0;
        for (std::size_t i = 2; i < s.size(); ++i) {
            if (s[i].is("(")) ++depth;
            if (s[i].is(")") && depth-- == 0) break;
            if (depth == 0 && (s[i].is(";") || s[i].is(":"))) break;
            init.push_back(s[i]);
        }
        for (auto& d : parse_declaration(init, false)) emit(d.name, IdentifierContext::DECLARATION, d.type);
    }

    void end_statement() {
        auto& f = top();
        auto s = drop_template_prefix(f.stmt);
        f.stmt.clear();
        if (s.empty() || f.scope == Scope::Ignored) return;
        if (s[0].is("for")) { for_init(s); return; }
        if (is_control(s[0].text)) return;
        const bool local = in_function();
        const auto ctx = f.scope == Scope::Class ? IdentifierContext::ATTRIBUTE : IdentifierContext::DECLARATION;
        for (auto& d : parse_declaration(s, local)) emit(d.name, ctx, d.type);
    }
};

inline bool has_source_extension(const std::filesystem::path& p) {
    static const std::set<std::string> exts = {".c", ".h", ".cpp", ".hpp", ".java"};
    return exts.contains(p.extension().string());
}

} // namespace detail::extract

/// Identifiers of one source text, in order of appearance.
inline std::vector<ExtractedIdentifier> extract_from_source(std::string_view source) {
    using namespace detail::extract;
    return Walker(tokenize(strip_source(source))).run();
}

/// Source files under `root` in path order, excluding any whose relative
/// path has a component containing "test".
inline std::vector<std::filesystem::path> source_files(const std::filesystem::path& root,
                                                       std::ostream& warn = std::cerr) {
    namespace fs = std::filesystem;
    using detail::extract::contains_test;
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw ConfigError("no such directory: " + root.string());
    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
    if (ec) throw DataError("cannot read directory " + root.string() + ": " + ec.message());
    for (; it != end; it.increment(ec)) {
        if (ec) {
            warn << "warning: " << ec.message() << '\n';
            ec.clear();
            continue;
        }
        const auto rel = fs::relative(it->path(), root, ec);
        if (ec) { ec.clear(); continue; }
        if (it->is_directory(ec)) {
            if (contains_test(it->path().filename().string())) it.disable_recursion_pending();
            continue;
        }
        if (!it->is_regular_file(ec) || !detail::extract::has_source_extension(it->path())) continue;
        bool skip = false;
        for (const auto& part : rel)
            if (contains_test(part.string())) skip = true;
        if (!skip) files.push_back(it->path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });
    return files;
}

/// Untagged records for every identifier under `root`. The system name is
/// the root directory's name; ids are `<system>-<n>` in path order.
inline std::vector<IdentifierRecord> extract_identifiers(const std::filesystem::path& root,
                                                         std::ostream& warn = std::cerr) {
    namespace fs = std::filesystem;
    auto files = source_files(root, warn);
    std::error_code ec;
    auto canonical = fs::weakly_canonical(root, ec);
    std::string system = (ec ? root : canonical).filename().string();
    if (system.empty()) system = "system";

    std::vector<IdentifierRecord> out;
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            warn << "warning: cannot read " << file.string() << ", skipped\n";
            continue;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (in.bad()) {
            warn << "warning: error reading " << file.string() << ", skipped\n";
            continue;
        }
        for (auto& e : extract_from_source(text)) {
            SplitIdentifier parts;
            try {
                parts = split(e.name);
            } catch (const std::invalid_argument&) {
                continue;
            }
            IdentifierRecord r;
            r.id = system + "-" + std::to_string(out.size() + 1);
            r.system = system;
            r.context = e.context;
            r.type_hint = std::move(e.type_hint);
            r.raw_name = std::move(e.name);
            r.words = std::move(parts.words);
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace idpos
