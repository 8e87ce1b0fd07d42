#include "jrbac/frontend/parse.hpp"

#include <array>
#include <cctype>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace jrbac::frontend {

SourceParseError::SourceParseError(std::string file, int line, int column,
                                   std::string message)
    : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
            ": " + message),
      file_(std::move(file)), line_(line), column_(column) {}

bool is_primitive_or_void(const std::string& type) {
    static const std::set<std::string> kPrimitives = {
        "void", "int",  "boolean", "long",  "double",
        "float", "char", "byte",    "short"};
    return kPrimitives.count(type) > 0;
}

namespace {

enum class Tok { Ident, Keyword, Number, Str, CharLit, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const std::set<std::string> kKeywords = {
    "package", "import",  "public",     "private", "protected", "static",
    "final",   "abstract", "class",      "extends", "implements", "return",
    "if",      "else",    "while",      "for",     "new",       "this",
    "super",   "true",    "false",      "null",    "void",      "int",
    "boolean", "long",    "double",     "float",   "char",      "byte",
    "short",   "break",   "continue",   "interface", "enum"};

const std::set<std::string> kTypeKeywords = {"void", "int",   "boolean",
                                             "long", "double", "float",
                                             "char", "byte",   "short"};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

class Lexer {
public:
    Lexer(std::string_view text, const std::string& path)
        : text_(text), path_(path) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    [[noreturn]] void fail(const std::string& msg, int line, int col) {
        throw SourceParseError(path_, line, col, msg);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (c == '/' && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '*') {
                int line = line_, col = col_;
                advance();
                advance();
                for (;;) {
                    if (pos_ + 1 >= text_.size())
                        fail("unterminated block comment", line, col);
                    if (text_[pos_] == '*' && text_[pos_ + 1] == '/') {
                        advance();
                        advance();
                        break;
                    }
                    advance();
                }
            } else {
                break;
            }
        }
    }

    Token next() {
        int line = line_, col = col_;
        char c = text_[pos_];
        if (ident_start(c)) {
            std::string word;
            while (pos_ < text_.size() && ident_char(text_[pos_])) {
                word += text_[pos_];
                advance();
            }
            return {kKeywords.count(word) ? Tok::Keyword : Tok::Ident, word,
                    line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '.')) {
                num += text_[pos_];
                advance();
            }
            return {Tok::Number, num, line, col};
        }
        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n')
                    fail("unterminated string literal", line, col);
                if (text_[pos_] == '\\') {
                    advance();
                    if (pos_ >= text_.size())
                        fail("unterminated string literal", line, col);
                }
                s += text_[pos_];
                advance();
            }
            if (pos_ >= text_.size())
                fail("unterminated string literal", line, col);
            advance();
            return {Tok::Str, s, line, col};
        }
        if (c == '\'') {
            advance();
            std::string s;
            if (pos_ < text_.size() && text_[pos_] == '\\') {
                advance();
                if (pos_ >= text_.size())
                    fail("unterminated character literal", line, col);
            }
            if (pos_ >= text_.size())
                fail("unterminated character literal", line, col);
            s += text_[pos_];
            advance();
            if (pos_ >= text_.size() || text_[pos_] != '\'')
                fail("unterminated character literal", line, col);
            advance();
            return {Tok::CharLit, s, line, col};
        }
        // two-character operators first
        static const std::array<const char*, 8> kTwo = {"==", "!=", "<=", ">=",
                                                        "&&", "||", "++", "--"};
        if (pos_ + 1 < text_.size()) {
            std::string two{c, text_[pos_ + 1]};
            for (const char* op : kTwo) {
                if (two == op) {
                    advance();
                    advance();
                    return {Tok::Punct, two, line, col};
                }
            }
        }
        static const std::string kSingle = "{}();,.=+-*/%<>!&|:";
        if (kSingle.find(c) != std::string::npos) {
            advance();
            return {Tok::Punct, std::string(1, c), line, col};
        }
        fail(std::string("unexpected character '") + c +
                 "' (outside the supported source subset)",
             line, col);
    }

    std::string_view text_;
    const std::string& path_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Transient shape of a parsed expression, just enough to classify the
// receiver of a later `.m(...)`.
struct ExprInfo {
    enum class K { Other, Name, This, ThisPath, Call } k = K::Other;
    std::vector<std::string> path;
    int call_index = -1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const std::string& path)
        : toks_(std::move(toks)), path_(path) {}

    ClassModel run() {
        if (accept_kw("package")) {
            cls_.package = qualified_name();
            expect_punct(";");
        }
        while (accept_kw("import")) {
            std::string imp = qualified_name();
            if (accept_punct(".")) {
                expect_punct("*");
                imp += ".*";
            }
            expect_punct(";");
            cls_.imports.push_back(imp);
        }
        class_decl();
        if (peek().kind != Tok::End)
            fail("only one top-level class per file is supported");
        finish_field_init_span();
        validate();
        return std::move(cls_);
    }

private:
    struct Mods {
        Visibility visibility = Visibility::PackagePrivate;
        bool is_static = false;
        int line = -1; // line of the first modifier token, if any
    };

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = idx_ + ahead;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }

    Token take() { return toks_[idx_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw SourceParseError(path_, t.line, t.column, msg);
    }

    bool is_kw(const Token& t, const char* w) const {
        return t.kind == Tok::Keyword && t.text == w;
    }
    bool is_punct(const Token& t, const char* w) const {
        return t.kind == Tok::Punct && t.text == w;
    }

    bool accept_kw(const char* w) {
        if (is_kw(peek(), w)) {
            ++idx_;
            return true;
        }
        return false;
    }
    bool accept_punct(const char* w) {
        if (is_punct(peek(), w)) {
            ++idx_;
            return true;
        }
        return false;
    }
    void expect_kw(const char* w) {
        if (!accept_kw(w))
            fail(std::string("expected '") + w + "'");
    }
    Token expect_punct(const char* w) {
        if (!is_punct(peek(), w))
            fail(std::string("expected '") + w + "'");
        return take();
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != Tok::Ident)
            fail(std::string("expected ") + what);
        return take().text;
    }

    std::string qualified_name() {
        std::string q = expect_ident("identifier");
        while (is_punct(peek(), ".") && peek(1).kind == Tok::Ident) {
            take();
            q += "." + expect_ident("identifier");
        }
        return q;
    }

    Mods modifiers() {
        Mods m;
        for (;;) {
            const Token& t = peek();
            if (is_kw(t, "public") || is_kw(t, "private") ||
                is_kw(t, "protected")) {
                if (m.line < 0)
                    m.line = t.line;
                m.visibility = t.text == "public"    ? Visibility::Public
                               : t.text == "private" ? Visibility::Private
                                                     : Visibility::Protected;
                ++idx_;
            } else if (is_kw(t, "static") || is_kw(t, "final")) {
                if (m.line < 0)
                    m.line = t.line;
                m.is_static = m.is_static || t.text == "static";
                ++idx_;
            } else if (is_kw(t, "abstract")) {
                fail("'abstract' is outside the supported source subset");
            } else {
                break;
            }
        }
        return m;
    }

    bool at_type() const {
        const Token& t = peek();
        return t.kind == Tok::Ident ||
               (t.kind == Tok::Keyword && kTypeKeywords.count(t.text));
    }

    // Qualified type names collapse to the simple name; the program has a
    // single global class namespace.
    std::string type_name() {
        const Token& t = peek();
        if (t.kind == Tok::Keyword && kTypeKeywords.count(t.text)) {
            std::string name = t.text;
            ++idx_;
            return name;
        }
        std::string q = expect_ident("type name");
        while (is_punct(peek(), ".") && peek(1).kind == Tok::Ident) {
            take();
            q = expect_ident("type name");
        }
        return q;
    }

    void class_decl() {
        Mods m = modifiers();
        const Token& kw = peek();
        if (is_kw(kw, "interface") || is_kw(kw, "enum"))
            fail("only 'class' declarations are supported");
        expect_kw("class");
        cls_.decl_line = m.line >= 0 ? m.line : kw.line;
        cls_.visibility = m.visibility;
        cls_.name = expect_ident("class name");
        if (is_punct(peek(), "<"))
            fail("generics are outside the supported source subset");
        if (accept_kw("extends"))
            cls_.extends = expect_ident("superclass name");
        if (accept_kw("implements")) {
            cls_.implements.push_back(expect_ident("interface name"));
            while (accept_punct(","))
                cls_.implements.push_back(expect_ident("interface name"));
        }
        expect_punct("{");
        while (!is_punct(peek(), "}")) {
            if (peek().kind == Tok::End)
                fail("unexpected end of file inside class body");
            member();
        }
        take(); // '}'
    }

    void member() {
        if (accept_punct(";"))
            return;
        Mods m = modifiers();
        if (!at_type() && !is_kw(peek(), "void"))
            fail("expected field, method or constructor declaration");
        int decl_line = m.line >= 0 ? m.line : peek().line;

        // constructor: the class name immediately followed by '('
        if (peek().kind == Tok::Ident && peek().text == cls_.name &&
            is_punct(peek(1), "(")) {
            take();
            MethodModel ctor;
            ctor.name = std::string(kConstructor);
            ctor.visibility = m.visibility;
            ctor.is_static = false;
            ctor.return_type = cls_.name;
            ctor.decl_line = decl_line;
            method_rest(std::move(ctor));
            return;
        }

        std::string type = type_name();
        if (is_punct(peek(), "<") || is_punct(peek(), "["))
            fail("generics and arrays are outside the supported source subset");
        std::string name = expect_ident("member name");
        if (is_punct(peek(), "(")) {
            MethodModel method;
            method.name = std::move(name);
            method.visibility = m.visibility;
            method.is_static = m.is_static;
            method.return_type = std::move(type);
            method.decl_line = decl_line;
            method_rest(std::move(method));
            return;
        }
        field_rest(std::move(type), std::move(name), m, decl_line);
    }

    void method_rest(MethodModel method) {
        cur_ = &method;
        scopes_.clear();
        scopes_.emplace_back();
        expect_punct("(");
        if (!is_punct(peek(), ")")) {
            do {
                std::string ptype = type_name();
                std::string pname = expect_ident("parameter name");
                if (scopes_.back().count(pname))
                    fail("duplicate parameter '" + pname + "'");
                scopes_.back().emplace(pname, ptype);
                method.params.push_back({pname, ptype});
            } while (accept_punct(","));
        }
        expect_punct(")");
        if (is_punct(peek(), ";"))
            fail("method bodies are required in the supported subset");
        method.body_begin = peek().line;
        block();
        method.body_end = toks_[idx_ - 1].line;
        cur_ = nullptr;
        scopes_.clear();
        cls_.methods.push_back(std::move(method));
    }

    void field_rest(std::string type, std::string first_name, const Mods& m,
                    int decl_line) {
        auto declare = [&](std::string name, int line) {
            for (const auto& f : cls_.fields)
                if (f.name == name)
                    fail("duplicate field '" + name + "'");
            if (accept_punct("=")) {
                MethodModel* init = field_init_method();
                std::size_t before = init->calls.size();
                cur_ = init;
                expression();
                cur_ = nullptr;
                if (init->calls.size() > before)
                    note_field_init_line(line);
            }
            cls_.fields.push_back(
                {std::move(name), type, m.visibility, line});
        };
        declare(std::move(first_name), decl_line);
        while (accept_punct(",")) {
            int line = peek().line;
            declare(expect_ident("field name"), line);
        }
        expect_punct(";");
    }

    MethodModel* field_init_method() {
        if (!field_init_) {
            field_init_ = MethodModel{};
            field_init_->name = std::string(kFieldInit);
            field_init_->visibility = Visibility::Private;
            field_init_->return_type = "void";
        }
        return &*field_init_;
    }

    void note_field_init_line(int line) {
        if (field_init_->decl_line == 0 || line < field_init_->decl_line)
            field_init_->decl_line = line;
        if (line > field_init_->body_end)
            field_init_->body_end = line;
    }

    void finish_field_init_span() {
        if (!field_init_ || field_init_->calls.empty())
            return;
        // span covers every initializer that produced a call
        int lo = field_init_->decl_line, hi = field_init_->body_end;
        for (const auto& c : field_init_->calls) {
            if (c.line < lo)
                lo = c.line;
            if (c.line > hi)
                hi = c.line;
        }
        field_init_->decl_line = lo;
        field_init_->body_begin = lo;
        field_init_->body_end = hi;
        cls_.methods.push_back(std::move(*field_init_));
        field_init_.reset();
    }

    // ---- statements ----

    void block() {
        expect_punct("{");
        scopes_.emplace_back();
        while (!is_punct(peek(), "}")) {
            if (peek().kind == Tok::End)
                fail("unexpected end of file inside block");
            statement();
        }
        take();
        scopes_.pop_back();
    }

    void statement() {
        const Token& t = peek();
        if (is_punct(t, "{")) {
            block();
        } else if (is_punct(t, ";")) {
            take();
        } else if (is_kw(t, "return")) {
            take();
            if (!is_punct(peek(), ";"))
                expression();
            expect_punct(";");
        } else if (is_kw(t, "break") || is_kw(t, "continue")) {
            take();
            expect_punct(";");
        } else if (is_kw(t, "if")) {
            take();
            expect_punct("(");
            expression();
            expect_punct(")");
            statement();
            if (accept_kw("else"))
                statement();
        } else if (is_kw(t, "while")) {
            take();
            expect_punct("(");
            expression();
            expect_punct(")");
            statement();
        } else if (is_kw(t, "for")) {
            for_statement();
        } else if (looks_like_local_decl()) {
            local_decl();
            expect_punct(";");
        } else {
            expression();
            expect_punct(";");
        }
    }

    void for_statement() {
        take(); // for
        expect_punct("(");
        scopes_.emplace_back();
        if (enhanced_for_ahead()) {
            std::string type = type_name();
            std::string name = expect_ident("loop variable");
            declare_local(name, type);
            expect_punct(":");
            expression();
            expect_punct(")");
            statement();
        } else {
            if (!accept_punct(";")) {
                if (looks_like_local_decl())
                    local_decl();
                else
                    expression_list();
                expect_punct(";");
            }
            if (!is_punct(peek(), ";"))
                expression();
            expect_punct(";");
            if (!is_punct(peek(), ")"))
                expression_list();
            expect_punct(")");
            statement();
        }
        scopes_.pop_back();
    }

    void expression_list() {
        expression();
        while (accept_punct(","))
            expression();
    }

    bool enhanced_for_ahead() const {
        // type ident ':' with an optional qualified type
        std::size_t j = idx_;
        auto tok = [&](std::size_t k) { return peek(k - idx_); };
        const Token& t0 = tok(j);
        if (t0.kind == Tok::Keyword && kTypeKeywords.count(t0.text))
            ++j;
        else if (t0.kind == Tok::Ident) {
            ++j;
            while (is_punct(tok(j), ".") && tok(j + 1).kind == Tok::Ident)
                j += 2;
        } else {
            return false;
        }
        if (tok(j).kind != Tok::Ident)
            return false;
        return is_punct(tok(j + 1), ":");
    }

    bool looks_like_local_decl() const {
        const Token& t0 = peek();
        std::size_t j = idx_;
        auto tok = [&](std::size_t k) {
            return k < toks_.size() ? toks_[k] : toks_.back();
        };
        if (t0.kind == Tok::Keyword && kTypeKeywords.count(t0.text))
            return tok(j + 1).kind == Tok::Ident;
        if (t0.kind != Tok::Ident)
            return false;
        ++j;
        while (is_punct(tok(j), ".") && tok(j + 1).kind == Tok::Ident)
            j += 2;
        return tok(j).kind == Tok::Ident;
    }

    void declare_local(const std::string& name, const std::string& type) {
        // Java does not allow locals to shadow params or other locals.
        for (const auto& frame : scopes_)
            if (frame.count(name))
                fail("variable '" + name + "' is already declared");
        scopes_.back().emplace(name, type);
    }

    void local_decl() {
        std::string type = type_name();
        auto declarator = [&] {
            std::string name = expect_ident("variable name");
            if (accept_punct("="))
                expression();
            declare_local(name, type);
        };
        declarator();
        while (accept_punct(","))
            declarator();
    }

    // ---- expressions ----

    std::optional<std::string> scope_lookup(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto hit = it->find(name);
            if (hit != it->end())
                return hit->second;
        }
        return std::nullopt;
    }

    int new_call(CallSite call) {
        int idx = static_cast<int>(cur_->calls.size());
        cur_->calls.push_back(std::move(call));
        return idx;
    }

    ExprInfo expression() { return assignment(); }

    ExprInfo assignment() {
        ExprInfo lhs = logical_or();
        if (accept_punct("=")) {
            assignment();
            return {};
        }
        return lhs;
    }

    ExprInfo binary_chain(ExprInfo (Parser::*next)(),
                          std::initializer_list<const char*> ops) {
        ExprInfo info = (this->*next)();
        bool combined = false;
        for (;;) {
            bool matched = false;
            for (const char* op : ops) {
                if (accept_punct(op)) {
                    (this->*next)();
                    combined = matched = true;
                    break;
                }
            }
            if (!matched)
                break;
        }
        return combined ? ExprInfo{} : info;
    }

    ExprInfo logical_or() {
        return binary_chain(&Parser::logical_and, {"||"});
    }
    ExprInfo logical_and() {
        return binary_chain(&Parser::equality, {"&&"});
    }
    ExprInfo equality() {
        return binary_chain(&Parser::relational, {"==", "!="});
    }
    ExprInfo relational() {
        return binary_chain(&Parser::additive, {"<", ">", "<=", ">="});
    }
    ExprInfo additive() {
        return binary_chain(&Parser::multiplicative, {"+", "-"});
    }
    ExprInfo multiplicative() {
        return binary_chain(&Parser::unary, {"*", "/", "%"});
    }

    ExprInfo unary() {
        if (accept_punct("!") || accept_punct("-") || accept_punct("+") ||
            accept_punct("++") || accept_punct("--")) {
            unary();
            return {};
        }
        return postfix();
    }

    ExprInfo postfix() {
        ExprInfo info = primary();
        for (;;) {
            if (accept_punct("++") || accept_punct("--")) {
                info = {};
                continue;
            }
            if (!is_punct(peek(), "."))
                break;
            take();
            std::string name = expect_ident("member name");
            if (is_punct(peek(), "(")) {
                info = invocation(std::move(name), info);
            } else {
                switch (info.k) {
                case ExprInfo::K::Name:
                case ExprInfo::K::ThisPath:
                    info.path.push_back(std::move(name));
                    break;
                case ExprInfo::K::This:
                    info.k = ExprInfo::K::ThisPath;
                    info.path = {std::move(name)};
                    break;
                default:
                    info = {};
                    break;
                }
            }
        }
        return info;
    }

    ExprInfo invocation(std::string method, const ExprInfo& receiver) {
        Token paren = expect_punct("(");
        CallSite call;
        call.called_method = std::move(method);
        call.line = paren.line;
        switch (receiver.k) {
        case ExprInfo::K::Name:
            call.recv = CallSite::Recv::NamePath;
            call.receiver_path = receiver.path;
            call.head_local_type = scope_lookup(receiver.path.front());
            break;
        case ExprInfo::K::This:
            call.recv = CallSite::Recv::This;
            break;
        case ExprInfo::K::ThisPath:
            call.recv = CallSite::Recv::ThisPath;
            call.receiver_path = receiver.path;
            break;
        case ExprInfo::K::Call:
            call.recv = CallSite::Recv::Chain;
            call.chain_prev = receiver.call_index;
            break;
        case ExprInfo::K::Other:
            call.recv = CallSite::Recv::Expr;
            break;
        }
        int idx = new_call(std::move(call));
        arguments();
        return {ExprInfo::K::Call, {}, idx};
    }

    void arguments() {
        if (!is_punct(peek(), ")")) {
            expression();
            while (accept_punct(","))
                expression();
        }
        expect_punct(")");
    }

    ExprInfo primary() {
        const Token& t = peek();
        if (t.kind == Tok::Number || t.kind == Tok::Str ||
            t.kind == Tok::CharLit) {
            take();
            return {};
        }
        if (is_kw(t, "true") || is_kw(t, "false") || is_kw(t, "null")) {
            take();
            return {};
        }
        if (is_kw(t, "this")) {
            take();
            return {ExprInfo::K::This, {}, -1};
        }
        if (is_kw(t, "super"))
            fail("'super' is outside the supported source subset");
        if (is_kw(t, "new")) {
            take();
            std::string type = type_name();
            Token paren = expect_punct("(");
            CallSite call;
            call.called_class = type;
            call.called_method = std::string(kConstructor);
            call.line = paren.line;
            call.recv = CallSite::Recv::New;
            int idx = new_call(std::move(call));
            arguments();
            return {ExprInfo::K::Call, {}, idx};
        }
        if (t.kind == Tok::Ident) {
            std::string name = take().text;
            if (is_punct(peek(), "(")) {
                Token paren = take();
                CallSite call;
                call.called_method = std::move(name);
                call.line = paren.line;
                call.recv = CallSite::Recv::Bare;
                int idx = new_call(std::move(call));
                if (!is_punct(peek(), ")")) {
                    expression();
                    while (accept_punct(","))
                        expression();
                }
                expect_punct(")");
                return {ExprInfo::K::Call, {}, idx};
            }
            return {ExprInfo::K::Name, {std::move(name)}, -1};
        }
        if (is_punct(t, "(")) {
            take();
            ExprInfo inner = expression();
            expect_punct(")");
            return inner;
        }
        fail("expected expression");
    }

    void validate() {
        std::set<std::pair<std::string, std::size_t>> seen;
        for (const auto& m : cls_.methods) {
            if (m.name == kFieldInit)
                continue;
            auto key = std::make_pair(m.name, m.params.size());
            if (!seen.insert(key).second)
                throw SourceParseError(
                    path_, m.decl_line, 1,
                    "duplicate method '" + m.name + "' with " +
                        std::to_string(m.params.size()) + " parameter(s)");
        }
    }

    std::vector<Token> toks_;
    const std::string& path_;
    std::size_t idx_ = 0;
    ClassModel cls_;
    MethodModel* cur_ = nullptr;
    std::optional<MethodModel> field_init_;
    std::vector<std::map<std::string, std::string>> scopes_;
};

} // namespace

ClassModel parse_class(std::string_view text, const std::string& path) {
    return Parser(Lexer(text, path).run(), path).run();
}

} // namespace jrbac::frontend
