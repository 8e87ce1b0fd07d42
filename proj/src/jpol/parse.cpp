#include "jrbac/jpol/parse.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace jrbac::jpol {

PolicyParseError::PolicyParseError(std::string message, int line, int column,
                                   std::string token)
    : Error("policy:" + std::to_string(line) + ":" + std::to_string(column) +
            ": " + message),
      line_(line), column_(column), token_(std::move(token)) {}

namespace {

enum class Tok {
    KwRole,
    KwResource,
    KwNew,
    KwSubsumes,
    Ident,
    Quoted, // 'Name' or `Name'
    Semi,
    Eq,
    Dot,
    LParen,
    RParen,
    Comma,
    End,
};

struct Token {
    Tok kind;
    std::string text; // for Quoted, the unquoted content
    int line;
    int column;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_ws_and_comments();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        int line = line_, col = col_;
        char c = text_[pos_];
        if (is_ident_start(c)) {
            std::string word;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                word += text_[pos_];
                advance();
            }
            Tok kind = Tok::Ident;
            if (word == "Role")
                kind = Tok::KwRole;
            else if (word == "Resource")
                kind = Tok::KwResource;
            else if (word == "new")
                kind = Tok::KwNew;
            else if (word == "subsumes")
                kind = Tok::KwSubsumes;
            return {kind, word, line, col};
        }
        if (c == '\'' || c == '`')
            return quoted(line, col);
        advance();
        switch (c) {
        case ';': return {Tok::Semi, ";", line, col};
        case '=': return {Tok::Eq, "=", line, col};
        case '.': return {Tok::Dot, ".", line, col};
        case '(': return {Tok::LParen, "(", line, col};
        case ')': return {Tok::RParen, ")", line, col};
        case ',': return {Tok::Comma, ",", line, col};
        default:
            throw PolicyParseError("unexpected character", line, col,
                                   std::string(1, c));
        }
    }

    // Opening quote is ' or `, closing is always '; both openers appear in
    // real policy files.
    Token quoted(int line, int col) {
        advance(); // opening quote
        std::string content;
        while (pos_ < text_.size() && text_[pos_] != '\'') {
            if (text_[pos_] == '\n')
                throw PolicyParseError("unterminated quoted name", line, col,
                                       content);
            content += text_[pos_];
            advance();
        }
        if (pos_ >= text_.size())
            throw PolicyParseError("unterminated quoted name", line, col,
                                   content);
        advance(); // closing quote
        if (content.empty() || !is_ident_start(content[0]))
            throw PolicyParseError("quoted name is not a valid identifier",
                                   line, col, content);
        for (char ch : content)
            if (!is_ident_char(ch))
                throw PolicyParseError("quoted name is not a valid identifier",
                                       line, col, content);
        return {Tok::Quoted, content, line, col};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    PolicyAst run() {
        PolicyAst ast;
        if (peek().kind == Tok::End)
            fail("policy must contain at least one statement");
        while (peek().kind != Tok::End) {
            int line = peek().line;
            Statement s = statement();
            expect(Tok::Semi, "';'");
            ast.statements.push_back({std::move(s), line});
        }
        return ast;
    }

private:
    const Token& peek() const { return toks_[idx_]; }

    Token take() { return toks_[idx_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw PolicyParseError(msg, t.line, t.column, t.text);
    }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            fail(std::string("expected ") + what);
        return take();
    }

    std::string ident() { return expect(Tok::Ident, "identifier").text; }

    // name ::= '(' ID ')'  -- the ID may be bare or quoted
    std::string name_arg() {
        expect(Tok::LParen, "'('");
        std::string n = name_token();
        expect(Tok::RParen, "')'");
        return n;
    }

    std::string name_token() {
        if (peek().kind == Tok::Ident || peek().kind == Tok::Quoted)
            return take().text;
        fail("expected name");
    }

    Statement statement() {
        switch (peek().kind) {
        case Tok::KwRole: return role_decl();
        case Tok::KwResource: return resource_decl();
        case Tok::Ident: return method_call();
        default: fail("expected statement");
        }
    }

    Statement role_decl() {
        take(); // Role
        std::string id = ident();
        expect(Tok::Eq, "'='");
        expect(Tok::KwNew, "'new'");
        expect(Tok::KwRole, "'Role'");
        std::string name = name_arg();
        if (peek().kind == Tok::KwSubsumes) {
            take();
            std::string parent = ident();
            return DecRoleSubsume{std::move(id), std::move(name),
                                  std::move(parent)};
        }
        return DecRole{std::move(id), std::move(name)};
    }

    Statement resource_decl() {
        take(); // Resource
        std::string id = ident();
        expect(Tok::Eq, "'='");
        expect(Tok::KwNew, "'new'");
        expect(Tok::KwResource, "'Resource'");
        return DecRes{std::move(id), name_arg()};
    }

    Statement method_call() {
        std::string id = take().text;
        expect(Tok::Dot, "'.'");
        Token method = expect(Tok::Ident, "'addAction' or 'addPermission'");
        if (method.text == "addAction") {
            return AddActRes{std::move(id), name_arg()};
        }
        if (method.text == "addPermission") {
            expect(Tok::LParen, "'('");
            std::string res = name_token();
            expect(Tok::Comma, "','");
            std::string act = name_token();
            expect(Tok::RParen, "')'");
            return AddPermRole{std::move(id), std::move(res), std::move(act)};
        }
        throw PolicyParseError("unknown method '" + method.text + "'",
                               method.line, method.column, method.text);
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

} // namespace

PolicyAst parse_policy(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

std::string to_text(const PolicyAst& ast) {
    std::ostringstream out;
    for (const auto& node : ast.statements) {
        std::visit(
            [&out](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, DecRole>) {
                    out << "Role " << s.id << " = new Role('" << s.role_name
                        << "')";
                } else if constexpr (std::is_same_v<T, DecRoleSubsume>) {
                    out << "Role " << s.id << " = new Role('" << s.role_name
                        << "') subsumes " << s.parent_id;
                } else if constexpr (std::is_same_v<T, DecRes>) {
                    out << "Resource " << s.id << " = new Resource('"
                        << s.resource_name << "')";
                } else if constexpr (std::is_same_v<T, AddActRes>) {
                    out << s.resource_id << ".addAction('" << s.action << "')";
                } else {
                    out << s.role_id << ".addPermission('" << s.resource_name
                        << "', '" << s.action << "')";
                }
            },
            node.stmt);
        out << ";\n";
    }
    return out.str();
}

} // namespace jrbac::jpol
