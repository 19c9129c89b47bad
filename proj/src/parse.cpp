#include "netsr/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <vector>

namespace netsr {

namespace {

struct OpSpec {
    const char* name;
    NodeKind kind;
    int operands;  // as written, including the psi/delta constant
};

constexpr OpSpec kOps[] = {
    {"+", NodeKind::Add, 2},     {"-", NodeKind::Sub, 2},    {"*", NodeKind::Mul, 2},
    {"/", NodeKind::Div, 2},     {"pow", NodeKind::Pow, 2},  {"min", NodeKind::Min, 2},
    {"max", NodeKind::Max, 2},   {"exp", NodeKind::Exp, 1},  {"log", NodeKind::Log, 1},
    {"abs", NodeKind::Abs, 1},   {">", NodeKind::Gt, 4},     {"<", NodeKind::Lt, 4},
    {"=", NodeKind::Eq, 4},      {"=0", NodeKind::Eq0, 3},   {"psi", NodeKind::Psi, 3},
    {"delta", NodeKind::Delta, 3}};

const OpSpec* find_op(std::string_view name) {
    for (const auto& op : kOps)
        if (name == op.name) return &op;
    return nullptr;
}

struct Token {
    enum Type { LParen, RParen, Atom, End } type;
    std::string_view text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) return {Token::End, {}, pos_};
        std::size_t start = pos_;
        char c = text_[pos_];
        if (c == '(') { ++pos_; return {Token::LParen, text_.substr(start, 1), start}; }
        if (c == ')') { ++pos_; return {Token::RParen, text_.substr(start, 1), start}; }
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            ++pos_;
        return {Token::Atom, text_.substr(start, pos_ - start), start};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::optional<double> parse_number(std::string_view atom) {
    std::string buf(atom);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { advance(); }

    GeneratorTree parse() {
        GeneratorTree t;
        expression(t);
        if (cur_.type != Token::End)
            throw ParseError("trailing input after expression", cur_.offset);
        return t;
    }

private:
    void advance() { cur_ = lex_.next(); }

    std::int32_t expression(GeneratorTree& t) {
        switch (cur_.type) {
            case Token::Atom: {
                Token atom = cur_;
                advance();
                if (auto num = parse_number(atom.text)) {
                    ExprNode n;
                    n.kind = NodeKind::Constant;
                    n.value = *num;
                    return t.append(n);
                }
                if (auto var = var_from_name(atom.text)) {
                    ExprNode n;
                    n.kind = NodeKind::Variable;
                    n.var = *var;
                    return t.append(n);
                }
                throw ParseError("unknown symbol '" + std::string(atom.text) + "'", atom.offset);
            }
            case Token::LParen: return form(t);
            case Token::RParen: throw ParseError("unexpected ')'", cur_.offset);
            case Token::End: throw ParseError("unexpected end of input", cur_.offset);
        }
        throw ParseError("unexpected token", cur_.offset);
    }

    std::int32_t form(GeneratorTree& t) {
        advance();  // past '('
        if (cur_.type != Token::Atom)
            throw ParseError("expected an operator after '('", cur_.offset);
        Token head = cur_;
        const OpSpec* op = find_op(head.text);
        if (!op) throw ParseError("unknown operator '" + std::string(head.text) + "'", head.offset);
        advance();

        ExprNode n;
        n.kind = op->kind;
        int stored_children = child_count(op->kind);
        if (op->kind == NodeKind::Psi || op->kind == NodeKind::Delta) {
            if (cur_.type != Token::Atom)
                throw ParseError(std::string(op->name) + " needs a constant first operand", cur_.offset);
            auto num = parse_number(cur_.text);
            if (!num)
                throw ParseError(std::string(op->name) + " first operand must be a number", cur_.offset);
            n.value = *num;
            advance();
        }
        std::int32_t at = t.append(n);
        for (int c = 0; c < stored_children; ++c) {
            if (cur_.type == Token::RParen || cur_.type == Token::End)
                throw ParseError("operator '" + std::string(head.text) + "' expects " +
                                     std::to_string(op->operands) + " operands",
                                 cur_.offset);
            std::int32_t child = expression(t);
            t.mutable_node(at).child[static_cast<std::size_t>(c)] = child;
        }
        if (cur_.type != Token::RParen)
            throw ParseError("expected ')' closing '" + std::string(head.text) + "'", cur_.offset);
        advance();
        return at;
    }

    Lexer lex_;
    Token cur_{Token::End, {}, 0};
};

const char* op_name(NodeKind kind) {
    for (const auto& op : kOps)
        if (op.kind == kind) return op.name;
    return "?";
}

void format_node(const GeneratorTree& t, std::int32_t idx, std::string& out) {
    const ExprNode& n = t.node(idx);
    switch (n.kind) {
        case NodeKind::Constant: out += format_double(n.value); return;
        case NodeKind::Variable: out += var_name(n.var); return;
        default: break;
    }
    out += '(';
    out += op_name(n.kind);
    if (n.kind == NodeKind::Psi || n.kind == NodeKind::Delta) {
        out += ' ';
        out += format_double(n.value);
    }
    for (int c = 0; c < child_count(n.kind); ++c) {
        out += ' ';
        format_node(t, n.child[static_cast<std::size_t>(c)], out);
    }
    out += ')';
}

void infix_node(const GeneratorTree& t, std::int32_t idx, std::string& out) {
    const ExprNode& n = t.node(idx);
    auto child = [&](int c) { infix_node(t, n.child[static_cast<std::size_t>(c)], out); };
    switch (n.kind) {
        case NodeKind::Constant: out += format_double(n.value); return;
        case NodeKind::Variable: out += var_name(n.var); return;
        case NodeKind::Add: case NodeKind::Sub: case NodeKind::Mul: case NodeKind::Div: {
            const char* sym = n.kind == NodeKind::Add   ? " + "
                              : n.kind == NodeKind::Sub ? " - "
                              : n.kind == NodeKind::Mul ? " * "
                                                        : " / ";
            out += '(';
            child(0);
            out += sym;
            child(1);
            out += ')';
            return;
        }
        case NodeKind::Pow:
            child(0);
            out += '^';
            out += '(';
            child(1);
            out += ')';
            return;
        case NodeKind::Min: case NodeKind::Max:
            out += n.kind == NodeKind::Min ? "min(" : "max(";
            child(0);
            out += ", ";
            child(1);
            out += ')';
            return;
        case NodeKind::Exp: case NodeKind::Log: case NodeKind::Abs:
            out += n.kind == NodeKind::Exp ? "exp(" : n.kind == NodeKind::Log ? "log(" : "abs(";
            child(0);
            out += ')';
            return;
        case NodeKind::Gt: case NodeKind::Lt: case NodeKind::Eq: {
            const char* sym = n.kind == NodeKind::Gt ? " > " : n.kind == NodeKind::Lt ? " < " : " = ";
            out += "if(";
            child(0);
            out += sym;
            child(1);
            out += ", ";
            child(2);
            out += ", ";
            child(3);
            out += ')';
            return;
        }
        case NodeKind::Eq0:
            out += "if(";
            child(0);
            out += " = 0, ";
            child(1);
            out += ", ";
            child(2);
            out += ')';
            return;
        case NodeKind::Psi:
            out += "psi_" + format_double(n.value) + "(";
            child(0);
            out += ", ";
            child(1);
            out += ')';
            return;
        case NodeKind::Delta:
            out += "delta_" + format_double(n.value) + "(";
            child(0);
            out += ", ";
            child(1);
            out += ')';
            return;
    }
}

}  // namespace

GeneratorTree parse_generator(std::string_view text) {
    Parser p(text);
    GeneratorTree t = p.parse();
    return t;
}

std::string format_generator(const GeneratorTree& tree) {
    if (tree.empty()) return "";
    std::string out;
    format_node(tree, tree.root(), out);
    return out;
}

std::string format_infix(const GeneratorTree& tree) {
    if (tree.empty()) return "";
    std::string out;
    infix_node(tree, tree.root(), out);
    return out;
}

std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace netsr
