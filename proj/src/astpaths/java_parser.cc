/*
 * Copyright (C) 2026 The prigen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prigen/astpaths/java_parser.h"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace prigen::astpaths {
namespace {

const std::set<std::string> kPrimitives = {"boolean", "byte", "char", "short", "int", "long", "float", "double"};
const std::set<std::string> kModifiers = {"public", "private", "protected", "static", "final", "synchronized"};

const std::map<std::string, std::string> kAssignOps = {
    {"=", "assign"}, {"+=", "plus"}, {"-=", "minus"}, {"*=", "times"}, {"/=", "divide"}, {"%=", "remainder"}};
const std::set<std::string> kBitwise = {"&", "|", "^", "<<", ">>", ">>>", "&=", "|=", "^=", "<<=", ">>=", ">>>=", "~"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Ast Run() {
    int root = ParseMethod();
    if (Peek().kind != TokenKind::kEnd) Fail("trailing tokens after method body");
    ast_.Finalize(root);
    return std::move(ast_);
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token Next() {
    Token t = Peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool IsOp(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kOperator && t.text == text;
  }
  bool IsKw(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kKeyword && t.text == text;
  }
  [[noreturn]] void Fail(const std::string& msg) const {
    throw JavaSyntaxError(msg + (Peek().kind == TokenKind::kEnd ? " at end of input" : " near '" + Peek().text + "'"),
                          Peek().line, Peek().column);
  }
  [[noreturn]] void Unsupported(const std::string& what) const {
    throw UnsupportedConstructError(what, Peek().line, Peek().column);
  }
  void ExpectOp(std::string_view text) {
    if (!IsOp(text)) {
      if (text == "}" && Peek().kind == TokenKind::kEnd) Fail("unbalanced braces");
      Fail("expected '" + std::string(text) + "'");
    }
    Next();
  }
  std::string ExpectIdent() {
    if (Peek().kind != TokenKind::kIdentifier) Fail("expected identifier");
    return Next().text;
  }
  int Terminal(NodeKind kind, const std::string& lexeme) { return ast_.Add(kind, {}, lexeme, true); }
  int Node(NodeKind kind, std::initializer_list<int> children, std::string op = {}) {
    int id = ast_.Add(kind, std::move(op));
    for (int c : children) ast_.Attach(id, c);
    return id;
  }

  void RejectModifierKeyword() {
    const Token& t = Peek();
    if (t.kind != TokenKind::kKeyword) return;
    if (t.text == "abstract" || t.text == "native") Unsupported(t.text + " method");
    if (t.text == "default" || t.text == "transient" || t.text == "volatile" || t.text == "strictfp") {
      Unsupported(t.text + " modifier");
    }
    if (t.text == "class" || t.text == "interface" || t.text == "enum") Unsupported("type declaration");
  }

  int ParseMethod() {
    std::vector<int> kids;
    for (;;) {
      RejectModifierKeyword();
      if (Peek().kind == TokenKind::kKeyword && kModifiers.count(Peek().text)) {
        kids.push_back(Terminal(NodeKind::kModifier, Next().text));
      } else {
        break;
      }
    }
    if (IsOp("<")) Unsupported("generics");
    kids.push_back(ParseType(/*allow_void=*/true));
    if (IsOp("(")) Unsupported("constructor");
    kids.push_back(Terminal(NodeKind::kMethodName, ExpectIdent()));
    ExpectOp("(");
    if (!IsOp(")")) {
      kids.push_back(ParseParameter());
      while (IsOp(",")) {
        Next();
        kids.push_back(ParseParameter());
      }
    }
    ExpectOp(")");
    if (IsKw("throws")) Unsupported("throws clause");
    if (IsOp("[")) Unsupported("array");
    if (IsOp(";")) Unsupported("method without body");
    kids.push_back(ParseBlock());
    int id = ast_.Add(NodeKind::kMethodDeclaration);
    for (int k : kids) ast_.Attach(id, k);
    return id;
  }

  int ParseType(bool allow_void) {
    const Token& t = Peek();
    int id;
    if (t.kind == TokenKind::kKeyword && t.text == "void") {
      if (!allow_void) Fail("void is not allowed here");
      id = Terminal(NodeKind::kVoidType, Next().text);
    } else if (t.kind == TokenKind::kKeyword && kPrimitives.count(t.text)) {
      id = Terminal(NodeKind::kPrimitiveType, Next().text);
    } else if (t.kind == TokenKind::kIdentifier) {
      std::vector<int> parts = {Terminal(NodeKind::kClassType, Next().text)};
      while (IsOp(".") && Peek(1).kind == TokenKind::kIdentifier) {
        Next();
        parts.push_back(Terminal(NodeKind::kClassType, Next().text));
      }
      if (parts.size() == 1) {
        id = parts[0];
      } else {
        id = ast_.Add(NodeKind::kQualifiedType);
        for (int p : parts) ast_.Attach(id, p);
      }
    } else {
      Fail("expected type");
    }
    if (IsOp("<")) Unsupported("generics");
    if (IsOp("[")) Unsupported("array");
    if (IsOp("...")) Unsupported("varargs");
    return id;
  }

  int ParseParameter() {
    std::vector<int> kids;
    if (IsKw("final")) kids.push_back(Terminal(NodeKind::kModifier, Next().text));
    kids.push_back(ParseType(false));
    kids.push_back(Terminal(NodeKind::kVarName, ExpectIdent()));
    if (IsOp("[")) Unsupported("array");
    int id = ast_.Add(NodeKind::kParameter);
    for (int k : kids) ast_.Attach(id, k);
    return id;
  }

  int ParseBlock() {
    ExpectOp("{");
    std::vector<int> stmts;
    while (!IsOp("}")) {
      if (Peek().kind == TokenKind::kEnd) Fail("unbalanced braces");
      int s = ParseStatement();
      if (s >= 0) stmts.push_back(s);
    }
    Next();
    int id = ast_.Add(NodeKind::kBlockStmt);
    for (int s : stmts) ast_.Attach(id, s);
    return id;
  }

  // True when the upcoming tokens look like "Type name".
  bool IsLocalVarDeclStart() const {
    const Token& t = Peek();
    if (t.kind == TokenKind::kKeyword && (kPrimitives.count(t.text) || t.text == "final")) return true;
    if (t.kind != TokenKind::kIdentifier) return false;
    std::size_t i = 1;
    while (IsOp(".", i) && Peek(i + 1).kind == TokenKind::kIdentifier) i += 2;
    if (IsOp("<", i)) {
      // "a < b" is never a complete statement, so this is a generic type.
      return true;
    }
    if (IsOp("[", i) && IsOp("]", i + 1)) return true;
    return Peek(i).kind == TokenKind::kIdentifier;
  }

  int ParseStatement() {
    const Token& t = Peek();
    if (IsOp("{")) return ParseBlock();
    if (IsOp(";")) {
      Next();
      return -1;
    }
    if (t.kind == TokenKind::kKeyword) {
      if (t.text == "if") return ParseIf();
      if (t.text == "while") return ParseWhile();
      if (t.text == "for") return ParseFor();
      if (t.text == "return") return ParseReturn();
      if (t.text == "do") Unsupported("do-while");
      if (t.text == "try" || t.text == "switch" || t.text == "break" || t.text == "continue" || t.text == "throw" ||
          t.text == "synchronized" || t.text == "assert" || t.text == "class" || t.text == "interface" ||
          t.text == "enum") {
        Unsupported(t.text);
      }
    }
    if (t.kind == TokenKind::kIdentifier && IsOp(":", 1)) Unsupported("label");
    if (IsLocalVarDeclStart()) {
      int decl = ParseLocalVarDecl();
      ExpectOp(";");
      return decl;
    }
    int e = ParseExpression();
    ExpectOp(";");
    return Node(NodeKind::kExpressionStmt, {e});
  }

  int ParseLocalVarDecl() {
    std::vector<int> kids;
    if (IsKw("final")) kids.push_back(Terminal(NodeKind::kModifier, Next().text));
    kids.push_back(ParseType(false));
    kids.push_back(ParseDeclarator());
    while (IsOp(",")) {
      Next();
      kids.push_back(ParseDeclarator());
    }
    int id = ast_.Add(NodeKind::kLocalVarDecl);
    for (int k : kids) ast_.Attach(id, k);
    return id;
  }

  int ParseDeclarator() {
    int name = Terminal(NodeKind::kVarName, ExpectIdent());
    if (IsOp("[")) Unsupported("array");
    if (!IsOp("=")) return Node(NodeKind::kVarDeclarator, {name});
    Next();
    if (IsOp("{")) Unsupported("array");
    int init = ParseExpression();
    return Node(NodeKind::kVarDeclarator, {name, init});
  }

  int ParseParenCondition() {
    ExpectOp("(");
    int e = ParseExpression();
    ExpectOp(")");
    return e;
  }

  int ParseIf() {
    int kw = Terminal(NodeKind::kKeyword, Next().text);
    int cond = ParseParenCondition();
    int then_stmt = ParseStatement();
    int id = Node(NodeKind::kIfStmt, {kw, cond, then_stmt});
    if (IsKw("else")) {
      ast_.Attach(id, Terminal(NodeKind::kKeyword, Next().text));
      ast_.Attach(id, ParseStatement());
    }
    return id;
  }

  int ParseWhile() {
    int kw = Terminal(NodeKind::kKeyword, Next().text);
    int cond = ParseParenCondition();
    int body = ParseStatement();
    return Node(NodeKind::kWhileStmt, {kw, cond, body});
  }

  int ParseFor() {
    std::vector<int> kids = {Terminal(NodeKind::kKeyword, Next().text)};
    ExpectOp("(");
    // Enhanced for: "(Type name :".
    {
      std::size_t i = 0;
      if (IsKw("final")) ++i;
      if (Peek(i).kind == TokenKind::kIdentifier || Peek(i).kind == TokenKind::kKeyword) {
        ++i;
        while (IsOp(".", i) && Peek(i + 1).kind == TokenKind::kIdentifier) i += 2;
        if (Peek(i).kind == TokenKind::kIdentifier && IsOp(":", i + 1)) Unsupported("enhanced for");
      }
    }
    if (!IsOp(";")) {
      if (IsLocalVarDeclStart()) {
        kids.push_back(ParseLocalVarDecl());
      } else {
        kids.push_back(ParseExpression());
        while (IsOp(",")) {
          Next();
          kids.push_back(ParseExpression());
        }
      }
    }
    ExpectOp(";");
    if (!IsOp(";")) kids.push_back(ParseExpression());
    ExpectOp(";");
    if (!IsOp(")")) {
      kids.push_back(ParseExpression());
      while (IsOp(",")) {
        Next();
        kids.push_back(ParseExpression());
      }
    }
    ExpectOp(")");
    int body = ParseStatement();
    if (body >= 0) kids.push_back(body);
    int id = ast_.Add(NodeKind::kForStmt);
    for (int k : kids) ast_.Attach(id, k);
    return id;
  }

  int ParseReturn() {
    int kw = Terminal(NodeKind::kKeyword, Next().text);
    if (IsOp(";")) {
      Next();
      return Node(NodeKind::kReturnStmt, {kw});
    }
    int e = ParseExpression();
    ExpectOp(";");
    return Node(NodeKind::kReturnStmt, {kw, e});
  }

  int ParseExpression() { return ParseAssignment(); }

  int ParseAssignment() {
    int lhs = ParseOr();
    if (IsOp("?")) Unsupported("ternary");
    if (Peek().kind == TokenKind::kOperator) {
      if (kBitwise.count(Peek().text)) Unsupported("bitwise operator");
      auto it = kAssignOps.find(Peek().text);
      if (it != kAssignOps.end()) {
        NodeKind k = ast_.node(lhs).kind;
        if (k != NodeKind::kNameExpr && k != NodeKind::kFieldAccessExpr) Fail("invalid assignment target");
        Next();
        int rhs = ParseAssignment();
        return Node(NodeKind::kAssignExpr, {lhs, rhs}, it->second);
      }
    }
    return lhs;
  }

  using SubParser = int (Parser::*)();
  int ParseBinaryLevel(SubParser sub, const std::map<std::string, std::string>& ops) {
    int lhs = (this->*sub)();
    for (;;) {
      if (Peek().kind == TokenKind::kOperator && kBitwise.count(Peek().text) && Peek().text != "~") {
        Unsupported("bitwise operator");
      }
      if (IsKw("instanceof")) Unsupported("instanceof");
      if (Peek().kind != TokenKind::kOperator) return lhs;
      auto it = ops.find(Peek().text);
      if (it == ops.end()) return lhs;
      Next();
      int rhs = (this->*sub)();
      lhs = Node(NodeKind::kBinaryExpr, {lhs, rhs}, it->second);
    }
  }

  int ParseOr() { return ParseBinaryLevel(&Parser::ParseAnd, {{"||", "or"}}); }
  int ParseAnd() { return ParseBinaryLevel(&Parser::ParseEquality, {{"&&", "and"}}); }
  int ParseEquality() {
    return ParseBinaryLevel(&Parser::ParseRelational, {{"==", "equals"}, {"!=", "notEquals"}});
  }
  int ParseRelational() {
    return ParseBinaryLevel(&Parser::ParseAdditive,
                            {{"<", "less"}, {">", "greater"}, {"<=", "lessEquals"}, {">=", "greaterEquals"}});
  }
  int ParseAdditive() { return ParseBinaryLevel(&Parser::ParseMultiplicative, {{"+", "plus"}, {"-", "minus"}}); }
  int ParseMultiplicative() {
    return ParseBinaryLevel(&Parser::ParseUnary, {{"*", "times"}, {"/", "divide"}, {"%", "remainder"}});
  }

  int ParseUnary() {
    if (Peek().kind == TokenKind::kOperator) {
      const std::string& op = Peek().text;
      std::string name;
      if (op == "!") name = "not";
      if (op == "-") name = "negative";
      if (op == "++") name = "preIncrement";
      if (op == "--") name = "preDecrement";
      if (op == "~") Unsupported("bitwise operator");
      if (op == "+") Unsupported("unary plus");
      if (!name.empty()) {
        Next();
        int operand = ParseUnary();
        if ((name == "preIncrement" || name == "preDecrement") && ast_.node(operand).kind != NodeKind::kNameExpr &&
            ast_.node(operand).kind != NodeKind::kFieldAccessExpr) {
          Fail("invalid increment target");
        }
        return Node(NodeKind::kUnaryExpr, {operand}, name);
      }
    }
    return ParsePostfix();
  }

  int ParsePostfix() {
    int e = ParsePrimary();
    for (;;) {
      if (IsOp(".")) {
        Next();
        if (IsKw("new")) Unsupported("inner class creation");
        if (IsKw("this") || IsKw("class")) Unsupported("qualified " + Peek().text);
        if (IsOp("<")) Unsupported("generics");
        std::string name = ExpectIdent();
        if (IsOp("(")) {
          int call = Node(NodeKind::kMethodCallExpr, {e, Terminal(NodeKind::kCallName, name)});
          ParseArguments(call);
          e = call;
        } else {
          e = Node(NodeKind::kFieldAccessExpr, {e, Terminal(NodeKind::kFieldName, name)});
        }
      } else if (IsOp("[")) {
        Unsupported("array");
      } else if (IsOp("::")) {
        Unsupported("method reference");
      } else if (IsOp("++") || IsOp("--")) {
        NodeKind k = ast_.node(e).kind;
        if (k != NodeKind::kNameExpr && k != NodeKind::kFieldAccessExpr) Fail("invalid increment target");
        std::string name = Next().text == "++" ? "postIncrement" : "postDecrement";
        return Node(NodeKind::kUnaryExpr, {e}, name);
      } else {
        return e;
      }
    }
  }

  void ParseArguments(int call) {
    ExpectOp("(");
    if (!IsOp(")")) {
      ast_.Attach(call, ParseExpression());
      while (IsOp(",")) {
        Next();
        ast_.Attach(call, ParseExpression());
      }
    }
    ExpectOp(")");
  }

  // Index of the ')' matching the '(' at Peek(ahead), or 0 if unmatched.
  std::size_t MatchingParen(std::size_t ahead) const {
    int depth = 0;
    for (std::size_t i = ahead; Peek(i).kind != TokenKind::kEnd; ++i) {
      if (IsOp("(", i)) ++depth;
      if (IsOp(")", i) && --depth == 0) return i;
    }
    return 0;
  }

  bool StartsUnaryNotPlusMinus(std::size_t ahead) const {
    const Token& t = Peek(ahead);
    switch (t.kind) {
      case TokenKind::kIdentifier:
      case TokenKind::kIntLiteral:
      case TokenKind::kFloatLiteral:
      case TokenKind::kStringLiteral:
      case TokenKind::kCharLiteral:
      case TokenKind::kBoolLiteral:
      case TokenKind::kNullLiteral:
        return true;
      case TokenKind::kKeyword:
        return t.text == "this" || t.text == "new" || t.text == "super";
      case TokenKind::kOperator:
        return t.text == "(" || t.text == "!" || t.text == "~";
      default:
        return false;
    }
  }

  int ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kIntLiteral: return Terminal(NodeKind::kIntegerLiteral, Next().text);
      case TokenKind::kFloatLiteral: return Terminal(NodeKind::kDoubleLiteral, Next().text);
      case TokenKind::kStringLiteral: return Terminal(NodeKind::kStringLiteral, Next().text);
      case TokenKind::kCharLiteral: return Terminal(NodeKind::kCharLiteral, Next().text);
      case TokenKind::kBoolLiteral: return Terminal(NodeKind::kBooleanLiteral, Next().text);
      case TokenKind::kNullLiteral: return Terminal(NodeKind::kNullLiteral, Next().text);
      case TokenKind::kIdentifier: {
        if (IsOp("->", 1)) Unsupported("lambda");
        std::string name = Next().text;
        if (IsOp("(")) {
          int call = Node(NodeKind::kMethodCallExpr, {Terminal(NodeKind::kCallName, name)});
          ParseArguments(call);
          return call;
        }
        return Terminal(NodeKind::kNameExpr, name);
      }
      case TokenKind::kKeyword: {
        if (t.text == "this") {
          if (IsOp("(", 1)) Unsupported("constructor call");
          return Terminal(NodeKind::kThisExpr, Next().text);
        }
        if (t.text == "super") Unsupported("super");
        if (t.text == "new") return ParseCreation();
        if (t.text == "switch") Unsupported("switch");
        if (kPrimitives.count(t.text) || t.text == "void") Unsupported("class literal");
        Fail("unexpected keyword");
      }
      case TokenKind::kOperator: {
        if (t.text == "(") {
          std::size_t close = MatchingParen(0);
          if (close == 0) Fail("unbalanced parentheses");
          if (IsOp("->", close + 1)) Unsupported("lambda");
          if (Peek(1).kind == TokenKind::kKeyword && kPrimitives.count(Peek(1).text)) Unsupported("cast");
          Next();
          int inner = ParseExpression();
          ExpectOp(")");
          NodeKind k = ast_.node(inner).kind;
          if ((k == NodeKind::kNameExpr || k == NodeKind::kFieldAccessExpr) && StartsUnaryNotPlusMinus(0)) {
            Unsupported("cast");
          }
          return Node(NodeKind::kEnclosedExpr, {inner});
        }
        Fail("expected expression");
      }
      default:
        Fail("expected expression");
    }
  }

  int ParseCreation() {
    int kw = Terminal(NodeKind::kKeyword, Next().text);
    if (Peek().kind == TokenKind::kKeyword && kPrimitives.count(Peek().text)) Unsupported("array");
    int type = ParseType(false);
    int id = Node(NodeKind::kObjectCreationExpr, {kw, type});
    ParseArguments(id);
    if (IsOp("{")) Unsupported("anonymous class");
    return id;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Ast ast_;
};

}  // namespace

Ast ParseJavaMethod(std::string_view source) { return Parser(LexJava(source)).Run(); }

}  // namespace prigen::astpaths
