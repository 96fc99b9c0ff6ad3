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

#include "prigen/astpaths/java_ast.h"

#include <utility>

namespace prigen::astpaths {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kMethodDeclaration: return "MethodDeclaration";
    case NodeKind::kModifier: return "Modifier";
    case NodeKind::kPrimitiveType: return "PrimitiveType";
    case NodeKind::kVoidType: return "VoidType";
    case NodeKind::kClassType: return "ClassType";
    case NodeKind::kQualifiedType: return "QualifiedType";
    case NodeKind::kMethodName: return "MethodName";
    case NodeKind::kParameter: return "Parameter";
    case NodeKind::kVarName: return "VarName";
    case NodeKind::kBlockStmt: return "BlockStmt";
    case NodeKind::kLocalVarDecl: return "LocalVarDecl";
    case NodeKind::kVarDeclarator: return "VarDeclarator";
    case NodeKind::kExpressionStmt: return "ExpressionStmt";
    case NodeKind::kReturnStmt: return "ReturnStmt";
    case NodeKind::kIfStmt: return "IfStmt";
    case NodeKind::kWhileStmt: return "WhileStmt";
    case NodeKind::kForStmt: return "ForStmt";
    case NodeKind::kKeyword: return "Keyword";
    case NodeKind::kNameExpr: return "NameExpr";
    case NodeKind::kFieldAccessExpr: return "FieldAccessExpr";
    case NodeKind::kFieldName: return "FieldName";
    case NodeKind::kMethodCallExpr: return "MethodCallExpr";
    case NodeKind::kCallName: return "CallName";
    case NodeKind::kObjectCreationExpr: return "ObjectCreationExpr";
    case NodeKind::kBinaryExpr: return "BinaryExpr";
    case NodeKind::kUnaryExpr: return "UnaryExpr";
    case NodeKind::kAssignExpr: return "AssignExpr";
    case NodeKind::kEnclosedExpr: return "EnclosedExpr";
    case NodeKind::kIntegerLiteral: return "IntegerLiteral";
    case NodeKind::kDoubleLiteral: return "DoubleLiteral";
    case NodeKind::kStringLiteral: return "StringLiteral";
    case NodeKind::kCharLiteral: return "CharLiteral";
    case NodeKind::kBooleanLiteral: return "BooleanLiteral";
    case NodeKind::kNullLiteral: return "NullLiteral";
    case NodeKind::kThisExpr: return "ThisExpr";
  }
  return "Unknown";
}

std::string Ast::KindLabel(int id) const {
  const AstNode& n = nodes_[id];
  std::string label(NodeKindName(n.kind));
  if (!n.op.empty()) label += ":" + n.op;
  return label;
}

int Ast::Add(NodeKind kind, std::string op, std::string lexeme, bool terminal) {
  AstNode n;
  n.kind = kind;
  n.op = std::move(op);
  n.lexeme = std::move(lexeme);
  n.terminal = terminal;
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

void Ast::Attach(int parent, int child) {
  if (child < 0) return;
  nodes_[child].parent = parent;
  nodes_[child].child_index = static_cast<int>(nodes_[parent].children.size());
  nodes_[parent].children.push_back(child);
}

void Ast::Finalize(int root) {
  root_ = root;
  terminals_.clear();
  std::vector<int> stack = {root};
  nodes_[root].depth = 0;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const AstNode& n = nodes_[id];
    if (n.terminal) terminals_.push_back(id);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      nodes_[*it].depth = n.depth + 1;
      stack.push_back(*it);
    }
  }
}

const std::set<std::string>& AllKindLabels() {
  static const std::set<std::string> labels = [] {
    std::set<std::string> s;
    for (int k = 0; k <= static_cast<int>(NodeKind::kThisExpr); ++k) {
      s.insert(std::string(NodeKindName(static_cast<NodeKind>(k))));
    }
    for (const char* op : {"or", "and", "equals", "notEquals", "less", "greater", "lessEquals", "greaterEquals",
                           "plus", "minus", "times", "divide", "remainder"}) {
      s.insert(std::string("BinaryExpr:") + op);
    }
    for (const char* op : {"not", "negative", "preIncrement", "preDecrement", "postIncrement", "postDecrement"}) {
      s.insert(std::string("UnaryExpr:") + op);
    }
    for (const char* op : {"assign", "plus", "minus", "times", "divide", "remainder"}) {
      s.insert(std::string("AssignExpr:") + op);
    }
    return s;
  }();
  return labels;
}

}  // namespace prigen::astpaths
