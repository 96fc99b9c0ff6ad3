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

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prigen::astpaths {

enum class NodeKind {
  kMethodDeclaration,
  kModifier,
  kPrimitiveType,
  kVoidType,
  kClassType,
  kQualifiedType,
  kMethodName,
  kParameter,
  kVarName,
  kBlockStmt,
  kLocalVarDecl,
  kVarDeclarator,
  kExpressionStmt,
  kReturnStmt,
  kIfStmt,
  kWhileStmt,
  kForStmt,
  kKeyword,
  kNameExpr,
  kFieldAccessExpr,
  kFieldName,
  kMethodCallExpr,
  kCallName,
  kObjectCreationExpr,
  kBinaryExpr,
  kUnaryExpr,
  kAssignExpr,
  kEnclosedExpr,
  kIntegerLiteral,
  kDoubleLiteral,
  kStringLiteral,
  kCharLiteral,
  kBooleanLiteral,
  kNullLiteral,
  kThisExpr,
};

std::string_view NodeKindName(NodeKind kind);

struct AstNode {
  NodeKind kind = NodeKind::kBlockStmt;
  std::string op;      // operator variant, empty if none
  std::string lexeme;  // terminals only
  bool terminal = false;
  int parent = -1;
  int child_index = 0;
  int depth = 0;
  std::vector<int> children;
};

class Ast {
 public:
  const std::vector<AstNode>& nodes() const { return nodes_; }
  const AstNode& node(int id) const { return nodes_[id]; }
  int root() const { return root_; }
  // Terminal ids in source order.
  const std::vector<int>& terminals() const { return terminals_; }

  // "Kind" or "Kind:op".
  std::string KindLabel(int id) const;

  int Add(NodeKind kind, std::string op = {}, std::string lexeme = {}, bool terminal = false);
  void Attach(int parent, int child);
  // Fixes root, depths and terminal order. Called once by the parser.
  void Finalize(int root);

 private:
  std::vector<AstNode> nodes_;
  std::vector<int> terminals_;
  int root_ = -1;
};

// Every label the parser can produce.
const std::set<std::string>& AllKindLabels();

}  // namespace prigen::astpaths
