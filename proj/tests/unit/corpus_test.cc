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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "corpus_fixtures.h"
#include "java_generator.h"
#include "prigen/common/error.h"
#include "prigen/common/rng.h"
#include "prigen/corpus/corpus.h"
#include "prigen/corpus/dataset_format.h"

namespace prigen::corpus {
namespace {

TEST(DedupTest, IdenticalMethodsKeepFirst) {
  std::vector<std::string> texts = {"int f() { return 1; }", "int f() { return 1; }"};
  DedupResult r = Dedup(texts, 5, 0.8);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0}));
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0], std::make_pair(std::size_t{1}, std::size_t{0}));
}

TEST(DedupTest, DisjointMethodsBothKept) {
  std::vector<std::string> texts = {"int f() { return 1; }", "void g(String s) { log(s); }"};
  EXPECT_EQ(Dedup(texts, 5, 0.8).kept.size(), 2u);
}

TEST(DedupTest, PlantedDuplicatesMatchBruteForce) {
  auto corpus = testing::PlantedDuplicateCorpus();
  DedupResult r = Dedup(corpus.texts, 5, 0.8);
  std::set<std::size_t> removed;
  for (const auto& [i, w] : r.removed) removed.insert(i);
  EXPECT_EQ(removed, corpus.planted);
  EXPECT_EQ(removed, testing::BruteDedup(corpus.texts, 5, 0.8));
}

TEST(DedupTest, JaccardAgreesWithBruteForce) {
  std::vector<std::string> texts;
  for (uint64_t s = 0; s < 30; ++s) texts.push_back(testing::RandomJavaMethod(s));
  auto sets = Shingles(texts, 5);
  for (std::size_t a = 0; a < texts.size(); ++a) {
    for (std::size_t b = 0; b < texts.size(); ++b) {
      ASSERT_NEAR(Jaccard(sets[a], sets[b]), testing::BruteJaccard(texts[a], texts[b], 5), 1e-12);
    }
  }
}

TEST(DedupProperty, PartitionAndFixedPoint) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> texts;
    const int n = 2 + static_cast<int>(rng.Below(12));
    for (int i = 0; i < n; ++i) {
      if (!texts.empty() && rng.Bernoulli(0.3)) {
        texts.push_back(texts[rng.Below(texts.size())]);
      } else {
        texts.push_back(testing::RandomJavaMethod(rng.Next()));
      }
    }
    DedupResult r = Dedup(texts, 5, 0.8);
    std::vector<std::size_t> all = r.kept;
    for (const auto& [i, w] : r.removed) {
      all.push_back(i);
      EXPECT_LT(w, i);
      EXPECT_TRUE(std::binary_search(r.kept.begin(), r.kept.end(), w));
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(texts.size());
    std::iota(expect.begin(), expect.end(), 0);
    EXPECT_EQ(all, expect);
    ASSERT_FALSE(r.kept.empty());
    EXPECT_EQ(r.kept.front(), 0u);
    std::vector<std::string> kept;
    for (auto i : r.kept) kept.push_back(texts[i]);
    EXPECT_TRUE(Dedup(kept, 5, 0.8).removed.empty());
  }
}

TEST(DedupTest, RejectsBadParameters) {
  std::vector<std::string> texts = {"a"};
  EXPECT_THROW(Dedup(texts, 0, 0.8), ArgumentError);
  EXPECT_THROW(Dedup(texts, 5, 0.0), ArgumentError);
  EXPECT_THROW(Dedup(texts, 5, 1.5), ArgumentError);
}

TEST(ObfuscationTest, HandCounts) {
  for (const auto& c : testing::ObfuscationCases()) {
    EXPECT_EQ(ObfuscationScore(c.source), static_cast<double>(c.short_identifiers) / c.identifiers) << c.source;
  }
  EXPECT_EQ(ObfuscationScore("long scale(long base) { long result = base * factor; return result + ab + cd; }"), 0.25);
  EXPECT_EQ(ObfuscationScore("void f(int a, int b) { int c = a + b; }"), 1.0);
  EXPECT_EQ(ObfuscationScore("void update(int count) { total = count; }"), 0.0);
  EXPECT_EQ(ObfuscationScore(""), 0.0);
}

TEST(ObfuscationTest, FilterKeepsAtOrBelowThreshold) {
  std::vector<std::string> texts = {"void update(int count) { total = count; }",
                                    "long scale(long base) { long result = base * factor; return result + ab + cd; }",
                                    "void f(int a, int b) { int c = a + b; }"};
  EXPECT_EQ(FilterObfuscated(texts, 0.5), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(FilterObfuscated({}, 0.5).empty());
}

TEST(SplitTest, Arithmetic) {
  SplitIndices s = Split(10, {0.9, 0.1, 0.0, 7});
  EXPECT_EQ(s.train.size(), 9u);
  EXPECT_EQ(s.validation.size(), 1u);
  EXPECT_EQ(s.test.size(), 0u);
  SplitIndices again = Split(10, {0.9, 0.1, 0.0, 7});
  EXPECT_EQ(s.train, again.train);
  EXPECT_EQ(s.validation, again.validation);
  SplitIndices empty = Split(0, {0.8, 0.1, 0.1, 7});
  EXPECT_TRUE(empty.train.empty() && empty.validation.empty() && empty.test.empty());
  EXPECT_THROW(Split(10, {0.5, 0.1, 0.1, 7}), ArgumentError);
  EXPECT_THROW(Split(10, {1.2, -0.2, 0.0, 7}), ArgumentError);
}

TEST(SplitProperty, PermutationPartition) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.Below(300);
    const double val = rng.Below(5) / 10.0, test = rng.Below(5) / 10.0;
    SplitSpec spec{1.0 - val - test, val, test, rng.Next()};
    SplitIndices s = Split(n, spec);
    std::vector<std::size_t> all;
    for (const auto* part : {&s.train, &s.validation, &s.test}) all.insert(all.end(), part->begin(), part->end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    ASSERT_EQ(all, expect);
    EXPECT_EQ(s.validation.size(), static_cast<std::size_t>(std::floor(n * val + 1e-9)));
    EXPECT_EQ(s.test.size(), static_cast<std::size_t>(std::floor(n * test + 1e-9)));
  }
}

TEST(CaptionNormalizeTest, LowercasesAndSplits) {
  EXPECT_EQ(NormalizeCaption("Sends the user's Location!"),
            (std::vector<std::string>{"sends", "the", "user", "s", "location"}));
}

TEST(DatasetFormatTest, RoundTrip) {
  DatasetLine line;
  line.target = {"get", "name"};
  line.contexts.push_back({{"int"}, {"PrimitiveType^", "MethodDeclaration_", "MethodName_"}, {"get", "name"}});
  line.contexts.push_back({{"this"}, {"ThisExpr^", "FieldAccessExpr_", "FieldName_"}, {"name"}});
  const std::string text = FormatDatasetLine(line);
  EXPECT_EQ(text, "get|name int,PrimitiveType^|MethodDeclaration_|MethodName_,get|name "
                  "this,ThisExpr^|FieldAccessExpr_|FieldName_,name");
  EXPECT_EQ(ParseDatasetLine(text), line);
}

TEST(DatasetFormatTest, EmptyTargetAndErrors) {
  DatasetLine line;
  EXPECT_EQ(FormatDatasetLine(line), "_");
  EXPECT_TRUE(ParseDatasetLine("_").target.empty());
  EXPECT_THROW(ParseDatasetLine(""), ParseError);
  EXPECT_THROW(ParseDatasetLine("a b,c"), ParseError);
  EXPECT_THROW(ParseDatasetLine("a b,,c"), ParseError);
  line.target = {"has space"};
  EXPECT_THROW(FormatDatasetLine(line), ValidationError);
  line.target = {"pipe|in"};
  EXPECT_THROW(FormatDatasetLine(line), ValidationError);
}

}  // namespace
}  // namespace prigen::corpus
