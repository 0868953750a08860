// Copyright 2026 The dpdfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dot_check.hpp"

#include <gtest/gtest.h>

TEST(DotCheck, AcceptsTheEmittedSubset) {
  const auto r = dotcheck::check(
      "digraph g {\n rankdir=LR;\n \"--\" [shape=circle];\n A;\n"
      " \"--\" -> A [label=\"3\", color=red];\n A -> \"--\" [label=\"x\\ny\"]\n}\n");
  ASSERT_TRUE(r.ok) << r.error;
  EXPECT_EQ(r.graph.nodes, (std::set<std::string>{"--", "A"}));
  ASSERT_EQ(r.graph.edges.size(), 2u);
  EXPECT_EQ(r.graph.edge_labels[1], "x\ny");
}

TEST(DotCheck, RejectsBrokenInput) {
  EXPECT_FALSE(dotcheck::check("graph g { a -- b }").ok);
  EXPECT_FALSE(dotcheck::check("digraph { a -> }").ok);
  EXPECT_FALSE(dotcheck::check("digraph { a -> b [label=] }").ok);
  EXPECT_FALSE(dotcheck::check("digraph { \"open ").ok);
  EXPECT_FALSE(dotcheck::check("digraph { a -> b ").ok);
  EXPECT_FALSE(dotcheck::check("digraph { } extra").ok);
}
