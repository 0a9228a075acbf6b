// Executable meta-level oracle for the tree/parenthesization combinatorics:
// binary tree enumeration, the tree <-> balanced-parentheses bijection, the
// balance predicate, and the list-encoding counting check.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tltt::comb {

struct BinTree;
using TreePtr = std::shared_ptr<const BinTree>;

// Leaf when both children are null; otherwise an internal node.
struct BinTree {
  TreePtr left, right;
  bool is_leaf() const { return !left; }
};

TreePtr leaf();
TreePtr node(TreePtr l, TreePtr r);
bool tree_eq(const TreePtr& a, const TreePtr& b);
int internal_nodes(const TreePtr& t);

enum class Paren : uint8_t { Open, Close };
using ParenString = std::vector<Paren>;

ParenString parens_from_string(const std::string& s);  // "()(" etc.
std::string parens_to_display(const ParenString& s);

// All distinct trees with exactly n internal nodes, ordered by
// (left-subtree size, recursive order). n <= 12.
std::vector<TreePtr> enum_trees(int n);

// Representation: a leaf is the empty string; node(t1,t2) is rep(t2) ++
// "(" ++ rep(t1) ++ ")".
ParenString tree_to_parens(const TreePtr& t);

// Inverse of tree_to_parens; requires is_balanced(s, 0).
TreePtr parens_to_tree(const ParenString& s);

// True iff prepending n opening parentheses to s yields a balanced string.
bool is_balanced(const ParenString& s, int n);

// All balanced strings of length 2n, by direct scan over all strings
// (independent of the tree enumeration).
std::vector<ParenString> enum_balanced(int n);

// Lemma-style counting check for lists over a finite alphabet: the number
// of lists of length <= max_len equals sum of size^n, and the explicit
// length-indexed round-trips are identities on every enumerated value.
bool list_encoding_check(int alphabet_size, int max_len);

// Catalan numbers via the recurrence, used as an arithmetic cross-check.
std::vector<uint64_t> catalan_prefix(int n);

}  // namespace tltt::comb
