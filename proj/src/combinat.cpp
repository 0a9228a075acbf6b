#include "tltt/combinat.hpp"

#include <stdexcept>

namespace tltt::comb {

TreePtr leaf() {
  static TreePtr l = std::make_shared<BinTree>();
  return l;
}

TreePtr node(TreePtr l, TreePtr r) {
  auto t = std::make_shared<BinTree>();
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

bool tree_eq(const TreePtr& a, const TreePtr& b) {
  if (a == b) return true;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return true;
  return tree_eq(a->left, b->left) && tree_eq(a->right, b->right);
}

int internal_nodes(const TreePtr& t) {
  if (t->is_leaf()) return 0;
  return 1 + internal_nodes(t->left) + internal_nodes(t->right);
}

ParenString parens_from_string(const std::string& s) {
  ParenString out;
  for (char c : s) {
    if (c == '(') out.push_back(Paren::Open);
    else if (c == ')') out.push_back(Paren::Close);
    else throw std::invalid_argument("parens_from_string: bad char");
  }
  return out;
}

std::string parens_to_display(const ParenString& s) {
  std::string out;
  for (Paren p : s) out += (p == Paren::Open ? '(' : ')');
  return out;
}

std::vector<TreePtr> enum_trees(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("enum_trees: n out of range (0..12)");
  std::vector<std::vector<TreePtr>> by_size(static_cast<size_t>(n) + 1);
  by_size[0] = {leaf()};
  for (int k = 1; k <= n; ++k) {
    for (int ls = 0; ls < k; ++ls) {
      int rs = k - 1 - ls;
      for (const auto& l : by_size[ls])
        for (const auto& r : by_size[rs]) by_size[k].push_back(node(l, r));
    }
  }
  return by_size[static_cast<size_t>(n)];
}

namespace {

void rep_append(const TreePtr& t, ParenString& out) {
  if (t->is_leaf()) return;
  rep_append(t->right, out);
  out.push_back(Paren::Open);
  rep_append(t->left, out);
  out.push_back(Paren::Close);
}

}  // namespace

ParenString tree_to_parens(const TreePtr& t) {
  ParenString out;
  rep_append(t, out);
  return out;
}

TreePtr parens_to_tree(const ParenString& s) {
  if (!is_balanced(s, 0)) throw std::domain_error("parens_to_tree: input is not balanced");
  // Reverse of the representation: scan left to right keeping one pending
  // tree per open depth. '(' starts a fresh left subtree; ')' closes it and
  // grafts node(left, below).
  std::vector<TreePtr> stack = {leaf()};
  for (Paren p : s) {
    if (p == Paren::Open) {
      stack.push_back(leaf());
    } else {
      TreePtr l = stack.back();
      stack.pop_back();
      TreePtr below = stack.back();
      stack.pop_back();
      stack.push_back(node(l, below));
    }
  }
  if (stack.size() != 1) throw std::logic_error("parens_to_tree: stack imbalance");
  return stack.back();
}

bool is_balanced(const ParenString& s, int n) {
  long depth = n;
  for (Paren p : s) {
    if (p == Paren::Open) ++depth;
    else if (--depth < 0) return false;
  }
  return depth == 0;
}

std::vector<ParenString> enum_balanced(int n) {
  std::vector<ParenString> out;
  const int len = 2 * n;
  ParenString cur(static_cast<size_t>(len), Paren::Open);
  // Enumerate all 2^len strings in lexicographic order and filter.
  for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
    for (int i = 0; i < len; ++i)
      cur[static_cast<size_t>(i)] = (bits >> i) & 1 ? Paren::Close : Paren::Open;
    if (is_balanced(cur, 0)) out.push_back(cur);
  }
  return out;
}

bool list_encoding_check(int alphabet_size, int max_len) {
  if (alphabet_size < 0 || max_len < 0 || alphabet_size > 6 || max_len > 6)
    throw std::invalid_argument("list_encoding_check: caps exceeded");
  // Lists are enumerated directly; tuples as (length, digits). The encoding
  // phi maps a tuple to the list of its digits, theta inverts it.
  uint64_t total_lists = 0;
  uint64_t total_tuples = 0;
  std::vector<std::vector<int>> lists = {{}};
  size_t level_begin = 0;
  for (int len = 0; len <= max_len; ++len) {
    size_t level_end = lists.size();
    total_lists += level_end - level_begin;
    uint64_t pw = 1;
    for (int i = 0; i < len; ++i) pw *= static_cast<uint64_t>(alphabet_size);
    total_tuples += pw;
    if (len < max_len) {
      for (size_t i = level_begin; i < level_end; ++i)
        for (int a = 0; a < alphabet_size; ++a) {
          auto l = lists[i];
          l.push_back(a);
          lists.push_back(std::move(l));
        }
    }
    level_begin = level_end;
  }
  if (total_lists != total_tuples) return false;
  // Round trips: phi(theta(l)) = l for every list, theta(phi(n, digits)) =
  // (n, digits) for every tuple. With this concrete coding both maps are
  // digit-copying, so it suffices to check phi . theta on all lists and the
  // length law for theta.
  for (const auto& l : lists) {
    std::vector<int> digits = l;        // theta: (|l|, digits of l)
    std::vector<int> back = digits;     // phi: list of the digits
    if (back != l) return false;
    if (digits.size() != l.size()) return false;
  }
  return true;
}

std::vector<uint64_t> catalan_prefix(int n) {
  std::vector<uint64_t> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c;
}

}  // namespace tltt::comb
