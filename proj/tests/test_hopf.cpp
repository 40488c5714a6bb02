#include <doctest.h>

#include <random>

#include "renorm/errors.hpp"
#include "renorm/hopf_basis.hpp"

using namespace renorm;

namespace {

RootedTree tree(const char* code) { return RootedTree::parse(code); }
Forest forest(const char* code) { return Forest::parse(code); }

HopfTensor tensor(std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
  HopfTensor t;
  for (const auto& [l, r, c] : terms) t.add(forest(l), forest(r), c);
  return t;
}

// Delta(B+(F)) = B+(F) (x) 1 + (id (x) B+) Delta(F).
HopfTensor coproduct_by_grafting(const RootedTree& t) {
  HopfTensor children_delta;
  children_delta.add(Forest{}, Forest{}, 1);
  for (const auto& child : t.children()) children_delta = children_delta * coproduct(child);
  HopfTensor out;
  out.add(Forest(t), Forest{}, 1);
  for (const auto& [k, c] : children_delta.terms()) out.add(k.first, Forest(RootedTree(k.second.trees())), c);
  return out;
}

// Right-handed recursion S(t) = -t - sum t' S(t'').
HopfElement antipode_right(const Forest& f) {
  if (f.is_unit()) return HopfElement::unit();
  if (!f.is_tree()) {
    HopfElement r = HopfElement::unit();
    for (const auto& t : f.trees()) r = r * antipode_right(Forest(t));
    return r;
  }
  HopfElement s = -HopfElement(f);
  const HopfTensor delta = coproduct(f);
  for (const auto& [k, c] : delta.terms()) {
    if (k.first.is_unit() || k.second.is_unit()) continue;
    s -= HopfElement(k.first, c) * antipode_right(k.second);
  }
  return s;
}

}  // namespace

TEST_SUITE("hopf-model") {
  TEST_CASE("tree codes") {
    CHECK(RootedTree().code() == "[]");
    CHECK(RootedTree::ladder(2).code() == "[[]]");
    CHECK(RootedTree::ladder(4).code() == "[[[[]]]]");
    CHECK(RootedTree::ladder(3).is_ladder());
    CHECK_FALSE(tree("[[],[]]").is_ladder());
    CHECK(tree("[[[]],[]]") == tree("[[],[[]]]"));
    CHECK(tree("[[[]],[]]").code() == "[[],[[]]]");
    CHECK(tree("[[],[]]").degree() == 3);
    CHECK_THROWS_AS(RootedTree::parse("[[]"), ParseError);
    CHECK_THROWS_AS(RootedTree::parse("[]x"), ParseError);
    CHECK(forest("[[]],[]").code() == "[],[[]]");
    CHECK(forest("").is_unit());
    CHECK(forest("1").is_unit());
  }

  TEST_CASE("product") {
    const HopfElement l1(forest("[]"));
    const HopfElement l2(forest("[[]]"));
    CHECK(l1 * l1 == HopfElement(forest("[],[]")));
    CHECK((l1 * l1).max_degree() == 2);
    CHECK(HopfElement::unit() * l2 == l2);
    CHECK((l1 + l2) * l1 == HopfElement(forest("[],[]")) + HopfElement(forest("[],[[]]")));
  }

  TEST_CASE("coproduct examples") {
    CHECK(coproduct(tree("[]")) == tensor({{"[]", "", 1}, {"", "[]", 1}}));
    CHECK(coproduct(tree("[[]]")) == tensor({{"[[]]", "", 1}, {"", "[[]]", 1}, {"[]", "[]", 1}}));
    CHECK(coproduct(tree("[[],[]]")) ==
          tensor({{"[[],[]]", "", 1}, {"", "[[],[]]", 1}, {"[]", "[[]]", 2}, {"[],[]", "[]", 1}}));
  }

  TEST_CASE("coproduct agrees with the grafting recursion") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& t : trees_of_degree(n)) {
        CAPTURE(t.code());
        CHECK(coproduct(t) == coproduct_by_grafting(t));
      }
    }
  }

  TEST_CASE("ladder coproduct closed form") {
    for (int n = 1; n <= 8; ++n) {
      HopfTensor expected;
      for (int k = 0; k <= n; ++k) {
        const Forest left = k == 0 ? Forest{} : Forest(RootedTree::ladder(k));
        const Forest right = k == n ? Forest{} : Forest(RootedTree::ladder(n - k));
        expected.add(left, right, 1);
      }
      CHECK(coproduct(RootedTree::ladder(n)) == expected);
    }
  }

  TEST_CASE("coproduct is graded") {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& f : enumerate_basis(n, TreeFamily::RootedTrees)) {
        const HopfTensor delta = coproduct(f);
        for (const auto& [k, c] : delta.terms()) CHECK(k.first.degree() + k.second.degree() == n);
      }
    }
  }

  TEST_CASE("antipode examples") {
    CHECK(antipode(forest("[]")) == -HopfElement(forest("[]")));
    CHECK(antipode(forest("[[]]")) == -HopfElement(forest("[[]]")) + HopfElement(forest("[],[]")));
    CHECK(antipode(forest("[],[]")) == HopfElement(forest("[],[]")));
    CHECK(antipode(Forest{}) == HopfElement::unit());
  }

  TEST_CASE("antipode agrees with the right-handed recursion and preserves degree") {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& f : enumerate_basis(n, TreeFamily::RootedTrees)) {
        CAPTURE(f.code());
        const HopfElement s = antipode(f);
        CHECK(s == antipode_right(f));
        CHECK(s.component(n) == s);
      }
    }
  }

  TEST_CASE("basis enumeration") {
    CHECK(enumerate_basis(0, TreeFamily::RootedTrees) == std::vector<Forest>{Forest{}});
    CHECK(enumerate_basis(2, TreeFamily::RootedTrees) == std::vector<Forest>{forest("[[]]"), forest("[],[]")});
    CHECK(enumerate_basis(3, TreeFamily::Ladders) ==
          std::vector<Forest>{forest("[[[]]]"), forest("[],[[]]"), forest("[],[],[]")});
    // Rooted trees with n vertices, and forests of degree n = trees of degree n + 1.
    const std::vector<std::size_t> trees = {1, 1, 2, 4, 9, 20, 48, 115};
    for (int n = 1; n <= 8; ++n) CHECK(trees_of_degree(n).size() == trees[static_cast<std::size_t>(n - 1)]);
    for (int n = 0; n <= 6; ++n) {
      CHECK(enumerate_basis(n, TreeFamily::RootedTrees).size() == trees[static_cast<std::size_t>(n)]);
    }
    // Ladder forests are partitions.
    const std::vector<std::size_t> partitions = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
      CHECK(enumerate_basis(n, TreeFamily::Ladders).size() == partitions[static_cast<std::size_t>(n)]);
    }
  }

  TEST_CASE("basis tables match the element-level structure maps") {
    const BasisPtr basis = HopfBasis::get(TreeFamily::RootedTrees, 5);
    CHECK(basis == HopfBasis::get(TreeFamily::RootedTrees, 5));
    CHECK(basis->size() == 37);
    for (BasisIndex i = 0; i < basis->size(); ++i) {
      const Forest& f = basis->forest(i);
      CHECK(basis->index(f) == i);
      HopfTensor from_table;
      for (const auto& term : basis->coproduct(i)) {
        from_table.add(basis->forest(term.left), basis->forest(term.right), term.coeff);
      }
      CHECK(from_table == coproduct(f));
      CHECK(basis->to_element(basis->antipode(i)) == antipode(f));
      for (BasisIndex j = 0; j < basis->size(); ++j) {
        const auto p = basis->product(i, j);
        if (f.degree() + basis->degree(j) <= 5) {
          REQUIRE(p.has_value());
          CHECK(basis->forest(*p) == f * basis->forest(j));
        } else {
          CHECK_FALSE(p.has_value());
        }
      }
    }
    const auto [lo, hi] = basis->degree_range(3);
    CHECK(hi - lo == 4);
    CHECK_THROWS_AS(basis->index(forest("[[[[[[]]]]]]")), InvalidArgument);
  }

  TEST_CASE("degree caps") {
    CHECK_THROWS_AS(HopfBasis::get(TreeFamily::RootedTrees, 7), DegreeTooLarge);
    CHECK_THROWS_AS(HopfBasis::get(TreeFamily::Ladders, 9), DegreeTooLarge);
    CHECK_NOTHROW(HopfBasis::get(TreeFamily::Ladders, 8));
  }

  TEST_CASE("family names") {
    CHECK(parse_family("rooted-trees") == TreeFamily::RootedTrees);
    CHECK(parse_family("ladders-only") == TreeFamily::Ladders);
    CHECK(to_string(TreeFamily::RootedTrees) == "rooted_trees");
    CHECK_THROWS_AS(parse_family("graphs"), ParseError);
  }

  TEST_CASE("algebra morphism on random pairs") {
    const auto all = [] {
      std::vector<Forest> v;
      for (int n = 0; n <= 6; ++n) {
        for (auto& f : enumerate_basis(n, TreeFamily::RootedTrees)) v.push_back(f);
      }
      return v;
    }();
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
      const Forest& f = all[rng() % all.size()];
      const Forest& g = all[rng() % all.size()];
      if (f.degree() + g.degree() > 6) continue;
      CHECK(coproduct(f * g) == coproduct(f) * coproduct(g));
    }
  }
}
