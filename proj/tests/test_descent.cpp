#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "renorm/descent.hpp"
#include "renorm/errors.hpp"
#include "renorm/fixtures.hpp"

using namespace renorm;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }
DescentElement B(std::vector<int> parts, const Rational& c = 1) { return DescentElement(comp(std::move(parts)), c); }

std::vector<Permutation> permutations_of(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Sum of the permutations whose descents lie among the partial sums of C.
PermutationElement descent_class_sum(const Composition& c) {
  std::set<int> sums;
  int s = 0;
  for (std::size_t i = 0; i + 1 < c.parts().size(); ++i) sums.insert(s += c.parts()[i]);
  PermutationElement out(c.weight());
  for (const auto& sigma : permutations_of(c.weight())) {
    bool inside = true;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
      if (sigma[i] > sigma[i + 1] && !sums.count(static_cast<int>(i) + 1)) inside = false;
    }
    if (inside) out.add(sigma, 1);
  }
  return out;
}

PermutationElement expand(const DescentElement& a, int n) {
  PermutationElement out(n);
  for (const auto& [c, x] : a.terms()) out += x * descent_class_sum(c);
  return out;
}

DescentElement random_homogeneous(std::mt19937_64& rng, int n) {
  DescentElement a;
  for (const auto& c : compositions_of(n)) {
    if (rng() % 2) a.add(c, random_rational(rng));
  }
  return a;
}

// Transpose action on T(X): w -> w_{s(1)} ... w_{s(n)}.
TensorElement act_t(const PermutationElement& p, const Word& w) {
  TensorElement out;
  for (const auto& [sigma, c] : p.terms()) {
    Word image;
    for (int i : sigma) image.push_back(w[static_cast<std::size_t>(i - 1)]);
    out.add(image, c);
  }
  return out;
}

// Action on T*(X): sigma(y_1...y_n) = y_{s^-1(1)} ... y_{s^-1(n)}.
TensorElement act_star(const PermutationElement& p, const Word& w) {
  TensorElement out;
  for (const auto& [sigma, c] : p.terms()) {
    Word image(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) image[static_cast<std::size_t>(sigma[i] - 1)] = w[i];
    out.add(image, c);
  }
  return out;
}

TensorElement linear(const TensorElement& x, const std::function<TensorElement(const Word&)>& f) {
  TensorElement out;
  for (const auto& [w, c] : x.terms()) out += c * f(w);
  return out;
}

void shuffle_into(const Word& u, const Word& v, std::size_t i, std::size_t j, Word& cur, TensorElement& out) {
  if (i == u.size() && j == v.size()) {
    out.add(cur, 1);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_into(u, v, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_into(u, v, i, j + 1, cur, out);
    cur.pop_back();
  }
}

TensorElement shuffle(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) {
      TensorElement s;
      Word cur;
      shuffle_into(u, v, 0, 0, cur, s);
      out += Rational(x * y) * s;
    }
  }
  return out;
}

TensorElement word(std::initializer_list<int> letters) { return TensorElement(Word(letters)); }

}  // namespace

TEST_SUITE("descent-algebra") {
  TEST_CASE("compositions") {
    CHECK(Composition::parse("1,2") == comp({1, 2}));
    CHECK(comp({1, 2}).code() == "1,2");
    CHECK(comp({1, 2}).weight() == 3);
    CHECK(comp({2, 1}).partial_sum_mask() == 0b10u);
    CHECK(Composition::from_mask(0b101u, 4) == comp({1, 2, 1}));
    CHECK_THROWS_AS(Composition::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(Composition::parse("0"), ParseError);
    const auto all = compositions_of(4);
    CHECK(all.size() == 8);
    CHECK(all.front() == comp({4}));
    CHECK(all.back() == comp({1, 1, 1, 1}));
    CHECK(comp({3}) < comp({1, 2}));
    CHECK(comp({1, 2}) < comp({2, 1}));
  }

  TEST_CASE("convolution is concatenation") {
    CHECK(B({1}) * B({2}) == B({1, 2}));
    CHECK(DescentElement::unit() * B({3, 1}) == B({3, 1}));
    CHECK(B({1}) * B({1}) == B({1, 1}));
    CHECK(d_convolve(B({1}) + B({2}), B({2}), 3) == B({1, 2}));
  }

  TEST_CASE("divided-power coproduct") {
    const DescentElement u = DescentElement::unit();
    DescentTensor expected;
    expected[{comp({2}), Composition{}}] = 1;
    expected[{comp({1}), comp({1})}] = 1;
    expected[{Composition{}, comp({2})}] = 1;
    CHECK(d_coproduct(B({2})) == expected);
    DescentTensor e11;
    e11[{comp({1, 1}), Composition{}}] = 1;
    e11[{comp({1}), comp({1})}] = 2;
    e11[{Composition{}, comp({1, 1})}] = 1;
    CHECK(d_coproduct(B({1, 1})) == e11);
    CHECK(is_primitive(B({2}) - B({1, 1}, Rational(1, 2))));
    CHECK_FALSE(is_primitive(B({2})));
    CHECK_FALSE(is_primitive(u));
  }

  TEST_CASE("log and exp") {
    CHECK(d_log(DescentElement::unit(), 5).is_zero());
    CHECK(d_exp(B({1}), 4).component(2) == B({1, 1}, Rational(1, 2)));
    CHECK(d_log(identity_series(4), 4).component(2) == B({2}) - B({1, 1}, Rational(1, 2)));
    std::mt19937_64 rng(4);
    DescentElement x;
    for (int n = 1; n <= 5; ++n) x += random_homogeneous(rng, n);
    CHECK(d_log(d_exp(x, 5), 5) == x);
    CHECK_THROWS_AS(d_log(B({1}), 3), InvalidArgument);
    CHECK_THROWS_AS(d_exp(DescentElement::unit(), 3), InvalidArgument);
  }

  TEST_CASE("identity and antipode series") {
    CHECK(identity_series(0) == DescentElement::unit());
    CHECK(identity_series(2) == DescentElement::unit() + B({1}) + B({2}));
    const DescentElement s = antipode_series(6);
    CHECK(s.component(1) == B({1}, -1));
    CHECK(s.component(2) == B({2}, -1) + B({1, 1}));
    CHECK(d_convolve(s, identity_series(6), 6) == DescentElement::unit());
    CHECK(d_convolve(identity_series(6), s, 6) == DescentElement::unit());
    for (int n = 1; n <= 6; ++n) {
      DescentElement closed;
      for (const auto& c : compositions_of(n)) closed.add(c, c.length() % 2 ? -1 : 1);
      CHECK(s.component(n) == closed);
    }
  }

  TEST_CASE("Zassenhaus elements") {
    const auto left = zassenhaus(3, Side::Left, ExpMode::Plain);
    const auto right = zassenhaus(3, Side::Right, ExpMode::Plain);
    CHECK(left[0] == B({1}));
    CHECK(left[1] == B({2}) - B({1, 1}, Rational(1, 2)));
    CHECK(left[2] == B({3}) - B({1, 2}) + B({1, 1, 1}, Rational(1, 3)));
    CHECK(right[2] == B({3}) - B({2, 1}) + B({1, 1, 1}, Rational(1, 3)));
    CHECK(left[1].to_string() == "1·(2) − 1/2·(1,1)");
    CHECK_THROWS_AS(zassenhaus(0, Side::Left, ExpMode::Plain), InvalidArgument);
  }

  TEST_CASE("products of exponentials reconstruct the identity") {
    const int w = 8;
    const DescentElement id = identity_series(w);
    for (Side side : {Side::Left, Side::Right}) {
      for (ExpMode mode : {ExpMode::Plain, ExpMode::Accelerated}) {
        const auto z = zassenhaus(w, side, mode);
        DescentElement prod = DescentElement::unit();
        for (int m = 1;; ++m) {
          const auto [lo, hi] = mode == ExpMode::Plain ? std::pair{m, m} : accelerated_block(m, w);
          if (lo > w) break;
          DescentElement block;
          for (int n = lo; n <= hi; ++n) {
            CHECK(z[static_cast<std::size_t>(n - 1)].homogeneous_weight() == n);
            block += z[static_cast<std::size_t>(n - 1)];
          }
          CHECK(is_primitive(block));
          const DescentElement e = d_exp(block, w);
          prod = side == Side::Left ? d_convolve(prod, e, w) : d_convolve(e, prod, w);
        }
        CHECK(prod == id);
      }
    }
  }

  TEST_CASE("Dynkin elements") {
    const auto d = dynkin(4);
    CHECK(d[0] == B({1}));
    CHECK(d[1] == B({2}, 2) - B({1, 1}));
    CHECK(internal_product(d[1], d[1]) == d[1] * Rational(2));
    for (int n = 1; n <= 4; ++n) CHECK(is_primitive(d[static_cast<std::size_t>(n - 1)]));
    CHECK(act_on_word(d[1], Word{1, 2}) == word({1, 2}) - word({2, 1}));
    CHECK(act_on_word(d[2], Word{1, 2, 3}) == bracket(bracket(word({1}), word({2})), word({3})));
  }

  TEST_CASE("permutation realization") {
    CHECK(to_permutations(B({2}), 2) == PermutationElement(2, {{{1, 2}, 1}}));
    CHECK(to_permutations(B({1, 1}), 2) == PermutationElement(2, {{{1, 2}, 1}, {{2, 1}, 1}}));
    CHECK(to_permutations(B({1, 2}), 3) == PermutationElement(3, {{{1, 2, 3}, 1}, {{2, 1, 3}, 1}, {{3, 1, 2}, 1}}));
    for (int n = 1; n <= 5; ++n) {
      for (const auto& c : compositions_of(n)) {
        CAPTURE(c.code());
        CHECK(to_permutations(DescentElement(c), n) == descent_class_sum(c));
        CHECK(from_permutations(descent_class_sum(c)) == DescentElement(c));
      }
    }
    CHECK_THROWS_AS(to_permutations(B({1, 2}), 4), NotHomogeneous);
    CHECK_THROWS_AS(to_permutations(B({9}), 9), DegreeTooLarge);
    CHECK_THROWS_AS(from_permutations(PermutationElement(3, {{{2, 1, 3}, 1}})), InvalidArgument);
  }

  TEST_CASE("group algebra product") {
    const Permutation s = {2, 3, 1};
    const Permutation t = {2, 1, 3};
    CHECK(compose(s, t) == Permutation{3, 2, 1});
    CHECK(compose(s, inverse(s)) == Permutation{1, 2, 3});
    CHECK(PermutationElement(3, {{s, 1}}) * PermutationElement(3, {{t, 1}}) == PermutationElement(3, {{{3, 2, 1}, 1}}));
    CHECK(all_permutations(4).size() == 24);
    CHECK(permutation_rank({1, 2, 3}) == 0);
    CHECK(permutation_rank({3, 2, 1}) == 5);
  }

  TEST_CASE("internal product") {
    CHECK(internal_product(B({1, 1}), B({1, 1})) == B({1, 1}, 2));
    const DescentElement z2 = B({2}) - B({1, 1}, Rational(1, 2));
    CHECK(internal_product(z2, z2) == z2);
    CHECK(to_permutations(z2, 2) == PermutationElement(2, {{{1, 2}, Rational(1, 2)}, {{2, 1}, Rational(-1, 2)}}));
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        const DescentElement a = random_homogeneous(rng, n);
        const DescentElement b = random_homogeneous(rng, n);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(internal_product(DescentElement::projection(n), a) == a);
        CHECK(internal_product(a, DescentElement::projection(n)) == a);
        CHECK(expand(internal_product(a, b), n) == expand(a, n) * expand(b, n));
      }
    }
    CHECK_THROWS_AS(internal_product(B({1, 1}), B({3})), NotHomogeneous);
  }

  TEST_CASE("composition of endomorphisms on words") {
    // (a o b)(w) = a(b(w)) for the T* action.
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 4; ++n) {
      const DescentElement a = random_homogeneous(rng, n);
      const DescentElement b = random_homogeneous(rng, n);
      if (a.is_zero() || b.is_zero()) continue;
      const PermutationElement pa = to_permutations(a, n);
      const PermutationElement pb = to_permutations(b, n);
      const PermutationElement pab = to_permutations(internal_product(a, b), n);
      Word w(static_cast<std::size_t>(n));
      std::iota(w.begin(), w.end(), 1);
      const TensorElement lhs = act_star(pab, w);
      const TensorElement rhs = linear(act_star(pb, w), [&](const Word& u) { return act_star(pa, u); });
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("convolution matches the endomorphism convolution on words") {
    std::mt19937_64 rng(8);
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; p + q <= 5; ++q) {
        const DescentElement a = random_homogeneous(rng, p);
        const DescentElement b = random_homogeneous(rng, q);
        const int n = p + q;
        const PermutationElement pa = to_permutations(a, p);
        const PermutationElement pb = to_permutations(b, q);
        const PermutationElement pab = to_permutations(a * b, n);
        Word w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        // T(X): unshuffle coproduct, concatenation product, transpose action.
        TensorElement conv_t;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          if (std::popcount(mask) != p) continue;
          Word u, v;
          for (int i = 0; i < n; ++i) (mask >> i & 1 ? u : v).push_back(w[static_cast<std::size_t>(i)]);
          conv_t += act_t(pa, u) * act_t(pb, v);
        }
        CHECK(act_t(pab, w) == conv_t);
        CHECK(act_on_word(a * b, w) == conv_t);
        // T*(X): deconcatenation coproduct, shuffle product.
        const Word u(w.begin(), w.begin() + p);
        const Word v(w.begin() + p, w.end());
        CHECK(act_star(pab, w) == shuffle(act_star(pa, u), act_star(pb, v)));
      }
    }
  }

  TEST_CASE("Lie elements") {
    CHECK(is_lie_element(word({1, 2}) - word({2, 1})));
    CHECK_FALSE(is_lie_element(word({1, 2})));
    CHECK(act_on_word(B({2}) - B({1, 1}, Rational(1, 2)), Word{1, 2}) ==
          Rational(1, 2) * (word({1, 2}) - word({2, 1})));
    const auto z = zassenhaus(6, Side::Left, ExpMode::Plain);
    CHECK(is_lie_element(act_on_word(z[2], Word{1, 2, 3})));
    CHECK(is_lie_element(act_on_word(z[3], Word{1, 1, 2, 1})));
    CHECK(is_lie_element(act_on_word(z[5], Word{3, 1, 4, 1, 5, 9})));
    CHECK_FALSE(is_lie_element(act_on_word(B({1, 2}), Word{1, 2, 3})));
  }

  TEST_CASE("antipode duality and involution") {
    const auto left = zassenhaus(6, Side::Left, ExpMode::Plain);
    const auto right = zassenhaus(6, Side::Right, ExpMode::Plain);
    const DescentElement s = antipode_series(6);
    for (int n = 1; n <= 6; ++n) {
      const auto k = static_cast<std::size_t>(n - 1);
      CHECK(internal_product(s.component(n), -right[k]) == left[k]);
      CHECK(internal_product(s.component(n), s.component(n)) == B({n}));
    }
  }

  TEST_CASE("quasi-idempotence scalars") {
    const auto left = zassenhaus(6, Side::Left, ExpMode::Plain);
    for (int n = 1; n <= 6; ++n) {
      const DescentElement& z = left[static_cast<std::size_t>(n - 1)];
      const DescentElement sq = internal_product(z, z);
      const Rational c = sq.coeff(comp({n}));
      CHECK(sq == z * c);
      CAPTURE(n);
      CHECK(c == 1);
    }
  }

  TEST_CASE("alpha_H") {
    const BasisPtr basis = HopfBasis::get(TreeFamily::RootedTrees, 5);
    CHECK(alpha_H(identity_series(5), basis) == HopfEndo::identity(basis));
    CHECK(alpha_H(B({2}), basis) == HopfEndo::projection(basis, 2));
    const Forest l2 = Forest::parse("[[]]");
    CHECK(alpha_H(B({1, 1}), basis).apply(HopfElement(l2)) == HopfElement(Forest::parse("[],[]")));
    CHECK(alpha_H(DescentElement::unit(), basis) == HopfEndo::projection(basis, 0));
    std::mt19937_64 rng(13);
    for (int p = 1; p <= 3; ++p) {
      const DescentElement a = random_homogeneous(rng, p);
      const DescentElement b = random_homogeneous(rng, 5 - p);
      CHECK(alpha_H(a * b, basis) == convolve(alpha_H(a, basis), alpha_H(b, basis)));
    }
    for (int n = 1; n <= 4; ++n) {
      const DescentElement a = random_homogeneous(rng, n);
      const DescentElement b = random_homogeneous(rng, n);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(alpha_H(internal_product(a, b), basis) == compose(alpha_H(a, basis), alpha_H(b, basis)));
    }
  }

  TEST_CASE("change of basis") {
    const ChangeOfBasis t = change_of_basis(8);
    CHECK(t.dynkin_in_right_zassenhaus[0] == std::map<Composition, Rational>{{comp({1}), 1}});
    CHECK(t.dynkin_in_right_zassenhaus[1] == std::map<Composition, Rational>{{comp({2}), 2}});
    const auto left = zassenhaus(8, Side::Left, ExpMode::Plain);
    const auto right = zassenhaus(8, Side::Right, ExpMode::Plain);
    const auto d = dynkin(8);
    for (int n = 1; n <= 8; ++n) {
      const auto k = static_cast<std::size_t>(n - 1);
      CHECK(words_unitriangular(left, n));
      CHECK(words_unitriangular(right, n));
      DescentElement rebuilt;
      for (const auto& [w, c] : t.dynkin_in_right_zassenhaus[k]) rebuilt += word_product(right, w) * c;
      CHECK(rebuilt == d[k]);
      DescentElement back;
      for (const auto& [w, c] : t.left_zassenhaus_in_dynkin[k]) back += word_product(d, w) * c;
      CHECK(back == left[k]);
    }
    CHECK_FALSE(words_unitriangular(d, 2));
  }

  TEST_CASE("text form") {
    CHECK(DescentElement().to_string() == "0");
    CHECK((B({1, 1}, Rational(-1, 2)) + B({2})).to_string() == "1·(2) − 1/2·(1,1)");
    CHECK(B({1}, -1).to_string() == "−1·(1)");
  }
}
