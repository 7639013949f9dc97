#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "kk/fixtures.hpp"
#include "kk/lie.hpp"
#include "kk/pbw.hpp"

using namespace kk;

namespace {

// Oracle: straighten by always rewriting the RIGHTMOST out-of-order pair.
UEnvElement straighten_rightmost(const LieAlgebra& b,
                                 const std::vector<int>& word, int d) {
  int pos = -1;
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) pos = static_cast<int>(i);
  if (pos < 0) {
    UEnvElement out;
    if (static_cast<int>(word.size()) <= d)
      out.add_term(PBWMonomial{word}, Rat(1));
    return out;
  }
  std::vector<int> swapped = word;
  std::swap(swapped[pos], swapped[pos + 1]);
  UEnvElement out = straighten_rightmost(b, swapped, d);
  const Vec& corr = b.basis_bracket(word[pos], word[pos + 1]);
  for (int t = 0; t < b.dim(); ++t) {
    if (corr[t] == Rat(0)) continue;
    std::vector<int> shorter(word.begin(), word.begin() + pos);
    shorter.push_back(t);
    shorter.insert(shorter.end(), word.begin() + pos + 2, word.end());
    out = uenv_add(out, uenv_scale(corr[t], straighten_rightmost(b, shorter, d)));
  }
  return out;
}

UEnvElement term(const PBWMonomial& m, const Rat& q) {
  UEnvElement e;
  e.add_term(m, q);
  return e;
}

}  // namespace

TEST_CASE("lie algebra validation") {
  CHECK_NOTHROW(fixtures::heisenberg());
  CHECK_NOTHROW(abelian_lie(2));

  // [x,y] = z together with [y,x] = z breaks antisymmetry
  std::vector<std::vector<Vec>> bad(3, std::vector<Vec>(3, zero_vec(3)));
  bad[0][1] = {Rat(0), Rat(0), Rat(1)};
  bad[1][0] = {Rat(0), Rat(0), Rat(1)};
  CHECK_THROWS_AS(LieAlgebra::make("bad", 3, bad), not_a_lie_algebra);

  // [x,y] = x with [x,z] = y leaves Jacobi(x,y,z) = y != 0
  CHECK_THROWS_AS(make_lie("badjacobi", 3,
                           {{0, 1, {Rat(1), Rat(0), Rat(0)}},
                            {0, 2, {Rat(0), Rat(1), Rat(0)}}}),
                  jacobi_failure);
}

TEST_CASE("straightening the solvable fixture") {
  auto b = fixtures::solvable2();

  // b2·b1 = b1·b2 - b2
  CHECK(pbw_straighten(*b, {1, 0}, 3) ==
        uenv_add(term(PBWMonomial{{0, 1}}, Rat(1)),
                 term(PBWMonomial{{1}}, Rat(-1))));

  // b2·b2·b1 = b1·b2^2 - 2·b2^2
  CHECK(pbw_straighten(*b, {1, 1, 0}, 3) ==
        uenv_add(term(PBWMonomial{{0, 1, 1}}, Rat(1)),
                 term(PBWMonomial{{1, 1}}, Rat(-2))));

  // already sorted words are fixed
  CHECK(pbw_straighten(*b, {0, 1, 1}, 3) == term(PBWMonomial{{0, 1, 1}}, Rat(1)));
}

TEST_CASE("straightening in an abelian algebra sorts") {
  auto b = abelian_lie(3);
  CHECK(pbw_straighten(*b, {2, 0, 1}, 3) == term(PBWMonomial{{0, 1, 2}}, Rat(1)));
  CHECK(pbw_straighten(*b, {2, 1, 0, 1}, 3).terms.empty());  // above degree
}

TEST_CASE("truncation keeps lower-degree corrections") {
  auto b = fixtures::solvable2();
  // at d=2 the cubic term of b2·b2·b1 is dropped but the correction stays
  CHECK(pbw_straighten(*b, {1, 1, 0}, 2) == term(PBWMonomial{{1, 1}}, Rat(-2)));
}

TEST_CASE("leftmost and rightmost strategies agree") {
  auto solv = fixtures::solvable2();
  auto h3 = fixtures::heisenberg();
  for (const auto& alg : {solv, h3}) {
    const int dim = alg->dim();
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (int i = 0; i < dim; ++i) {
            auto v = w;
            v.push_back(i);
            next.push_back(v);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words)
      CHECK(pbw_straighten(*alg, w, 4) == straighten_rightmost(*alg, w, 4));
  }
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials_up_to(2, 3).size() == 10);  // 1 + 2 + 3 + 4
  CHECK(monomials_up_to(1, 5).size() == 6);
  for (const auto& m : monomials_up_to(3, 4)) {
    for (size_t i = 0; i + 1 < m.indices.size(); ++i)
      CHECK(m.indices[i] <= m.indices[i + 1]);
  }
}

TEST_CASE("coproduct splits") {
  auto b = abelian_lie(2);

  auto empty = coproduct_split(*b, PBWMonomial{}, 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].left == PBWMonomial{});
  CHECK(empty[0].right == PBWMonomial{});
  CHECK(empty[0].multiplicity == Rat(1));

  // degree 1 is primitive
  auto prim = coproduct_split(*b, PBWMonomial{{0}}, 3);
  CHECK(prim.size() == 2);

  // b1·b2 splits four ways, each once
  auto two = coproduct_split(*b, PBWMonomial{{0, 1}}, 3);
  CHECK(two.size() == 4);
  for (const auto& t : two) CHECK(t.multiplicity == Rat(1));

  // repeated letters accumulate multiplicities: b1^2 gives 1,2,1
  auto sq = coproduct_split(*b, PBWMonomial{{0, 0}}, 3);
  REQUIRE(sq.size() == 3);
  Rat total(0);
  for (const auto& t : sq) total += t.multiplicity;
  CHECK(total == Rat(4));
}

TEST_CASE("linear algebra utilities") {
  Mat m = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(rank(m) == 1);
  CHECK(rank(identity_mat(3)) == 3);

  auto x = solve({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}, {Rat(1), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1, 2));
  CHECK((*x)[1] == Rat(1, 2));

  CHECK_FALSE(solve({{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)}).has_value());

  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(format_rational(Rat(-3, 6)) == "-1/2");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), schema_error);
}

TEST_CASE("lie extension plumbing") {
  auto fix = fixtures::h3_fixture();
  CHECK(fix.ext.pull_back({Rat(0), Rat(0), Rat(5)}) == Vec{Rat(5)});
  CHECK_THROWS_AS(fix.ext.pull_back({Rat(1), Rat(0), Rat(0)}),
                  value_outside_kernel);

  CHECK_FALSE(section_is_hom(fix.ext, fix.s));
  CHECK(section_is_hom(fixtures::aff1_fixture().ext,
                       fixtures::aff1_fixture().s));
  CHECK(section_is_hom(fixtures::split3_fixture().ext,
                       fixtures::split3_fixture().s));

  // a non-section is rejected
  CHECK_THROWS_AS(make_section(fix.ext, zero_mat(3, 2)), not_a_section);
}
