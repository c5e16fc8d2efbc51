#include <gtest/gtest.h>

#include <random>

#include "cmpart/cmpart.hpp"
#include "oracles.hpp"

using namespace cmpart;
using oracle::lf;

namespace {

const named::Complexes& built() {
  static const named::Complexes c = named::build();
  return c;
}

std::vector<std::int64_t> fv(const SimplicialComplex& c) { return c.f_vector().entries(); }

std::set<VertexLabel> vertex_set(const SimplicialComplex& c) {
  return {c.vertices().begin(), c.vertices().end()};
}

}  // namespace

TEST(VertexLabel, ParsesIntegersAndTags) {
  EXPECT_EQ(VertexLabel::parse("12"), VertexLabel(12));
  EXPECT_EQ(VertexLabel::parse("1.3"), VertexLabel(1).with_copy_tag(3));
  EXPECT_EQ(VertexLabel::parse("1.3").to_string(), "1.3");
  EXPECT_EQ(VertexLabel::parse("a").to_string(), "a");
  EXPECT_EQ(VertexLabel::parse("007").to_string(), "007");
  EXPECT_NE(VertexLabel::parse("007"), VertexLabel(7));
}

TEST(VertexLabel, OrderIsBaseThenTag) {
  EXPECT_LT(VertexLabel(2), VertexLabel(10));
  EXPECT_LT(VertexLabel(10), VertexLabel::parse("a"));
  EXPECT_LT(VertexLabel(1), VertexLabel(1).with_copy_tag(1));
  EXPECT_LT(VertexLabel(1).with_copy_tag(2), VertexLabel(2));
}

TEST(Face, SortedAndDuplicateFree) {
  Face f{3, 1, 2};
  EXPECT_EQ(f.to_string(), "1 2 3");
  EXPECT_EQ(f.dimension(), 2);
  EXPECT_EQ(Face{}.dimension(), -1);
  EXPECT_THROW((Face{1, 1}), InputError);
  EXPECT_TRUE((Face{1, 3}).is_subset_of(f));
  EXPECT_FALSE((Face{1, 4}).is_subset_of(f));
}

TEST(FromFacets, QMatchesBruteForceClosure) {
  auto q = built().q;
  auto oracle_f = oracle::f_vector(oracle::closure(named::q_facets()));
  EXPECT_EQ(fv(q), oracle_f);
  EXPECT_EQ(q.num_facets(), 14u);
}

TEST(FromFacets, SingleVertex) {
  auto c = from_facets({lf({"a"})});
  EXPECT_EQ(c.facets(), std::vector<Face>{lf({"a"})});
  EXPECT_EQ(c.faces(), (std::vector<Face>{Face{}, lf({"a"})}));
}

TEST(FromFacets, AbsorbsNonMaximal) {
  auto c = from_facets({lf({"a", "b"}), lf({"a"}), lf({"a", "b"})});
  EXPECT_EQ(c.facets(), std::vector<Face>{(lf({"a", "b"}))});
}

TEST(FromFacets, EmptyInputIsError) { EXPECT_THROW(from_facets({}), InputError); }

TEST(Faces, QStarFacetsMatchList) {
  std::vector<Face> listed{{2, 5, 6, 12}, {1, 5, 8, 11}, {0, 1, 2, 5}, {1, 4, 8, 9}, {1, 2, 3, 10},
                           {4, 5, 8, 13}, {0, 1, 2, 3},  {1, 4, 9, 10}, {1, 2, 9, 10}, {1, 2, 5, 6},
                           {0, 2, 5, 12}, {4, 5, 7, 13}, {1, 4, 5, 8},  {1, 2, 6, 9},  {1, 3, 4, 7},
                           {1, 3, 4, 10}, {1, 5, 6, 11}, {1, 4, 5, 7},  {1, 6, 9, 11}, {1, 8, 9, 11}};
  std::sort(listed.begin(), listed.end());
  EXPECT_EQ(faces(built().q_star, 3), listed);
}

TEST(Faces, EmptyFaceDimension) {
  EXPECT_EQ(faces(built().q_star, -1), std::vector<Face>{Face{}});
  EXPECT_EQ(faces(built().a, -1), std::vector<Face>{Face{}});
}

TEST(Faces, QStarTotalCount) { EXPECT_EQ(faces(built().q_star).size(), 132u); }

TEST(Faces, OutOfRangeIsError) {
  EXPECT_THROW(faces(built().q_star, 4), InputError);
  EXPECT_THROW(faces(built().q_star, -2), InputError);
}

TEST(Faces, EachFaceOnceInCanonicalOrder) {
  auto all = faces(built().q_star);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  EXPECT_EQ(all, faces(built().q_star));
}

TEST(Faces, RandomComplexesMatchOracle) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto fs = oracle::random_mixed(rng, 9, 5, 6);
    auto c = from_facets(fs);
    auto closed = oracle::closure(fs);
    EXPECT_EQ(fv(c), oracle::f_vector(closed));
    std::vector<oracle::Set> mine;
    for (const auto& f : c.faces()) mine.push_back(oracle::to_set(f));
    EXPECT_EQ(oracle::Family(mine.begin(), mine.end()), closed);
  }
}

TEST(Link, OfEmptyFaceIsComplex) {
  EXPECT_EQ(link(built().q_star, Face{}), built().q_star);
}

TEST(Link, OfFacetIsEmptyFaceOnly) {
  auto lk = link(built().q_star, Face{1, 2, 3, 10});
  EXPECT_EQ(lk.faces(), std::vector<Face>{Face{}});
}

TEST(Link, NotAFaceIsError) { EXPECT_THROW(link(built().q_star, Face{0, 9}), InputError); }

TEST(Link, VertexNineBeforeAndAfter) {
  // The figure shows the link of 9 in Q (left) and after the {2,4}, {5,9}
  // subdivisions (right); the latter is unchanged by the remaining steps.
  auto before = link(built().q, Face{9});
  EXPECT_EQ(vertex_set(before), (std::set<VertexLabel>{1, 2, 4, 5, 6, 8}));
  EXPECT_FALSE(is_balanced(before).balanced);
  auto after = link(built().q_star, Face{9});
  EXPECT_EQ(vertex_set(after), (std::set<VertexLabel>{1, 2, 4, 6, 8, 10, 11}));
  EXPECT_EQ(after.dimension(), 2);
  EXPECT_TRUE(is_balanced(after).balanced);
}

TEST(Link, MatchesOracleOnEveryFace) {
  const auto& q = built().q_star;
  auto closed = oracle::closure(q.facets());
  for (const auto& f : q.faces()) {
    auto lk = link(q, f);
    oracle::Family mine;
    for (const auto& g : lk.faces()) mine.insert(oracle::to_set(g));
    EXPECT_EQ(mine, oracle::link(closed, oracle::to_set(f))) << f;
  }
}

TEST(Link, PureDimensionProperty) {
  for (const auto* c : {&built().q, &built().q_star, &built().a_star}) {
    for (const auto& f : c->faces()) {
      auto lk = link(*c, f);
      EXPECT_LE(lk.dimension(), c->dimension() - static_cast<int>(f.size()));
      EXPECT_TRUE(lk.is_pure());
      EXPECT_EQ(lk.dimension(), c->dimension() - static_cast<int>(f.size()));
    }
  }
}

TEST(Induced, AFromQ) {
  std::vector<Face> listed{{0, 2, 6}, {0, 2, 3}, {2, 3, 4}, {3, 4, 7}, {4, 7, 8}};
  EXPECT_EQ(built().a, from_facets(listed));
}

TEST(Induced, AStarFromQStar) {
  std::vector<Face> listed{{0, 2, 3}, {4, 7, 13}, {3, 4, 10}, {0, 2, 12},
                           {3, 4, 7}, {2, 3, 10}, {2, 6, 12}, {4, 8, 13}};
  EXPECT_EQ(built().a_star, from_facets(listed));
  EXPECT_EQ(fv(built().a_star), (std::vector<std::int64_t>{1, 10, 17, 8}));
}

TEST(Induced, EmptyVertexSet) {
  EXPECT_EQ(induced(built().q, {}).faces(), std::vector<Face>{Face{}});
}

TEST(Induced, UnknownLabelIsError) { EXPECT_THROW(induced(built().q, {0, 99}), InputError); }

TEST(FVector, NamedValues) {
  EXPECT_EQ(fv(built().q_star), (std::vector<std::int64_t>{1, 14, 45, 52, 20}));
  RelativeComplex x(built().q_star, built().a_star);
  EXPECT_EQ(x.f_vector().entries(), (std::vector<std::int64_t>{0, 4, 28, 44, 20}));
  EXPECT_EQ(fv(named::glued(built(), 3)), (std::vector<std::int64_t>{1, 22, 101, 140, 60}));
}

TEST(FVector, RejectsNegativeEntries) { EXPECT_THROW(FVector({1, -1}), InputError); }

TEST(HVector, MatchesPolynomialExpansion) {
  for (auto f : std::vector<std::vector<std::int64_t>>{{1, 14, 45, 52, 20}, {1, 10, 17, 8}}) {
    EXPECT_EQ(h_vector(FVector(f)).entries(), oracle::h_by_expansion(f));
  }
  EXPECT_EQ(oracle::h_by_expansion({1, 14, 45, 52, 20}), (std::vector<std::int64_t>{1, 10, 9, 0, 0}));
  EXPECT_EQ(oracle::h_by_expansion({1, 10, 17, 8}), (std::vector<std::int64_t>{1, 7, 0, 0}));
}

TEST(HVector, SimplexIsOneZeros) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<VertexLabel> v;
    for (int i = 0; i < n; ++i) v.emplace_back(i);
    auto h = h_vector(SimplicialComplex::simplex(Face(v)).f_vector());
    std::vector<std::int64_t> expect(n + 1, 0);
    expect[0] = 1;
    EXPECT_EQ(h.entries(), expect);
  }
}

TEST(HVector, RoundTripAndFacetSum) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto c = from_facets(oracle::random_pure(rng, 8, 1 + t % 4, 1 + t % 7));
    auto f = c.f_vector();
    auto h = h_vector(f);
    EXPECT_EQ(h.entries(), oracle::h_by_expansion(f.entries()));
    EXPECT_EQ(f_from_h(h), f);
    EXPECT_EQ(h.sum(), static_cast<std::int64_t>(c.num_facets()));
  }
  EXPECT_EQ(h_vector(built().q_star.f_vector()).sum(), 20);
  EXPECT_EQ(h_vector(built().a_star.f_vector()).sum(), 8);
}

TEST(Relative, QStarModAStar) {
  RelativeComplex x(built().q_star, built().a_star);
  EXPECT_EQ(x.index_faces().size(), 96u);
  EXPECT_EQ(x.f_vector(), built().q_star.f_vector() - built().a_star.f_vector());
}

TEST(Relative, RemovingOnlyEmptyFace) {
  const auto& c = built().a_star;
  RelativeComplex x(c, SimplicialComplex::empty_face_only());
  EXPECT_EQ(x.index_faces().size(), c.index_faces().size() - 1);
  EXPECT_EQ(x.f_vector().count(-1), 0);
  EXPECT_EQ(x.f_vector().count(0), 10);
}

TEST(Relative, VoidRemovedKeepsEmptyFace) {
  RelativeComplex x(built().a_star);
  EXPECT_EQ(x.f_vector(), built().a_star.f_vector());
}

TEST(Relative, DegenerateAndNonSubcomplexErrors) {
  EXPECT_THROW(RelativeComplex(built().q_star, built().q_star), InputError);
  EXPECT_THROW(RelativeComplex(built().a, from_facets({Face{0, 9}})), InputError);
}

TEST(Relative, MinimalRepresentation) {
  // Every facet of the stored total contains a face outside the removed part.
  auto path = from_facets({lf({"a", "b"}), lf({"b", "c"})});
  RelativeComplex x(path, from_facets({lf({"b", "c"})}));
  EXPECT_EQ(x.total().facets(), std::vector<Face>{(lf({"a", "b"}))});
  EXPECT_EQ(x.f_vector().entries(), (std::vector<std::int64_t>{0, 1, 1}));
  RelativeComplex xs(built().q_star, built().a_star);
  for (const auto& f : xs.index_facets()) EXPECT_FALSE(xs.in_removed(f));
}

TEST(Purity, Examples) {
  EXPECT_TRUE(built().q_star.is_pure());
  EXPECT_EQ(built().q_star.dimension(), 3);
  EXPECT_TRUE(built().a_star.is_pure());
  EXPECT_EQ(built().a_star.dimension(), 2);
  auto c = from_facets({lf({"a", "b"}), lf({"c"})});
  EXPECT_FALSE(c.is_pure());
  EXPECT_EQ(c.dimension(), 1);
}

TEST(IndexSet, WideUniverse) {
  IndexSet a, b;
  a.insert(3);
  a.insert(400);
  b.insert(400);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_EQ((a - b).indices(), std::vector<std::size_t>{3});
  EXPECT_EQ(a.size(), 2u);
  a.erase(400);
  EXPECT_EQ(a, (a - b));
  EXPECT_EQ(std::hash<IndexSet>{}(a), std::hash<IndexSet>{}(a - b));
}

TEST(IndexSet, SubsetEnumeration) {
  IndexSet s;
  for (auto i : {1, 5, 70}) s.insert(i);
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(s, [&](const IndexSet& t) { seen.insert(t.indices()); });
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Complex, ThirtySevenCopiesUseWideSets) {
  auto c = named::glued(built(), 37);
  EXPECT_EQ(c.num_vertices(), 4u * 37 + 10);
  EXPECT_EQ(c.f_vector().count(3), 740);
}
