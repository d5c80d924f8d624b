#include "test_helpers.hpp"

#include <gbc/corpus.hpp>
#include <gbc/error.hpp>
#include <gbc/mesh.hpp>
#include <gbc/mesh_io.hpp>

#include <filesystem>
#include <fstream>

using namespace gbc;
using gbc::test::v2;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Mesh, TwoSquaresGlueOneEdge) {
  const MeshComplex m = build_complex(corpus_entry("two-squares").mesh);
  EXPECT_EQ(m.elements().size(), 2u);
  EXPECT_EQ(m.facets().size(), 7u);
  const auto interior = m.interior_facets();
  ASSERT_EQ(interior.size(), 1u);
  const Facet& f = m.facet(interior[0]);
  EXPECT_EQ(f.vertex_ids, (std::vector<int>{1, 4}));
  ASSERT_EQ(f.sides.size(), 2u);
  test::expect_vec_near(f.sides[0].outward_normal, -f.sides[1].outward_normal, 1e-15);
}

TEST(Mesh, CorpusFacetCounts) {
  // {name, facets, interior}
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected{
      {"square-pentagon", 8, 1}, {"two-cubes", 11, 1}, {"cube-prism", 10, 1}, {"pyramid", 5, 0}};
  for (const auto& [name, facets, interior] : expected) {
    const MeshComplex m = build_complex(corpus_entry(name).mesh);
    EXPECT_EQ(m.facets().size(), facets) << name;
    EXPECT_EQ(m.interior_facets().size(), interior) << name;
  }
}

TEST(Mesh, LocalOf) {
  const MeshComplex m = build_complex(corpus_entry("two-squares").mesh);
  EXPECT_EQ(m.element(1).local_of(2), 1);
  EXPECT_EQ(m.element(1).local_of(0), -1);
}

TEST(Mesh, ThirdElementOnEdgeIsNonManifold) {
  MeshDescription d = corpus_entry("two-squares").mesh;
  d.vertices.push_back(v2(1.5, 0.5));
  d.elements.push_back({{1, 6, 4}, {}});
  EXPECT_EQ(kind_of([&] { build_complex(d); }), ErrorKind::NonManifold);
}

TEST(Mesh, OverlappingNeighborsAreInconsistent) {
  MeshDescription d;
  d.dimension = 2;
  d.vertices = {v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1), v2(0.5, 0.5)};
  // both triangles lie to the left of edge 1 -> 2
  d.elements = {{{0, 1, 2, 3}, {}}, {{1, 2, 4}, {}}};
  EXPECT_EQ(kind_of([&] { build_complex(d); }), ErrorKind::Inconsistent);
}

TEST(Mesh, BadElementReportsIndexAndVertex) {
  MeshDescription d;
  d.dimension = 2;
  d.vertices = {v2(0, 0), v2(1, 0), v2(2, 0), v2(0, 1), v2(1.2, 0.5), v2(1, 1)};
  d.elements = {{{0, 1, 3}, {}}, {{1, 2, 5, 4}, {}}};
  try {
    build_complex(d);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.element(), 1);
    ASSERT_FALSE(e.violations().empty());
    // global vertex 4 is local vertex 3 of the quadrilateral
    EXPECT_EQ(e.violations()[0].kind, ViolationKind::NonConvexVertex);
    EXPECT_EQ(e.violations()[0].index, 3);
  }
}

TEST(Mesh, FacetFrameIsOrthonormal) {
  const MeshComplex m = build_complex(corpus_entry("cube-prism").mesh);
  for (const Facet& f : m.facets()) {
    const FacetFrame fr = facet_frame(f);
    EXPECT_NEAR(fr.normal.norm(), 1.0, 1e-14);
    ASSERT_EQ(fr.tangents.size(), 2u);
    for (const Vec& t : fr.tangents) {
      EXPECT_NEAR(t.norm(), 1.0, 1e-14);
      EXPECT_NEAR(t.dot(fr.normal), 0.0, 1e-14);
    }
    EXPECT_NEAR(fr.tangents[0].dot(fr.tangents[1]), 0.0, 1e-14);
    test::expect_vec_near(fr.normal, f.sides[0].outward_normal, 1e-12);
  }
}

TEST(Mesh, FacetSamplesLieOnFacet) {
  const MeshComplex m = build_complex(corpus_entry("two-cubes").mesh);
  const Facet& f = m.facet(m.interior_facets()[0]);
  const auto xs = sample_facet(f, 20, 42);
  ASSERT_EQ(xs.size(), 20u);
  for (const Vec& x : xs) {
    EXPECT_NEAR(x[0], 1.0, 1e-15);
    EXPECT_GT(x[1], 0.0);
    EXPECT_LT(x[1], 1.0);
  }
  EXPECT_EQ(xs, sample_facet(f, 20, 42));
}

TEST(MeshIo, RoundTripIsByteStable) {
  for (const auto& e : corpus()) {
    const std::string a = write_mesh(e.mesh);
    const MeshDescription back = parse_mesh(a);
    EXPECT_EQ(write_mesh(back), a) << e.name;
    ASSERT_EQ(back.vertices.size(), e.mesh.vertices.size());
    for (std::size_t i = 0; i < back.vertices.size(); ++i) EXPECT_EQ(back.vertices[i], e.mesh.vertices[i]);
  }
}

TEST(MeshIo, SyntaxErrorHasLineAndColumn) {
  const std::string text = "{\n  \"dimension\": 2,\n  \"vertices\": [[0, 0],, [1, 0]]\n}";
  EXPECT_EQ(kind_of([&] { parse_mesh(text); }), ErrorKind::Parse);
  EXPECT_NE(message_of([&] { parse_mesh(text); }).find("line 3 column"), std::string::npos);
}

TEST(MeshIo, FieldErrorHasPointer) {
  const std::string text = R"({"dimension": 2, "vertices": [[0, 0], [1, 0], [0, "a"]], "elements": []})";
  EXPECT_EQ(message_of([&] { parse_mesh(text); }).substr(0, 13), "/vertices/2/1");
}

TEST(MeshIo, MissingKeyAndBadDimension) {
  EXPECT_EQ(kind_of([] { parse_mesh(R"({"dimension": 2, "vertices": []})"); }), ErrorKind::Parse);
  EXPECT_NE(message_of([] { parse_mesh(R"({"dimension": 4, "vertices": [], "elements": []})"); }).find("/dimension"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              parse_mesh(R"({"dimension": 3, "vertices": [[0,0,0]], "elements": [{"faces": [[0, 1.5]]}]})");
            }).find("/elements/0/faces/0"),
            std::string::npos);
}

TEST(MeshIo, MissingFileIsIo) {
  EXPECT_EQ(kind_of([] { load_mesh("/nonexistent/dir/mesh.json"); }), ErrorKind::Io);
}

TEST(Corpus, ThirteenValidMeshes) {
  const auto all = corpus();
  EXPECT_EQ(all.size(), 13u);
  for (const auto& e : all) EXPECT_NO_THROW(build_complex(e.mesh)) << e.name;
}

TEST(Corpus, GenerateWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "gbc-corpus-unit";
  std::filesystem::remove_all(dir);
  const auto paths = generate_corpus(dir);
  EXPECT_EQ(paths.size(), 13u);
  for (const auto& p : paths) EXPECT_NO_THROW(build_complex(load_mesh(p))) << p;
  std::filesystem::remove_all(dir);
}

TEST(Corpus, SkewedHexahedronFacesPlanar) {
  const Polytope p = skewed_hexahedron();
  for (int f = 0; f < p.num_facets(); ++f) {
    for (int i : p.facet(f)) EXPECT_NEAR(p.facet_distance(f, p.vertex(i)), 0.0, 1e-12);
  }
}
