#include <gtest/gtest.h>

#include "support.hpp"
#include "tauhh/errors.hpp"
#include "tauhh/presentation_io.hpp"
#include "tauhh/report.hpp"

namespace tauhh {
namespace {

const char* kHeader = "vertex x\nvertex y\narrow a x y\narrow b y x\n";

PresentationError parse_error(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const PresentationError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return PresentationError("none");
}

TEST(Parser, TauNotDerivedFile) {
  PresentationFile f = load_presentation(test::data_path("tau_not_derived.quiver"));
  EXPECT_EQ(f.presentation.quiver.num_vertices(), 3u);
  EXPECT_EQ(f.presentation.quiver.num_arrows(), 4u);
  EXPECT_EQ(f.presentation.relations.size(), 3u);
  EXPECT_FALSE(f.bimodule.has_value());
  const Quiver& q = f.presentation.quiver;
  EXPECT_EQ(format_path_vector(q, f.presentation.relations[0]), "a*d*a");
  EXPECT_EQ(format_path_vector(q, f.presentation.relations[2]), "a*d - c*b");
}

TEST(Parser, NoGoFurtherRelation) {
  PresentationFile f = parse_presentation(std::string(kHeader) + "relation b*a\n");
  ASSERT_EQ(f.presentation.relations.size(), 1u);
  const Path& p = f.presentation.relations[0].terms().begin()->first;
  EXPECT_EQ(p.arrows, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(p.source, 0u);
  EXPECT_EQ(p.target, 0u);
}

TEST(Parser, Coefficients) {
  PresentationFile f = parse_presentation(
      "vertex u\narrow x u u\narrow y u u\nrelation -1/2*y*x + 3*x*y # comment\n");
  const auto& terms = f.presentation.relations[0].terms();
  ASSERT_EQ(terms.size(), 2u);
  Field q;
  for (const auto& [p, c] : terms) {
    EXPECT_TRUE(c == q.from_fraction(-1, 2) || c == q.from_int(3));
  }
  PresentationFile g = parse_presentation("field GF 5\nvertex u\narrow x u u\nrelation 7*x*x\n");
  EXPECT_EQ(g.presentation.relations[0].terms().begin()->second.residue(), 2u);
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  PresentationError e = parse_error(std::string(kHeader) + "relation a\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_NE(std::string(e.what()).find("length"), std::string::npos) << e.what();

  PresentationError undefined = parse_error(std::string(kHeader) + "relation a*q\n");
  EXPECT_EQ(undefined.line(), 5u);
  EXPECT_EQ(undefined.column(), 12u);

  PresentationError chain = parse_error(std::string(kHeader) + "relation a*a\n");
  EXPECT_NE(std::string(chain.what()).find("compos"), std::string::npos) << chain.what();

  PresentationError mixed = parse_error(std::string(kHeader) + "relation b*a + a*b\n");
  EXPECT_NE(std::string(mixed.what()).find("endpoint"), std::string::npos) << mixed.what();

  PresentationError prime = parse_error("field GF 12\nvertex u\n");
  EXPECT_EQ(prime.line(), 1u);
  EXPECT_EQ(prime.column(), 10u);

  PresentationError unknown = parse_error("vertex u\nloop b u\n");
  EXPECT_EQ(unknown.line(), 2u);
  EXPECT_EQ(unknown.column(), 1u);

  parse_error("vertex u\nvertex u\n");
  parse_error("vertex x\narrow a x z\n");
  parse_error("field GF 3\nvertex u\narrow x u u\nrelation 1/2*x*x\n");
  parse_error("vertex u\narrow x u u\nrelation x*x - x*x\n");
  parse_error("vertex u\nfield Q\nfield Q\n");
  parse_error("vertex u\ncap 0\n");
}

TEST(Parser, BimoduleBlock) {
  PresentationFile f = load_presentation(test::data_path("two_cycle_bimodule.quiver"));
  ASSERT_TRUE(f.bimodule.has_value());
  EXPECT_EQ(f.bimodule->dim(0, 0), 1u);
  EXPECT_EQ(f.bimodule->dim(1, 0), 1u);
  EXPECT_TRUE(f.bimodule->left(0, 0)(0, 0).is_one());
  PresentationError shape = parse_error(std::string(kHeader) +
                                        "bimodule dim x x 1\nbimodule act left a x x 1,1\n");
  EXPECT_EQ(shape.line(), 6u);
  parse_error(std::string(kHeader) + "bimodule dim x x 1\nbimodule act left b x x 1\n");
}

TEST(Parser, EmitIsAFixpoint) {
  for (const char* name : {"no_go_further.quiver", "lambda_q2.quiver", "tau_not_derived.quiver",
                           "tau_not_derived_prime.quiver", "aba.quiver", "kronecker.quiver",
                           "two_cycle_bimodule.quiver", "one_loop_free.quiver"}) {
    SCOPED_TRACE(name);
    PresentationFile f = load_presentation(test::data_path(name));
    std::string once = emit_presentation(f);
    PresentationFile g = parse_presentation(once);
    EXPECT_EQ(g.presentation.quiver, f.presentation.quiver);
    EXPECT_EQ(g.presentation.field, f.presentation.field);
    EXPECT_EQ(g.presentation.relations, f.presentation.relations);
    EXPECT_EQ(g.presentation.degree_cap, f.presentation.degree_cap);
    EXPECT_EQ(g.bimodule.has_value(), f.bimodule.has_value());
    if (f.bimodule) {
      EXPECT_EQ(g.bimodule->dims(), f.bimodule->dims());
      for (std::size_t a = 0; a < f.presentation.quiver.num_arrows(); ++a) {
        for (std::size_t v = 0; v < f.presentation.quiver.num_vertices(); ++v) {
          EXPECT_EQ(g.bimodule->left(a, v), f.bimodule->left(a, v));
          EXPECT_EQ(g.bimodule->right(a, v), f.bimodule->right(a, v));
        }
      }
    }
    EXPECT_EQ(emit_presentation(g), once);
  }
}

TEST(Parser, RandomPresentationsRoundTrip) {
  std::mt19937_64 rng(test::seed() + 80);
  for (int t = 0; t < 30; ++t) {
    AlgebraPresentation p;
    p.quiver = test::random_quiver(rng, 3, 5);
    p.field = t % 2 ? Field::prime(7) : Field();
    p.degree_cap = 5 + t % 7;
    auto paths = enumerate_paths(p.quiver, 2);
    for (std::size_t i = 0; i + 1 < paths.size(); i += 2) {
      PathVector v = PathVector::single(paths[i], p.field.from_int(1 + t % 3));
      if (paths[i + 1].source == paths[i].source && paths[i + 1].target == paths[i].target) {
        v.add(paths[i + 1], p.field.from_fraction(-(t % 4) - 1, t % 2 ? 1 : 3));
      }
      p.relations.push_back(v);
    }
    PresentationFile f{p, {}};
    PresentationFile g = parse_presentation(emit_presentation(f));
    EXPECT_EQ(g.presentation.relations, p.relations) << emit_presentation(f);
    EXPECT_EQ(g.presentation.quiver, p.quiver);
    EXPECT_EQ(g.presentation.degree_cap, p.degree_cap);
  }
}

TEST(Report, Renderings) {
  DimReport r;
  r.add("HH_cohomology", 0, 2);
  r.add("peirce(x,y)", 10, 123);
  r.note("hello");
  std::string table = render(r, Format::Table);
  EXPECT_EQ(table,
            "invariant      degree  dimension\n"
            "HH_cohomology       0          2\n"
            "peirce(x,y)        10        123\n"
            "# hello\n");
  EXPECT_EQ(render(r, Format::Csv),
            "invariant,degree,dimension\nHH_cohomology,0,2\n\"peirce(x,y)\",10,123\n");
  DimReport back = parse_json_report(render(r, Format::Json));
  EXPECT_EQ(back.rows, r.rows);
  EXPECT_EQ(back.notes, r.notes);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace tauhh
