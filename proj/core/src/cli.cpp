#include "tauhh/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tauhh/algebra.hpp"
#include "tauhh/bimodule.hpp"
#include "tauhh/classify.hpp"
#include "tauhh/errors.hpp"
#include "tauhh/hochschild.hpp"
#include "tauhh/presentation_io.hpp"
#include "tauhh/report.hpp"
#include "tauhh/resolution.hpp"
#include "tauhh/rsq.hpp"
#include "tauhh/tau.hpp"

namespace tauhh {

namespace {

struct Options {
  std::string file;
  std::string format = "table";
  std::size_t cell_cap = kDefaultCellCap;
  std::size_t degree_cap = 0;
  std::size_t max_degree = 6;
  std::size_t bound = 8;
  std::string coefficients = "self";
};

struct Loaded {
  PresentationFile file;
  FDAlgebra algebra;
};

Loaded load(const Options& o) {
  PresentationFile f = load_presentation(o.file);
  if (o.degree_cap != 0) f.presentation.degree_cap = o.degree_cap;
  FDAlgebra a = build_algebra(f.presentation);
  return {std::move(f), std::move(a)};
}

std::string vertex_pair(const Quiver& q, std::size_t y, std::size_t x) {
  return "(" + q.vertex_name(y) + "," + q.vertex_name(x) + ")";
}

Bimodule coefficients(const Loaded& l, const std::string& kind) {
  if (kind == "self") return regular_bimodule(l.algebra);
  if (kind == "dual") return dual_bimodule(regular_bimodule(l.algebra));
  if (!l.file.bimodule) throw PresentationError("the file has no bimodule block");
  l.file.bimodule->validate(l.algebra);
  return *l.file.bimodule;
}

DimReport check_report(const Loaded& l) {
  const FDAlgebra& a = l.algebra;
  const Quiver& q = a.quiver();
  DimReport r;
  r.add("dim", 0, a.dim());
  r.add("nilpotency_index", 0, a.nilpotency_index());
  for (std::size_t y = 0; y < q.num_vertices(); ++y) {
    for (std::size_t x = 0; x < q.num_vertices(); ++x) {
      r.add("peirce" + vertex_pair(q, y, x), 0, a.peirce_dim(y, x));
    }
  }
  r.note("field " + a.field().name());
  r.note("every path of length " + std::to_string(a.nilpotency_index()) + " lies in the ideal");
  std::string basis;
  for (const Path& p : a.basis()) basis += (basis.empty() ? "" : ", ") + q.path_name(p);
  r.note("basis: " + basis);
  if (a.is_monomial()) {
    r.note("monomial presentation");
  } else {
    for (const auto& rule : a.reduction_rules()) r.note("rule: " + format_path_vector(q, rule));
  }
  return r;
}

DimReport ext_report(const Loaded& l, std::size_t n) {
  const Quiver& q = l.algebra.quiver();
  ExtTorTable t = ext_tor_table(l.algebra, n);
  DimReport r;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t x = 0; x < q.num_vertices(); ++x) {
      for (std::size_t y = 0; y < q.num_vertices(); ++y) {
        r.add("ext" + vertex_pair(q, x, y), i, t.at(i, x, y));
      }
    }
    r.add("ext_total", i, t.total(i));
  }
  for (std::size_t x = 0; x < q.num_vertices(); ++x) {
    const auto& pd = t.projective_dim[x];
    r.note("pd S_" + q.vertex_name(x) + ": " +
           (pd ? std::to_string(*pd) : "> " + std::to_string(n)));
  }
  GlobalDimension g = global_dimension(t);
  r.note(g.exact ? "global dimension " + std::to_string(g.value)
                 : "global dimension at least " + std::to_string(g.value));
  return r;
}

DimReport hh_report(const Loaded& l, const Options& o) {
  Bimodule x = coefficients(l, o.coefficients);
  HochschildDims d = hh_dims(l.algebra, x, o.max_degree, o.cell_cap);
  if (o.coefficients == "self") hh0_crosschecks(l.algebra, d);
  DimReport r;
  for (std::size_t n = 0; n <= o.max_degree; ++n) r.add("HH_cohomology", n, d.cohomology[n]);
  for (std::size_t n = 0; n <= o.max_degree; ++n) r.add("HH_homology", n, d.homology[n]);
  r.note("coefficients: " + o.coefficients);
  return r;
}

DimReport tau_report(const Loaded& l, const Options& o) {
  Bimodule x = coefficients(l, o.coefficients);
  TauComputation c = compute_tau(l.algebra, x, o.max_degree, o.cell_cap);
  bool self = o.coefficients == "self";
  if (self && o.max_degree >= 1) {
    DegreeOne one = tau_degree_one(l.algebra);
    if (one.cohomology != c.tau.cohomology[1] || one.homology != c.tau.homology[1]) {
      throw InternalError("degree-one closed form disagrees with the alternating sum");
    }
  }
  std::optional<GlobalDimension> g;
  if (self) g = global_dimension(c.table);
  VanishingReport v = vanishing_report(c.tau, c.mult, o.max_degree, g);
  DimReport r;
  for (std::size_t n = 1; n <= o.max_degree; ++n) r.add("tauHH_cohomology", n, c.tau.cohomology[n]);
  for (std::size_t n = 1; n <= o.max_degree; ++n) r.add("tauHH_homology", n, c.tau.homology[n]);
  r.note("coefficients: " + o.coefficients);
  auto tail = [&](const char* what, const std::optional<std::size_t>& t) {
    r.note(std::string(what) + (t ? " vanishes from degree " + std::to_string(*t) + " to " +
                                        std::to_string(o.max_degree)
                                  : " does not vanish in degree " + std::to_string(o.max_degree)));
  };
  tail("tau cohomology", v.cohomology_tail);
  tail("tau homology", v.homology_tail);
  if (v.top_degree_checked) {
    r.note("tau homology vanishes in the global dimension " + std::to_string(*v.top_degree_checked));
  }
  return r;
}

DimReport rsq_report(const Loaded& l, const Options& o) {
  require_radical_square_zero(l.algebra);
  const Quiver& q = l.algebra.quiver();
  RsqDims d = rsq_dims(q, l.algebra.field().characteristic(), o.max_degree);
  RsqDims direct = rsq_direct_dims(q, l.algebra.field(), o.max_degree);
  if (d.hh_homology != direct.hh_homology || d.tau_homology != direct.tau_homology ||
      (d.cohomology_available && (d.hh_cohomology != direct.hh_cohomology ||
                                  d.tau_cohomology != direct.tau_cohomology))) {
    throw InternalError("closed forms disagree with the minimal complex");
  }
  DimReport r;
  for (std::size_t n = 1; n <= o.max_degree; ++n) r.add("HH_homology", n, d.hh_homology[n]);
  for (std::size_t n = 1; n <= o.max_degree; ++n) r.add("tauHH_homology", n, d.tau_homology[n]);
  if (d.cohomology_available) {
    for (std::size_t n = 0; n <= o.max_degree; ++n) r.add("HH_cohomology", n, d.hh_cohomology[n]);
    for (std::size_t n = 1; n <= o.max_degree; ++n) r.add("tauHH_cohomology", n, d.tau_cohomology[n]);
  } else {
    r.note(d.unavailable_reason);
  }
  return r;
}

DimReport classify_report(const Loaded& l, std::size_t bound) {
  ExtTorTable t = ext_tor_table(l.algebra, bound);
  ClassificationReport c = classify(l.algebra, t);
  DimReport r;
  r.add("global_dimension", 0, c.global_dimension.value);
  r.add("plus_witnesses", bound, c.plus_witnesses.size());
  r.add("coplus_witnesses", bound, c.coplus_witnesses.size());
  r.note(c.global_dimension.exact ? "global dimension is exact" : "global dimension is a lower bound");
  r.note(std::string("infinite + global dimension: ") + verdict_name(c.plus));
  r.note(std::string("infinite co+ global dimension: ") + verdict_name(c.coplus));
  if (c.local) r.note("local");
  for (const auto& n : c.notes) r.note(n);
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hochschild and tau-Hochschild dimensions of bound quiver algebras", "tauhh"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--cell-cap", o.cell_cap, "Largest bar complex level")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", o.degree_cap, "Override the presentation's cap")
      ->check(CLI::PositiveNumber);

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Presentation file")->required();
  };
  auto degree_arg = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "Highest degree")->capture_default_str();
  };
  auto coeff_arg = [&](CLI::App* sub) {
    sub->add_option("--coefficients", o.coefficients, "self, dual or file")
        ->check(CLI::IsMember({"self", "dual", "file"}))
        ->capture_default_str();
  };
  auto* check = app.add_subcommand("check", "Build the algebra and print its basis data");
  file_arg(check);
  auto* ext = app.add_subcommand("ext", "Ext dimensions between simples");
  file_arg(ext);
  degree_arg(ext);
  auto* hh = app.add_subcommand("hh", "Hochschild (co)homology dimensions");
  file_arg(hh);
  degree_arg(hh);
  coeff_arg(hh);
  auto* tau = app.add_subcommand("tau", "tau-Hochschild (co)homology dimensions");
  file_arg(tau);
  degree_arg(tau);
  coeff_arg(tau);
  auto* rsq = app.add_subcommand("rsq", "Closed forms for radical square zero algebras");
  file_arg(rsq);
  degree_arg(rsq);
  auto* cls = app.add_subcommand("classify", "Infinite + and co+ global dimension probes");
  file_arg(cls);
  cls->add_option("--bound", o.bound, "Probe degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Loaded l = load(o);
    DimReport r;
    if (*check) {
      r = check_report(l);
    } else if (*ext) {
      r = ext_report(l, o.max_degree);
    } else if (*hh) {
      r = hh_report(l, o);
    } else if (*tau) {
      r = tau_report(l, o);
    } else if (*rsq) {
      r = rsq_report(l, o);
    } else {
      r = classify_report(l, o.bound);
    }
    out << render(r, parse_format(o.format));
    return kExitOk;
  } catch (const PresentationError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const AdmissibilityError& e) {
    err << "admissibility error: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace tauhh
