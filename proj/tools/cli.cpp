#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "nabext/classifier.hpp"
#include "nabext/cochain.hpp"
#include "nabext/extension.hpp"
#include "nabext/gauge.hpp"
#include "nabext/io.hpp"

namespace nabext::cli {

namespace {

using io::InputError;
using io::json;

struct Globals {
  std::string field;
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format = "json";
};

struct Result {
  int code = kOk;
  json doc;
  std::string text;
};

class Runner {
public:
  explicit Runner(const Globals &g) : g_(g) {
    if (!g_.field.empty()) {
      try {
        field_ = Field::parse(g_.field);
      } catch (const std::invalid_argument &e) {
        throw InputError(std::string("--field: ") + e.what());
      }
    }
  }

  void expect_field(Field f, const std::string &what) const {
    if (field_ && *field_ != f)
      throw InputError("field mismatch: " + what + " is over " + f.name() + " but --field is " +
                       field_->name());
  }

  Algebra load_algebra(const std::string &path) const {
    Algebra a = io::algebra_from_json(io::read_json_file(path));
    expect_field(a.field(), path);
    return a;
  }

  NabCocycle load_cocycle(const std::string &path) const {
    NabCocycle c = io::cocycle_from_json(io::read_json_file(path));
    expect_field(c.A.field(), path);
    return c;
  }

  MultilinearMap load_map(const std::string &path, std::optional<Field> fallback) const {
    MultilinearMap m = io::map_from_json(io::read_json_file(path), fallback ? fallback : field_);
    expect_field(m.field(), path);
    return m;
  }

  ExtensionPresentation load_extension(const std::string &path) const {
    ExtensionPresentation e = io::extension_from_json(io::read_json_file(path));
    expect_field(e.E.field(), path);
    return e;
  }

  Result check_assoc(const std::string &path) const {
    const Algebra a = load_algebra(path);
    Result r;
    if (auto w = find_associator_witness(a)) {
      json value = json::array();
      for (const Scalar &s : w->value)
        value.push_back(s.to_string());
      r.code = kCheckFailed;
      r.doc = {{"associative", false},
               {"witness", {{"triple", w->basis_triple}, {"associator", std::move(value)}}}};
      r.text = "not associative at (" + a.basis()[w->basis_triple[0]] + ", " +
               a.basis()[w->basis_triple[1]] + ", " + a.basis()[w->basis_triple[2]] + ")\n";
    } else {
      r.doc = {{"associative", true}};
      r.text = "associative\n";
    }
    return r;
  }

  Result hochschild(const std::string &alg_path, const std::string &map_path) const {
    const Algebra a = load_algebra(alg_path);
    const MultilinearMap f = load_map(map_path, a.field());
    if (f.field() != a.field())
      throw InputError("field mismatch between algebra and map");
    if (f.source_dim() != a.dim() || f.target_dim() != a.dim())
      throw InputError("map must be an endomorphism cochain on the algebra's space");
    Result r;
    r.doc = io::map_to_json(hochschild_delta(f, a));
    return r;
  }

  Result bracket(const std::string &f_path, const std::string &g_path) const {
    const MultilinearMap f = load_map(f_path, std::nullopt);
    const MultilinearMap g = load_map(g_path, f.field());
    if (f.field() != g.field())
      throw InputError("field mismatch between the two maps");
    if (f.source_dim() != g.source_dim() || f.source_dim() != f.target_dim() ||
        g.source_dim() != g.target_dim())
      throw InputError("bracket needs endomorphism cochains on one space");
    Result r;
    r.doc = io::map_to_json(gerstenhaber_bracket(f, g));
    return r;
  }

  Result mc_check(const std::string &path) const {
    const NabCocycle c = load_cocycle(path);
    const auto violations = check_cocycle(c);
    const Algebra base = direct_sum_space(c.A, c.B);
    const LElement residual = mc_residual(cocycle_to_mc(c), base);
    const bool cocycle = violations.empty(), mc = residual.is_zero();
    Result r;
    r.doc = {{"cocycle", cocycle}, {"maurer_cartan", mc}};
    if (cocycle != mc) {
      r.code = kInternalError;
      r.doc["error"] = "cocycle and Maurer–Cartan verdicts disagree";
    } else if (!cocycle) {
      r.code = kCheckFailed;
      json vs = json::array();
      for (const auto &v : violations)
        vs.push_back(io::violation_to_json(v));
      r.doc["violations"] = std::move(vs);
      r.doc["residual"] = io::map_to_json(residual.map(), false);
    }
    r.text = std::string(cocycle ? "valid" : "invalid") + " cocycle; " +
             (mc ? "Maurer–Cartan" : "not Maurer–Cartan") + "\n";
    return r;
  }

  Result build(const std::string &path) const {
    const NabCocycle c = load_cocycle(path);
    const ExtensionPresentation e = ExtensionPresentation::from_cocycle(c);
    Result r;
    r.doc = io::extension_to_json(e);
    r.doc["associative"] = is_associative(e.E);
    return r;
  }

  Result extract(const std::string &path, const std::string &section_path) const {
    const ExtensionPresentation e = load_extension(path);
    Result r;
    const Diagnostics d = verify_extension(e);
    if (!d.ok()) {
      r.code = kCheckFailed;
      r.doc = {{"extension", false}, {"failures", d.failures}};
      return r;
    }
    const Section s = section_path.empty()
                          ? any_section(e)
                          : io::section_from_json(io::read_json_file(section_path), e);
    if (!is_section(e, s))
      throw InputError("p ∘ s is not the identity on B");
    r.doc = io::cocycle_to_json(cocycle_from_section(e, s));
    return r;
  }

  Result gauge(const std::string &c_path, const std::string &beta_path, bool series) const {
    const NabCocycle c = load_cocycle(c_path);
    const GaugeParam beta =
        io::beta_from_json(io::read_json_file(beta_path), c.A.field(), c.A.dim(), c.B.dim());
    const NabCocycle moved = apply_cocycle_equivalence(c, beta);
    const Algebra base = direct_sum_space(c.A, c.B);
    const LElement x = cocycle_to_mc(c);
    LElement gx = series ? gauge_series(x, beta, base) : gauge_closed_form(x, beta, base);
    Result r;
    r.doc = io::cocycle_to_json(moved);
    if (cocycle_to_mc(moved) != gx) {
      r.code = kInternalError;
      r.doc = {{"error", "cocycle equivalence and gauge action disagree"}};
    }
    return r;
  }

  Result equiv(const std::string &p1, const std::string &p2, const std::string &beta_path) const {
    const NabCocycle c1 = load_cocycle(p1);
    const NabCocycle c2 = load_cocycle(p2);
    if (c1.A != c2.A || c1.B != c2.B)
      throw InputError("the two cocycles are over different A or B");
    Result r;
    std::optional<GaugeParam> witness;
    if (!beta_path.empty()) {
      GaugeParam beta = io::beta_from_json(io::read_json_file(beta_path), c1.A.field(),
                                           c1.A.dim(), c1.B.dim());
      if (apply_cocycle_equivalence(c1, beta) == c2)
        witness = beta;
    } else {
      if (!c1.A.field().is_prime())
        throw InputError("witness search needs a finite field; pass --beta over Q");
      for (Matrix &m : all_matrices(c1.A.field(), c1.A.dim(), c1.B.dim(), g_.budget))
        if (apply_cocycle_equivalence(c1, GaugeParam{m}) == c2) {
          witness = GaugeParam{std::move(m)};
          break;
        }
    }
    r.doc = {{"equivalent", witness.has_value()}};
    if (witness)
      r.doc["beta"] = io::beta_to_json(*witness)["beta"];
    else
      r.code = kCheckFailed;
    return r;
  }

  Result census_run(std::size_t dim_a, std::size_t dim_b, const std::string &a2,
                    const std::string &b2, const std::string &a_path, const std::string &b_path,
                    std::optional<std::uint64_t> sample) const {
    const Field f = field_.value_or(Field::prime(2));
    Algebra A = a_path.empty() ? preset_algebra(f, dim_a, a2) : load_algebra(a_path);
    Algebra B = b_path.empty() ? preset_algebra(f, dim_b, b2) : load_algebra(b_path);
    std::optional<CandidateSpace> space;
    try {
      space.emplace(std::move(A), std::move(B));
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
    EnumerationOptions opts;
    opts.budget = g_.budget;
    opts.jobs = g_.jobs;
    opts.sample = sample;
    opts.seed = g_.seed.value_or(0);
    if (g_.seed && !sample)
      opts.sample = std::min<std::uint64_t>(g_.budget, 4096);
    const ClassificationReport report = census(*space, opts);
    Result r;
    r.code = report.ok() ? kOk : kCheckFailed;
    r.doc = io::report_to_json(report);
    r.text = format_summary(report);
    return r;
  }

  Result abelianize(const std::string &path) const {
    const NabCocycle c = load_cocycle(path);
    Result r;
    if (!c.A.product().is_zero() || !is_cocycle(c)) {
      r.code = kCheckFailed;
      r.doc = {{"abelian", false},
               {"reason", !c.A.product().is_zero() ? "A has nonzero multiplication"
                                                   : "not a valid cocycle"}};
      return r;
    }
    const AbelianData d = abelian_specialize(c);
    auto bil = [](const BilinearMap &m) {
      json out = json::array();
      for (std::size_t k = 0; k < m.out_dim(); ++k)
        for (std::size_t i = 0; i < m.left_dim(); ++i)
          for (std::size_t j = 0; j < m.right_dim(); ++j)
            if (!m.at(k, i, j).is_zero())
              out.push_back({k, i, j, m.at(k, i, j).to_string()});
      return out;
    };
    r.doc = {{"abelian", true},
             {"left_action", bil(d.left_action)},
             {"right_action", bil(d.right_action)},
             {"chi", io::map_to_json(d.chi, false)},
             {"delta_chi", io::map_to_json(d.delta_chi, false)}};
    return r;
  }

private:
  const Globals &g_;
  std::optional<Field> field_;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Non-abelian extensions of associative algebras over exact fields.",
               "nabext"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "Q or F<p>; files over another field are rejected");
  app.add_option("--budget", g.budget, "maximum exhaustive enumeration size");
  app.add_option("--jobs", g.jobs, "worker threads for enumeration")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "seed for sampled enumeration");
  app.add_option("--output", g.output, "write the document to this file");
  app.add_option("--format", g.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string p1, p2, section, beta;
  bool series = false;
  std::size_t dim_a = 1, dim_b = 1;
  std::string a2 = "zero", b2 = "idem", a_path, b_path;
  std::optional<std::uint64_t> sample;

  auto *check_assoc = app.add_subcommand("check-assoc", "test associativity of an algebra");
  check_assoc->add_option("algebra", p1)->required();
  auto *delta = app.add_subcommand("hochschild-delta", "Hochschild differential of a cochain");
  delta->add_option("algebra", p1)->required();
  delta->add_option("map", p2)->required();
  auto *brk = app.add_subcommand("bracket", "Gerstenhaber bracket [f, g]");
  brk->add_option("f", p1)->required();
  brk->add_option("g", p2)->required();
  auto *mc = app.add_subcommand("mc-check", "cocycle identities and Maurer–Cartan equation");
  mc->add_option("cocycle", p1)->required();
  auto *bext = app.add_subcommand("build-extension", "the algebra A ⊕ B twisted by a cocycle");
  bext->add_option("cocycle", p1)->required();
  auto *extract = app.add_subcommand("extract-cocycle", "cocycle of an extension and section");
  extract->add_option("extension", p1)->required();
  extract->add_option("--section", section, "section file; default solves p s = id");
  auto *gauge = app.add_subcommand("gauge", "act on a cocycle by β");
  gauge->add_option("cocycle", p1)->required();
  gauge->add_option("beta", p2)->required();
  gauge->add_flag("--series", series, "cross-check with the exponential series");
  auto *eq = app.add_subcommand("equiv-check", "decide whether two cocycles are equivalent");
  eq->add_option("first", p1)->required();
  eq->add_option("second", p2)->required();
  eq->add_option("--beta", beta, "check this witness instead of searching");
  auto *cen = app.add_subcommand("census", "enumerate and classify cocycles over F_p");
  cen->add_option("--dimA", dim_a)->check(CLI::Range(0, 4));
  cen->add_option("--dimB", dim_b)->check(CLI::Range(0, 4));
  cen->add_option("--a2", a2, "preset for A")->check(CLI::IsMember({"zero", "idem"}));
  cen->add_option("--b2", b2, "preset for B")->check(CLI::IsMember({"zero", "idem"}));
  cen->add_option("--A", a_path, "algebra file for A (overrides --dimA/--a2)");
  cen->add_option("--B", b_path, "algebra file for B (overrides --dimB/--b2)");
  cen->add_option("--sample", sample, "number of random candidates");
  auto *abel = app.add_subcommand("abelianize", "bimodule and Hochschild cocycle when A·A = 0");
  abel->add_option("cocycle", p1)->required();
  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Result result;
  try {
    Runner r(g);
    if (check_assoc->parsed())
      result = r.check_assoc(p1);
    else if (delta->parsed())
      result = r.hochschild(p1, p2);
    else if (brk->parsed())
      result = r.bracket(p1, p2);
    else if (mc->parsed())
      result = r.mc_check(p1);
    else if (bext->parsed())
      result = r.build(p1);
    else if (extract->parsed())
      result = r.extract(p1, section);
    else if (gauge->parsed())
      result = r.gauge(p1, p2, series);
    else if (eq->parsed())
      result = r.equiv(p1, p2, beta);
    else if (cen->parsed())
      result = r.census_run(dim_a, dim_b, a2, b2, a_path, b_path, sample);
    else if (abel->parsed())
      result = r.abelianize(p1);
  } catch (const InputError &e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument &e) {
    err << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error &e) {
    err << "unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error &e) {
    err << "overflow: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  std::string body = g.format == "text" && !result.text.empty() ? result.text
                                                                : result.doc.dump(2) + "\n";
  if (!g.output.empty()) {
    std::ofstream file(g.output, std::ios::binary);
    if (!file) {
      err << "cannot write '" << g.output << "'\n";
      return kInputError;
    }
    file << body;
  } else {
    out << body;
  }
  return result.code;
}

} // namespace nabext::cli
