#include "lef/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "lef/report.hpp"

namespace lef::cli {

namespace {

FieldCtx make_ctx(unsigned long ch) {
  return ch == 0 ? FieldCtx::rationals()
                 : FieldCtx::prime_field(static_cast<std::uint32_t>(ch));
}

HomogPoly family_ell(const Scalar& b, const Scalar& c) {
  return HomogPoly::linear_form({b, c, -Scalar::one(b.ctx())});
}

void print_report(const LefschetzReport& rep, const std::string& format,
                  std::ostream& out) {
  out << (format == "structured" ? to_structured(rep) : render_table(rep));
}

struct FamilyOpts {
  unsigned t = 1;
  std::string a = "0", b = "1", c = "1";
  unsigned long ch = 0;
  std::string format = "table";
};

void add_family_options(CLI::App* cmd, FamilyOpts& o, bool with_bc,
                        bool with_format) {
  cmd->add_option("--t", o.t, "family parameter t (>= 1)")->required();
  cmd->add_option("--a", o.a, "section parameter a (default 0)");
  if (with_bc) {
    cmd->add_option("--b", o.b, "linear form coefficient b (default 1)");
    cmd->add_option("--c", o.c, "linear form coefficient c (default 1)");
  }
  cmd->add_option("--char", o.ch, "field characteristic, 0 or a prime");
  if (with_format)
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "structured"}));
}

void run_det(const FamilyOpts& o, std::ostream& out) {
  const FieldCtx ctx = make_ctx(o.ch);
  const Scalar a = Scalar::parse(o.a, ctx), b = Scalar::parse(o.b, ctx),
               c = Scalar::parse(o.c, ctx);
  const Scalar closed = det_M_closed(o.t, a, b, c);
  const Scalar gauss = det_gauss(matrix_M(o.t, a, b, c));
  out << "closed: " << closed.to_string() << "\n";
  out << "gauss: " << gauss.to_string() << "\n";
  out << "agree: " << (closed == gauss ? "true" : "false") << "\n";
}

void run_hilbert(const FamilyOpts& o, std::ostream& out) {
  const FieldCtx ctx = make_ctx(o.ch);
  const IdealPresentation ideal = ideal_J(o.t, Scalar::parse(o.a, ctx));
  for (unsigned d = 0; d <= 2 * o.t + 1; ++d) {
    if (d) out << " ";
    out << hilbert_function(ideal, d);
  }
  out << "\n";
}

void run_points(const FamilyOpts& o, std::ostream& out) {
  out << point_set(o.t, make_ctx(o.ch)).to_string();
}

void run_property(const FamilyOpts& o, LefschetzProperty property,
                  std::ostream& out) {
  const FieldCtx ctx = make_ctx(o.ch);
  const Scalar a = Scalar::parse(o.a, ctx);
  const IdealPresentation ideal = ideal_J(o.t, a);
  const HomogPoly ell =
      family_ell(Scalar::parse(o.b, ctx), Scalar::parse(o.c, ctx));
  LefschetzReport rep = property == LefschetzProperty::WLP
                            ? wlp_full(ideal, ell)
                            : slp_full(ideal, ell);
  rep.context.t = o.t;
  rep.context.a = a;
  print_report(rep, o.format, out);
}

void run_section(const FamilyOpts& o, std::ostream& out) {
  const FieldCtx ctx = make_ctx(o.ch);
  const Scalar a = Scalar::parse(o.a, ctx);
  const IdealPresentation section = hyperplane_section(lifted_I(o.t, ctx), a);
  const IdealPresentation direct = ideal_J(o.t, a);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"d", "section", "direct", "equal"});
  bool agree = true;
  for (unsigned d = 0; d <= 2 * o.t + 1; ++d) {
    const size_t s = graded_span_dim(section, d);
    const size_t j = graded_span_dim(direct, d);
    agree = agree && s == j;
    rows.push_back({std::to_string(d), std::to_string(s), std::to_string(j),
                    s == j ? "yes" : "no"});
  }
  out << format_columns(rows);
  out << "agree: " << (agree ? "true" : "false") << "\n";
}

struct SweepRow {
  std::string t, a, ch, verdict, witness, rank, note;
  std::string structured;
};

SweepRow sweep_cell(const SweepSpec& spec, unsigned t, const std::string& a_text,
                    std::uint32_t ch) {
  SweepRow row;
  row.t = std::to_string(t);
  row.ch = std::to_string(ch);
  row.a = a_text;
  row.witness = "-";
  row.rank = "-";
  try {
    const FieldCtx ctx = make_ctx(ch);
    const Scalar a = Scalar::parse(a_text, ctx);
    row.a = a.to_short_string();
    LefschetzReport rep;
    if (spec.property == LefschetzProperty::WLP) {
      rep = wlp_via_det(t, a, ctx);
      if (rep.witness)
        row.witness = "b=" + rep.witness->first.to_short_string() +
                      ", c=" + rep.witness->second.to_short_string();
    } else {
      rep = slp_full(ideal_J(t, a), family_ell(Scalar::one(ctx),
                                               Scalar::one(ctx)));
    }
    rep.context.t = t;
    rep.context.a = a;
    row.verdict = rep.verdict ? "true" : "false";
    row.note = rep.note;
    for (const auto& e : rep.degree_data)
      if (e.d == t && e.k == 1) row.rank = std::to_string(e.rank);
    row.structured = to_structured(rep);
  } catch (const Error& e) {
    row.verdict = "n/a";
    row.note = e.what();
    std::ostringstream cell;
    cell << "lefschetz.cell v1\n"
         << "t: " << row.t << "\na: " << a_text << "\nchar: " << row.ch
         << "\nerror: " << e.what() << "\nend\n";
    row.structured = cell.str();
  }
  return row;
}

}  // namespace

std::string run_sweep(const SweepSpec& spec) {
  if (spec.t_min < 1 || spec.t_max < spec.t_min)
    throw InvalidParameter("sweep needs 1 <= t-min <= t-max");
  if (spec.a_values.empty() || spec.characteristics.empty())
    throw InvalidParameter("sweep needs at least one a and one characteristic");
  if (spec.output_format != "table" && spec.output_format != "structured")
    throw InvalidParameter("unknown output format '" + spec.output_format + "'");

  struct Cell {
    unsigned t;
    size_t ai, ci;
  };
  std::vector<Cell> cells;
  for (unsigned t = spec.t_min; t <= spec.t_max; ++t)
    for (size_t ai = 0; ai < spec.a_values.size(); ++ai)
      for (size_t ci = 0; ci < spec.characteristics.size(); ++ci)
        cells.push_back({t, ai, ci});

  std::vector<SweepRow> rows(cells.size());
  // Cells are independent; the ordered write into rows keeps the output
  // byte-identical on any thread count.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i) {
    const Cell& cell = cells[static_cast<size_t>(i)];
    rows[static_cast<size_t>(i)] =
        sweep_cell(spec, cell.t, spec.a_values[cell.ai],
                   spec.characteristics[cell.ci]);
  }

  const char* name = spec.property == LefschetzProperty::WLP ? "WLP" : "SLP";
  if (spec.output_format == "structured") {
    std::string out;
    for (const auto& row : rows) {
      if (!out.empty()) out += "\n";
      out += row.structured;
    }
    return out;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({"t", "a", "char", "property", "verdict", "witness", "rank",
                   "note"});
  for (const auto& row : rows)
    table.push_back({row.t, row.a, row.ch, name, row.verdict, row.witness,
                     row.rank, row.note});
  return format_columns(table);
}

namespace {

struct SweepOpts {
  std::string property;
  unsigned t_min = 1, t_max = 1;
  std::vector<std::string> a_values{"0"};
  std::vector<unsigned long> chars{0};
  std::string format = "table";
};

struct ConjOpts {
  unsigned t_min = 1, t_max = 1;
  std::vector<std::string> a_values{"1", "2", "3", "4", "5"};
  unsigned long ch = 0;
  std::string format = "table";
};

void run_conjecture(const ConjOpts& o, std::ostream& out) {
  const FieldCtx ctx = make_ctx(o.ch);
  if (!ctx.is_rational())
    throw InvalidParameter("conjecture check runs in characteristic 0");
  std::vector<std::vector<std::string>> table;
  table.push_back({"t", "a", "verdict", "note"});
  std::string structured;
  for (unsigned t = o.t_min; t <= o.t_max; ++t) {
    for (const auto& a_text : o.a_values) {
      std::vector<std::string> row{std::to_string(t), a_text, "", ""};
      try {
        const Scalar a = Scalar::parse(a_text, ctx);
        row[1] = a.to_short_string();
        const LefschetzReport rep = slp_conjecture_check(t, a);
        row[2] = rep.verdict ? "true" : "false";
        if (!structured.empty()) structured += "\n";
        structured += to_structured(rep);
      } catch (const Error& e) {
        row[2] = "n/a";
        row[3] = e.what();
        if (!structured.empty()) structured += "\n";
        structured += "lefschetz.cell v1\nt: " + std::to_string(t) +
                      "\na: " + a_text + "\nchar: " + std::to_string(o.ch) +
                      "\nerror: " + e.what() + "\nend\n";
      }
      table.push_back(std::move(row));
    }
  }
  out << (o.format == "structured" ? structured : format_columns(table));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact Lefschetz-property decisions for almost complete "
               "intersections and their hyperplane sections"};
  app.require_subcommand(1);

  FamilyOpts det_o, hil_o, pts_o, wlp_o, slp_o, sec_o;
  SweepOpts sweep_o;
  ConjOpts conj_o;

  auto* det = app.add_subcommand(
      "det", "decision-matrix determinant: closed form next to elimination");
  add_family_options(det, det_o, true, false);
  det->callback([&] { run_det(det_o, out); });

  auto* hil = app.add_subcommand(
      "hilbert", "Hilbert function of the section family through degree 2t+1");
  add_family_options(hil, hil_o, false, false);
  hil->callback([&] { run_hilbert(hil_o, out); });

  auto* pts = app.add_subcommand(
      "points", "point configuration cut out by the lifted monomial ideal");
  add_family_options(pts, pts_o, false, false);
  pts->callback([&] { run_points(pts_o, out); });

  auto* wlp = app.add_subcommand(
      "wlp", "weak Lefschetz scan of the section family for ell = bx+cy-z");
  add_family_options(wlp, wlp_o, true, true);
  wlp->callback([&] { run_property(wlp_o, LefschetzProperty::WLP, out); });

  auto* slp = app.add_subcommand(
      "slp", "strong Lefschetz scan of the section family for ell = bx+cy-z");
  add_family_options(slp, slp_o, true, true);
  slp->callback([&] { run_property(slp_o, LefschetzProperty::SLP, out); });

  auto* sec = app.add_subcommand(
      "section", "substitute the section hyperplane into the lifting and "
                 "compare with the direct presentation");
  add_family_options(sec, sec_o, false, false);
  sec->callback([&] { run_section(sec_o, out); });

  auto* sweep = app.add_subcommand("sweep", "grid of decisions over t, a and "
                                            "the characteristic");
  sweep->add_option("--property", sweep_o.property, "wlp or slp")
      ->required()
      ->check(CLI::IsMember({"wlp", "slp"}));
  sweep->add_option("--t-min", sweep_o.t_min, "smallest t (default 1)");
  sweep->add_option("--t-max", sweep_o.t_max, "largest t")->required();
  sweep->add_option("--a", sweep_o.a_values,
                    "section parameter, repeatable (default 0)");
  sweep->add_option("--char", sweep_o.chars,
                    "characteristic, repeatable (default 0)");
  sweep->add_option("--format", sweep_o.format, "output format")
      ->check(CLI::IsMember({"table", "structured"}));
  sweep->callback([&] {
    SweepSpec spec;
    spec.t_min = sweep_o.t_min;
    spec.t_max = sweep_o.t_max;
    spec.a_values = sweep_o.a_values;
    for (unsigned long ch : sweep_o.chars)
      spec.characteristics.push_back(static_cast<std::uint32_t>(
          make_ctx(ch).characteristic));
    spec.property = sweep_o.property == "wlp" ? LefschetzProperty::WLP
                                              : LefschetzProperty::SLP;
    spec.output_format = sweep_o.format;
    out << run_sweep(spec);
  });

  auto* conj = app.add_subcommand(
      "conjecture", "odd-power isomorphism check across the peak, "
                    "characteristic 0");
  conj->add_option("--t-min", conj_o.t_min, "smallest t (default 1)");
  conj->add_option("--t-max", conj_o.t_max, "largest t")->required();
  conj->add_option("--a", conj_o.a_values,
                   "section parameter, repeatable (default 1..5)");
  conj->add_option("--char", conj_o.ch, "must be 0");
  conj->add_option("--format", conj_o.format, "output format")
      ->check(CLI::IsMember({"table", "structured"}));
  conj->callback([&] { run_conjecture(conj_o, out); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace lef::cli
