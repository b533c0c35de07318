#include "lef/report.hpp"

#include <charconv>
#include <sstream>

namespace lef {

namespace {

constexpr const char* kHeader = "lefschetz.report v1";

std::string scalar_field(const std::optional<Scalar>& s) {
  return s ? s->to_short_string() : "-";
}

std::string ell_field(const std::optional<HomogPoly>& ell) {
  if (!ell) return "-";
  std::string s;
  for (unsigned i = 0; i < ell->nvars(); ++i) {
    std::vector<unsigned> e(ell->nvars(), 0);
    e[i] = 1;
    if (i) s += ", ";
    s += ell->coeff(Monomial(std::move(e))).to_short_string();
  }
  return s;
}

class LineReader {
public:
  explicit LineReader(const std::string& text) : in_(text) {}

  std::string expect_key(const std::string& key) {
    std::string line;
    if (!std::getline(in_, line))
      throw InvalidParameter("report ends before '" + key + "'");
    const std::string prefix = key + ": ";
    if (!line.starts_with(prefix))
      throw InvalidParameter("expected '" + key + ":' line, got '" + line + "'");
    return line.substr(prefix.size());
  }

  void expect_line(const std::string& want) {
    std::string line;
    if (!std::getline(in_, line) || line != want)
      throw InvalidParameter("expected '" + want + "' line");
  }

  void expect_end() {
    std::string line;
    if (std::getline(in_, line))
      throw InvalidParameter("trailing content after report");
  }

private:
  std::istringstream in_;
};

unsigned long parse_unsigned(const std::string& s) {
  unsigned long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidParameter("malformed number '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InvalidParameter("malformed boolean '" + s + "'");
}

// "key=value" pieces of a map line, in fixed order.
std::string map_piece(std::istringstream& in, const std::string& key) {
  std::string tok;
  if (!(in >> tok) || !tok.starts_with(key + "="))
    throw InvalidParameter("malformed map line near '" + tok + "'");
  return tok.substr(key.size() + 1);
}

}  // namespace

std::string to_structured(const LefschetzReport& rep) {
  std::ostringstream out;
  out << kHeader << "\n";
  out << "property: " << (rep.property == LefschetzProperty::WLP ? "WLP" : "SLP")
      << "\n";
  out << "char: " << rep.context.characteristic << "\n";
  out << "t: " << (rep.context.t ? std::to_string(*rep.context.t) : "-") << "\n";
  out << "a: " << scalar_field(rep.context.a) << "\n";
  out << "ell: " << ell_field(rep.ell) << "\n";
  out << "verdict: " << (rep.verdict ? "true" : "false") << "\n";
  out << "witness.b: " << scalar_field(
      rep.witness ? std::optional<Scalar>(rep.witness->first) : std::nullopt)
      << "\n";
  out << "witness.c: " << scalar_field(
      rep.witness ? std::optional<Scalar>(rep.witness->second) : std::nullopt)
      << "\n";
  out << "note: " << (rep.note.empty() ? "-" : rep.note) << "\n";
  out << "maps: " << rep.degree_data.size() << "\n";
  for (const auto& e : rep.degree_data) {
    out << "map: d=" << e.d << " k=" << e.k << " source=" << e.dim_source
        << " target=" << e.dim_target << " rank=" << e.rank
        << " maximal=" << (e.maximal ? "true" : "false") << "\n";
  }
  out << "end\n";
  return out.str();
}

LefschetzReport parse_report(const std::string& text) {
  LineReader in(text);
  in.expect_line(kHeader);

  LefschetzReport rep;
  const std::string prop = in.expect_key("property");
  if (prop == "WLP")
    rep.property = LefschetzProperty::WLP;
  else if (prop == "SLP")
    rep.property = LefschetzProperty::SLP;
  else
    throw InvalidParameter("unknown property '" + prop + "'");

  const unsigned long ch = parse_unsigned(in.expect_key("char"));
  const FieldCtx ctx = ch == 0
      ? FieldCtx::rationals()
      : FieldCtx::prime_field(static_cast<std::uint32_t>(ch));
  rep.context.characteristic = ctx.characteristic;

  const std::string t = in.expect_key("t");
  if (t != "-") rep.context.t = static_cast<unsigned>(parse_unsigned(t));
  const std::string a = in.expect_key("a");
  if (a != "-") rep.context.a = Scalar::parse(a, ctx);

  const std::string ell = in.expect_key("ell");
  if (ell != "-") {
    std::vector<Scalar> coeffs;
    size_t pos = 0;
    while (pos <= ell.size()) {
      size_t comma = ell.find(',', pos);
      if (comma == std::string::npos) comma = ell.size();
      coeffs.push_back(Scalar::parse(ell.substr(pos, comma - pos), ctx));
      pos = comma + 2;  // skip ", "
    }
    rep.ell = HomogPoly::linear_form(coeffs);
  }

  rep.verdict = parse_bool(in.expect_key("verdict"));

  const std::string wb = in.expect_key("witness.b");
  const std::string wc = in.expect_key("witness.c");
  if ((wb == "-") != (wc == "-"))
    throw InvalidParameter("witness must carry both coordinates");
  if (wb != "-")
    rep.witness = {Scalar::parse(wb, ctx), Scalar::parse(wc, ctx)};

  const std::string note = in.expect_key("note");
  rep.note = note == "-" ? "" : note;

  const unsigned long nmaps = parse_unsigned(in.expect_key("maps"));
  for (unsigned long i = 0; i < nmaps; ++i) {
    std::istringstream line(in.expect_key("map"));
    DegreeMapData e;
    e.d = static_cast<unsigned>(parse_unsigned(map_piece(line, "d")));
    e.k = static_cast<unsigned>(parse_unsigned(map_piece(line, "k")));
    e.dim_source = parse_unsigned(map_piece(line, "source"));
    e.dim_target = parse_unsigned(map_piece(line, "target"));
    e.rank = parse_unsigned(map_piece(line, "rank"));
    e.maximal = parse_bool(map_piece(line, "maximal"));
    std::string rest;
    if (line >> rest) throw InvalidParameter("trailing map fields");
    rep.degree_data.push_back(e);
  }
  in.expect_line("end");
  in.expect_end();
  return rep;
}

std::string format_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_table(const LefschetzReport& rep) {
  std::ostringstream out;
  out << "property: "
      << (rep.property == LefschetzProperty::WLP ? "WLP" : "SLP") << "\n";
  out << "char:     " << rep.context.characteristic << "\n";
  if (rep.context.t) out << "t:        " << *rep.context.t << "\n";
  if (rep.context.a)
    out << "a:        " << rep.context.a->to_short_string() << "\n";
  if (rep.ell) out << "ell:      " << rep.ell->to_string() << "\n";
  out << "verdict:  " << (rep.verdict ? "true" : "false") << "\n";
  if (rep.witness)
    out << "witness:  b=" << rep.witness->first.to_short_string()
        << ", c=" << rep.witness->second.to_short_string() << "\n";
  if (!rep.note.empty()) out << "note:     " << rep.note << "\n";
  if (!rep.degree_data.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"d", "k", "source", "target", "rank", "maximal"});
    for (const auto& e : rep.degree_data)
      rows.push_back({std::to_string(e.d), std::to_string(e.k),
                      std::to_string(e.dim_source), std::to_string(e.dim_target),
                      std::to_string(e.rank), e.maximal ? "yes" : "no"});
    out << format_columns(rows);
  }
  return out.str();
}

}  // namespace lef
