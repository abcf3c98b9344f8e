#include <spinchern/char_classes.hpp>
#include <spinchern/error.hpp>
#include <spinchern/report.hpp>
#include <spinchern/steenrod.hpp>

#include <sstream>

namespace spinchern {

using nlohmann::json;

ReportFormat parse_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "md" || text == "markdown") return ReportFormat::Markdown;
  if (text == "plain") return ReportFormat::Plain;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(text) + "' (expected json, md or plain)");
}

json series_json(const TruncatedPoly& p) {
  json coeffs = json::object();
  for (int k : p.support()) coeffs[std::to_string(k)] = p.coefficient(k).get_str();
  return {{"text", p.to_string()},
          {"coefficients", coeffs},
          {"ring", p.ring() == CoeffRing::Mod2 ? "Z/2" : "Z"},
          {"cutoff", p.cutoff()}};
}

namespace {

json header(std::string_view command) {
  return {{"tool_version", std::string(kToolVersion)}, {"command", std::string(command)}};
}

std::string u_power_text(int k) { return k == 0 ? "1" : (k == 1 ? "u" : "u^" + std::to_string(k)); }

json weights_json(const WeightMultiset& w) {
  json out = json::object();
  for (const auto& [k, a] : w.weights()) out[std::to_string(k)] = a;
  return out;
}

json top_class_json(const TopClass& t) {
  return {{"class", t.label},
          {"u_power", t.u_power},
          {"text", t.top_is_u_power ? u_power_text(t.u_power) : "0"},
          {"total_class", series_json(t.total)},
          {"only_one_and_top", t.only_one_and_top},
          {"indecomposability", std::string(verdict_name(t.verdict))}};
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

// ---------------------------------------------------------------------------
// prop2

Report run_prop2(int m_lo, int m_hi) {
  if (m_lo < kProp2MinM || m_hi > kProp2MaxM || m_lo > m_hi)
    fail(ErrorCode::InvalidArgument, "prop2 needs " + std::to_string(kProp2MinM) + " <= m_lo <= m_hi <= " +
                                         std::to_string(kProp2MaxM) + ", got " + std::to_string(m_lo) + ".." +
                                         std::to_string(m_hi));
  Report r{"prop2", header("prop2"), true};
  json entries = json::array();
  int failed = 0;
  for (int m = m_lo; m <= m_hi; ++m) {
    const int cutoff = 1 << (m + 1);
    for (int n : {2 * m, 2 * m + 1}) {
      const SpinGroup g(n);
      std::vector<RepSymbol> symbols;
      const int top_lambda = g.is_even() ? m - 2 : m - 1;
      for (int i = 1; i <= top_lambda; ++i) symbols.push_back(RepSymbol::lambda(i));
      if (g.is_even()) {
        symbols.push_back(RepSymbol::delta_plus());
        symbols.push_back(RepSymbol::delta_minus());
      } else {
        symbols.push_back(RepSymbol::delta());
      }
      for (const auto& s : symbols) {
        const UniLaurent ch = character_on_circle(g, s);
        const BigInt dim = evaluate_at_one(ch);
        const SWSeries c = total_chern(weights_from_character(ch), cutoff, CoeffRing::Mod2);
        int top = 0;
        if (s.kind == SymbolKind::DeltaPlus || s.kind == SymbolKind::DeltaMinus) top = 1 << (m - 1);
        if (s.kind == SymbolKind::Delta) top = 1 << m;
        const SWSeries expected =
            top == 0 ? TruncatedPoly::one(CoeffRing::Mod2, cutoff)
                     : TruncatedPoly::one(CoeffRing::Mod2, cutoff) + TruncatedPoly::monomial(CoeffRing::Mod2, cutoff, top);
        bool ok = c == expected;
        json entry = {{"m", m},         {"n", n},
                      {"symbol", s.name()}, {"dimension", dim.get_str()},
                      {"cutoff", cutoff}, {"computed", series_json(c)},
                      {"expected", expected.to_string()}};
        if (top > 0) {
          // The top class sits in cohomological degree 2 dim.
          const bool degree_ok = BigInt(top) == dim;
          entry["top_degree"] = 2 * top;
          entry["top_degree_is_twice_dimension"] = degree_ok;
          ok = ok && degree_ok;
        }
        entry["passed"] = ok;
        if (!ok) ++failed;
        entries.push_back(std::move(entry));
      }
    }
  }
  r.body["convention"] = std::string(convention_name(LambdaConvention::Literal));
  r.body["m_range"] = {m_lo, m_hi};
  r.body["entries"] = std::move(entries);
  r.body["checked"] = r.body["entries"].size();
  r.body["failed"] = failed;
  r.passed = failed == 0;
  r.body["passed"] = r.passed;
  return r;
}

// ---------------------------------------------------------------------------
// theorem1

Report run_theorem1(std::optional<ExceptionalGroup> group, LambdaConvention convention, int cutoff) {
  if (cutoff < 0) fail(ErrorCode::InvalidArgument, "cutoff must be nonnegative");
  std::vector<ExceptionalCase> cases;
  for (const auto& c : builtin_cases())
    if (!group || c.group == *group) cases.push_back(c);
  for (const auto& c : cases)
    if (cutoff > 0 && cutoff < required_cutoff(c))
      fail(ErrorCode::InvalidArgument, "cutoff " + std::to_string(cutoff) + " is below the " +
                                           std::to_string(required_cutoff(c)) + " u-powers needed for " +
                                           std::string(group_name(c.group)));

  Report r{"theorem1", header("theorem1"), true};
  json out = json::array();
  for (const auto& c : cases) {
    const CaseReport cr = verify_case(c, {convention, cutoff});
    json v = {{"membership", cr.primary.verdict == ImageVerdict::NotInImage ? "not_in_image" : "in_image"},
              {"indecomposability", std::string(verdict_name(cr.primary.verdict))},
              {"square_relation", cr.square_relation ? pass_fail(*cr.square_relation) : "n/a"},
              {"dimension", pass_fail(cr.dimension.passed)},
              {"remark_generation", pass_fail(cr.remark_generation)},
              {"convention_invariance", pass_fail(cr.convention_invariant)},
              {"expected_matches_h", pass_fail(cr.expected_matches_h)}};
    json entry = {
        {"group", std::string(group_name(c.group))},
        {"n", c.n},
        {"m", c.n / 2},
        {"h", cr.h},
        {"deg_z", cr.deg_z},
        {"class_kind", c.kind == ClassKind::Chern ? "Chern" : "SW"},
        {"convention", std::string(convention_name(convention))},
        {"cutoff", cr.cutoff},
        {"restriction", c.restriction.to_string()},
        {"spinor", c.spinor.name()},
        {"spinor_dimension", c.spinor_dimension},
        {"ambient", c.ambient},
        {"character", cr.character.to_string()},
        {"total_class", series_json(cr.primary.total)},
        {"top_class", top_class_json(cr.primary)},
        {"expected",
         {{"class", c.class_label()}, {"u_power", c.expected_u_power()}, {"degree", c.expected_top_degree},
          {"text", u_power_text(c.expected_u_power())}}},
        {"image_subring", {{"h", cr.image.h}, {"generator_power", cr.image.generator_power}}},
        {"verdicts", v},
        {"dimension",
         {{"ambient", cr.dimension.ambient_dimension},
          {"computed", cr.dimension.computed.get_str()},
          {"paper_literal", cr.dimension.literal.get_str()},
          {"vector_rep", cr.dimension.vector_rep.get_str()}}},
        {"notes", cr.notes},
        {"passed", cr.passed()},
    };
    entry["complexified"] = cr.complexified ? top_class_json(*cr.complexified) : json(nullptr);
    r.passed = r.passed && cr.passed();
    out.push_back(std::move(entry));
  }
  r.body["convention"] = std::string(convention_name(convention));
  r.body["cases"] = std::move(out);
  r.body["passed"] = r.passed;
  return r;
}

// ---------------------------------------------------------------------------
// quillen

Report run_quillen(int n_lo, int n_hi) {
  if (n_lo < 6) fail(ErrorCode::Domain, "quillen requires n >= 6, got n = " + std::to_string(n_lo));
  if (n_lo > n_hi) fail(ErrorCode::InvalidArgument, "empty n range");
  if (n_hi > kMaxQuillenN) fail(ErrorCode::Domain, "quillen supports n <= " + std::to_string(kMaxQuillenN));
  Report r{"quillen", header("quillen"), true};
  json entries = json::array();
  json notes = json::array();
  for (int n = n_lo; n <= n_hi; ++n) {
    const SpinorTypeInfo info = quillen_h(n);
    json entry = {{"n", n},
                  {"m", info.m},
                  {"type", std::string(spinor_type_name(info.type))},
                  {"h", info.h},
                  {"deg_z", info.deg_z},
                  {"tabulated_h", info.tabulated_h},
                  {"discrepancy", info.discrepancy ? json(*info.discrepancy) : json(nullptr)}};
    if (info.discrepancy) notes.push_back("n = " + std::to_string(n) + ": " + *info.discrepancy);
    if (n <= kMaxPresentationN) {
      const SpinPresentation pres = j_ideal_generators(n);
      json gens = json::array();
      bool shape_ok = static_cast<int>(pres.j_generators.size()) == info.h &&
                      pres.j_generators.front() == GradedPolyF2::generator(2, n);
      for (std::size_t r_idx = 0; r_idx < pres.j_generators.size(); ++r_idx) {
        const auto& theta = pres.j_generators[r_idx];
        gens.push_back({{"degree", pres.degrees[r_idx]}, {"polynomial", theta.to_string()},
                        {"terms", theta.terms().size()}});
        shape_ok = shape_ok && !theta.is_zero() && pres.degrees[r_idx] == (1 << r_idx) + 1;
      }
      entry["generators"] = std::move(gens);
      entry["j_degrees"] = pres.degrees;
      entry["presentation_shape"] = pass_fail(shape_ok);
      r.passed = r.passed && shape_ok;
    } else {
      entry["generators"] = nullptr;
      std::vector<int> degrees;
      for (int k = 1; k <= info.h; ++k) degrees.push_back((1 << (k - 1)) + 1);
      entry["j_degrees"] = degrees;
      entry["presentation_shape"] = "not computed";
    }
    entries.push_back(std::move(entry));
  }
  r.body["n_range"] = {n_lo, n_hi};
  r.body["entries"] = std::move(entries);
  r.body["notes"] = std::move(notes);
  r.body["passed"] = r.passed;
  return r;
}

// ---------------------------------------------------------------------------
// restrict

Report run_restrict(int n, std::string_view expression, LambdaConvention convention, int cutoff) {
  if (n > kMaxRestrictN) fail(ErrorCode::Domain, "restrict supports n <= " + std::to_string(kMaxRestrictN));
  if (cutoff < 0) fail(ErrorCode::InvalidArgument, "cutoff must be nonnegative");
  const SpinGroup g(n);
  const VirtualRepExpr expr = VirtualRepExpr::parse(expression);
  const UniLaurent ch = character_on_circle(g, expr, {convention});
  const VirtualWeights split = split_virtual_character(ch);
  const bool genuine = split.negative.empty();

  json notes = json::array();
  if (cutoff == 0) {
    std::uint64_t moving = 0;
    for (const auto& [k, a] : split.positive.weights())
      if (k != 0) moving += a;
    std::uint64_t wanted = genuine ? moving : 2 * moving;
    if (wanted == 0) wanted = 1;
    if (wanted > static_cast<std::uint64_t>(kRestrictCutoffCap)) {
      notes.push_back("default cutoff capped at " + std::to_string(kRestrictCutoffCap) + " u-powers");
      wanted = kRestrictCutoffCap;
    }
    cutoff = static_cast<int>(wanted);
  }

  const ChernSeries chern = total_chern_virtual(split.positive, split.negative, cutoff);
  Report r{"restrict", header("restrict"), true};
  r.body["n"] = n;
  r.body["m"] = g.m();
  r.body["expression"] = expr.to_string();
  r.body["convention"] = std::string(convention_name(convention));
  r.body["cutoff"] = cutoff;
  r.body["character"] = ch.to_string();
  r.body["dimension"] = evaluate_at_one(ch).get_str();
  r.body["genuine"] = genuine;
  r.body["palindromic"] = is_palindromic(ch);
  r.body["weights"] = weights_json(split.positive);
  r.body["negative_weights"] = weights_json(split.negative);
  r.body["chern"] = series_json(chern);
  r.body["chern_mod2"] = series_json(mod2(chern));
  if (genuine && is_palindromic(ch)) {
    const SWSeries sw = total_sw_real(ch, cutoff);
    r.body["sw"] = series_json(sw);
    r.body["square_relation"] = pass_fail(sw * sw == mod2(chern));
  } else {
    r.body["sw"] = nullptr;
    r.body["square_relation"] = "n/a";
  }
  r.body["notes"] = std::move(notes);
  r.body["passed"] = true;
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string text_of(const json& series) { return series.is_null() ? "-" : series.at("text").get<std::string>(); }

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

void render_prop2(const json& b, bool md, std::ostream& out) {
  if (md) {
    out << "# Mod-2 total Chern classes on the circle\n\n";
    out << "m range " << b["m_range"][0] << ".." << b["m_range"][1] << ", convention " << b["convention"].get<std::string>()
        << "\n\n";
    out << "| m | n | symbol | dim | computed | expected | status |\n|---|---|---|---|---|---|---|\n";
    for (const auto& e : b["entries"])
      out << "| " << e["m"] << " | " << e["n"] << " | " << e["symbol"].get<std::string>() << " | "
          << e["dimension"].get<std::string>() << " | " << text_of(e["computed"]) << " | "
          << e["expected"].get<std::string>() << " | " << status(e["passed"]) << " |\n";
    out << "\n" << b["checked"] << " identities checked, " << b["failed"] << " failed: **" << status(b["passed"])
        << "**\n";
    return;
  }
  for (const auto& e : b["entries"])
    out << status(e["passed"]) << "  m=" << e["m"] << " n=" << e["n"] << " " << e["symbol"].get<std::string>()
        << "  c = " << text_of(e["computed"]) << "  (expected " << e["expected"].get<std::string>() << ")\n";
  out << "prop2: " << b["checked"] << " checked, " << b["failed"] << " failed -> " << status(b["passed"]) << "\n";
}

void render_theorem1(const json& b, bool md, std::ostream& out) {
  if (md) {
    out << "# Indecomposable generators via the circle subgroup\n\n";
    out << "Convention: " << b["convention"].get<std::string>() << "\n\n";
    out << "| G | Spin(n) | m | rep. | dim of rep. | deg z = 2^h | h (computed) |\n"
           "|---|---|---|---|---|---|---|\n";
    for (const auto& c : b["cases"])
      out << "| " << c["group"].get<std::string>() << " | Spin(" << c["n"] << ") | " << c["m"] << " | "
          << c["spinor"].get<std::string>() << " | " << c["spinor_dimension"] << " | " << c["deg_z"] << " | "
          << c["h"] << " |\n";
    out << "\n| G | restriction | dim | class | total class | top class | verdict | complexified | status |\n"
           "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : b["cases"]) {
      const auto& top = c["top_class"];
      std::string complexified = "-";
      if (!c["complexified"].is_null())
        complexified = c["complexified"]["class"].get<std::string>() + " = " +
                       c["complexified"]["text"].get<std::string>() + ", " +
                       c["complexified"]["indecomposability"].get<std::string>();
      out << "| " << c["group"].get<std::string>() << " | " << c["restriction"].get<std::string>() << " | "
          << c["dimension"]["computed"].get<std::string>() << " / " << c["dimension"]["ambient"] << " | "
          << top["class"].get<std::string>() << " | " << text_of(c["total_class"]) << " | "
          << top["text"].get<std::string>() << " | " << top["indecomposability"].get<std::string>() << " | "
          << complexified << " | " << status(c["passed"]) << " |\n";
    }
    bool any_notes = false;
    for (const auto& c : b["cases"])
      for (const auto& note : c["notes"]) {
        if (!any_notes) out << "\nNotes:\n\n";
        any_notes = true;
        out << "- " << c["group"].get<std::string>() << ": " << note.get<std::string>() << "\n";
      }
    out << "\nOverall: **" << status(b["passed"]) << "**\n";
    return;
  }
  for (const auto& c : b["cases"]) {
    const auto& top = c["top_class"];
    out << status(c["passed"]) << "  " << c["group"].get<std::string>() << "  Spin(" << c["n"] << ") h=" << c["h"]
        << "  " << top["class"].get<std::string>() << " = " << top["text"].get<std::string>() << " "
        << top["indecomposability"].get<std::string>() << "  total " << text_of(c["total_class"]);
    if (!c["complexified"].is_null())
      out << "  | " << c["complexified"]["class"].get<std::string>() << " = "
          << c["complexified"]["text"].get<std::string>() << " "
          << c["complexified"]["indecomposability"].get<std::string>();
    out << "  dim " << c["dimension"]["computed"].get<std::string>() << "/" << c["dimension"]["ambient"] << "\n";
    for (const auto& note : c["notes"]) out << "      note: " << note.get<std::string>() << "\n";
  }
  out << "theorem1: " << status(b["passed"]) << "\n";
}

void render_quillen(const json& b, bool md, std::ostream& out) {
  if (md) {
    out << "# Quillen presentation data\n\n";
    out << "| n | m | type | h (tabulated) | h (computed) | deg z | J degrees | note |\n"
           "|---|---|---|---|---|---|---|---|\n";
    for (const auto& e : b["entries"]) {
      std::string degrees;
      for (const auto& d : e["j_degrees"]) degrees += (degrees.empty() ? "" : ", ") + d.dump();
      out << "| " << e["n"] << " | " << e["m"] << " | " << e["type"].get<std::string>() << " | " << e["tabulated_h"]
          << " | " << e["h"] << " | " << e["deg_z"] << " | " << degrees << " | "
          << (e["discrepancy"].is_null() ? "" : "tabulated h differs") << " |\n";
    }
    if (!b["notes"].empty()) {
      out << "\nNotes:\n\n";
      for (const auto& note : b["notes"]) out << "- " << note.get<std::string>() << "\n";
    }
    return;
  }
  for (const auto& e : b["entries"]) {
    out << "n=" << e["n"] << " m=" << e["m"] << " type=" << e["type"].get<std::string>() << " h=" << e["h"]
        << " deg_z=" << e["deg_z"] << " J degrees=" << e["j_degrees"].dump() << "\n";
    if (!e["discrepancy"].is_null()) out << "    note: " << e["discrepancy"].get<std::string>() << "\n";
    if (!e["generators"].is_null())
      for (const auto& gen : e["generators"])
        out << "    theta(deg " << gen["degree"] << ", " << gen["terms"] << " terms)"
            << (gen["terms"].get<int>() <= 12 ? " = " + gen["polynomial"].get<std::string>() : "") << "\n";
  }
}

void render_restrict(const json& b, bool md, std::ostream& out) {
  const char* bullet = md ? "- " : "";
  if (md) out << "# Restriction to the circle\n\n";
  out << bullet << "Spin(" << b["n"] << "), expression " << b["expression"].get<std::string>() << ", convention "
      << b["convention"].get<std::string>() << ", cutoff " << b["cutoff"] << "\n";
  out << bullet << "character: " << b["character"].get<std::string>() << "\n";
  out << bullet << "dimension: " << b["dimension"].get<std::string>() << "\n";
  out << bullet << "weights: " << b["weights"].dump() << "\n";
  if (!b["negative_weights"].empty()) out << bullet << "negative weights: " << b["negative_weights"].dump() << "\n";
  out << bullet << "total Chern class: " << text_of(b["chern"]) << "\n";
  out << bullet << "mod-2 total Chern class: " << text_of(b["chern_mod2"]) << "\n";
  out << bullet << "total Stiefel-Whitney class: " << text_of(b["sw"]) << "\n";
  for (const auto& note : b["notes"]) out << bullet << "note: " << note.get<std::string>() << "\n";
}

}  // namespace

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.body.dump(2) + "\n";
  std::ostringstream out;
  const bool md = format == ReportFormat::Markdown;
  if (report.command == "prop2")
    render_prop2(report.body, md, out);
  else if (report.command == "theorem1")
    render_theorem1(report.body, md, out);
  else if (report.command == "quillen")
    render_quillen(report.body, md, out);
  else if (report.command == "restrict")
    render_restrict(report.body, md, out);
  else
    out << report.body.dump(2) << "\n";
  return out.str();
}

}  // namespace spinchern
