#include <spinchern/error.hpp>
#include <spinchern/exceptional.hpp>

#include <sstream>

namespace spinchern {

std::string_view group_name(ExceptionalGroup g) {
  switch (g) {
    case ExceptionalGroup::F4: return "F4";
    case ExceptionalGroup::E6: return "E6";
    case ExceptionalGroup::E7: return "E7";
    case ExceptionalGroup::E8: return "E8";
  }
  return "?";
}

ExceptionalGroup parse_group(std::string_view text) {
  for (auto g : {ExceptionalGroup::F4, ExceptionalGroup::E6, ExceptionalGroup::E7, ExceptionalGroup::E8})
    if (text == group_name(g)) return g;
  fail(ErrorCode::InvalidArgument, "unknown group '" + std::string(text) + "' (expected F4, E6, E7 or E8)");
}

std::string ExceptionalCase::class_label() const {
  return (kind == ClassKind::Chern ? "c" : "w") + std::to_string(class_index);
}

std::vector<ExceptionalCase> builtin_cases() {
  using S = RepSymbol;
  return {
      {ExceptionalGroup::F4, 9, VirtualRepExpr{{S::trivial(), 1}, {S::lambda(1), 1}, {S::delta(), 1}},
       S::delta(), 16, "SO(26)", 26, ClassKind::StiefelWhitney, 16, 16},
      {ExceptionalGroup::E6, 10, VirtualRepExpr{{S::trivial(), 1}, {S::lambda(1), 1}, {S::delta_plus(), 1}},
       S::delta_plus(), 16, "SU(27)", 27, ClassKind::Chern, 16, 32},
      {ExceptionalGroup::E7, 12, VirtualRepExpr{{S::lambda(1), 2}, {S::delta_minus(), 1}},
       S::delta_minus(), 32, "Sp(28) -> SU(56)", 56, ClassKind::Chern, 32, 64},
      {ExceptionalGroup::E8, 16, VirtualRepExpr{{S::trivial(), 8}, {S::lambda(2), 1}, {S::delta_plus(), 1}},
       S::delta_plus(), 128, "SO(248)", 248, ClassKind::StiefelWhitney, 128, 128},
  };
}

const ExceptionalCase& builtin_case(ExceptionalGroup g) {
  static const std::vector<ExceptionalCase> cases = builtin_cases();
  return cases.at(static_cast<std::size_t>(g));
}

ImageSubring ImageSubring::from_h(int h) {
  if (h < 1 || h > 63) fail(ErrorCode::InvalidArgument, "image subring needs 1 <= h <= 63");
  return {h, std::uint64_t{1} << (h - 1)};
}

std::string_view verdict_name(ImageVerdict v) {
  switch (v) {
    case ImageVerdict::NotInImage: return "not_in_image";
    case ImageVerdict::Indecomposable: return "indecomposable";
    case ImageVerdict::Decomposable: return "decomposable";
  }
  return "?";
}

ImageVerdict indecomposable_in_image(std::int64_t u_power, const ImageSubring& sub) {
  if (u_power <= 0) fail(ErrorCode::InvalidArgument, "u-power must be positive");
  const auto k = static_cast<std::uint64_t>(u_power);
  if (k % sub.generator_power != 0) return ImageVerdict::NotInImage;
  return k == sub.generator_power ? ImageVerdict::Indecomposable : ImageVerdict::Decomposable;
}

DimensionAudit dimension_audit(const ExceptionalCase& c, LambdaConvention convention) {
  const SpinGroup g(c.n);
  DimensionAudit a;
  a.ambient_dimension = c.ambient_dimension;
  a.literal = dimension(g, c.restriction, {LambdaConvention::Literal});
  a.vector_rep = dimension(g, c.restriction, {LambdaConvention::VectorRep});
  a.computed = convention == LambdaConvention::Literal ? a.literal : a.vector_rep;
  a.passed = a.vector_rep == c.ambient_dimension;
  if (a.literal != c.ambient_dimension) {
    a.notes.push_back("paper-literal lambda convention gives dimension " + a.literal.get_str() + ", ambient " +
                      c.ambient + " has dimension " + std::to_string(c.ambient_dimension) +
                      "; vector-rep gives " + a.vector_rep.get_str());
  }
  return a;
}

int required_cutoff(const ExceptionalCase& c) { return c.class_index; }

int default_cutoff(const ExceptionalCase& c) { return 2 * required_cutoff(c); }

namespace {

TopClass extract_top(const std::string& label, int u_power, SWSeries total, const ImageSubring& image) {
  TopClass t;
  t.label = label;
  t.u_power = u_power;
  t.top_is_u_power = total.coefficient(u_power) == 1;
  const auto support = total.support();
  t.only_one_and_top = support == std::vector<int>{0, u_power};
  t.verdict = indecomposable_in_image(u_power, image);
  t.total = std::move(total);
  return t;
}

SWSeries mod2_chern_of(const UniLaurent& ch, int cutoff) {
  return mod2(total_chern(weights_from_character(ch), cutoff));
}

}  // namespace

CaseReport verify_case(const ExceptionalCase& c, const VerifyOptions& opts) {
  const SpinGroup g(c.n);
  const SpinorTypeInfo info = quillen_h(c.n);
  CaseReport r;
  r.group = c.group;
  r.n = c.n;
  r.h = info.h;
  r.deg_z = info.deg_z;
  r.kind = c.kind;
  r.convention = opts.convention;
  r.cutoff = opts.cutoff == 0 ? default_cutoff(c) : opts.cutoff;
  r.image = ImageSubring::from_h(info.h);

  if (r.cutoff < required_cutoff(c)) {
    r.notes.push_back("cutoff " + std::to_string(r.cutoff) + " below required " +
                      std::to_string(required_cutoff(c)) + " u-powers");
    return r;
  }
  if (info.discrepancy) r.notes.push_back(*info.discrepancy);

  try {
    r.character = character_on_circle(g, c.restriction, {opts.convention});
    const UniLaurent other = character_on_circle(
        g, c.restriction,
        {opts.convention == LambdaConvention::Literal ? LambdaConvention::VectorRep : LambdaConvention::Literal});

    r.expected_matches_h = static_cast<std::uint64_t>(c.expected_u_power()) == r.image.generator_power &&
                           static_cast<std::uint64_t>(c.expected_top_degree) == info.deg_z;
    if (!r.expected_matches_h)
      r.notes.push_back("expected " + c.class_label() + " does not sit at u^{2^(h-1)} for h = " +
                        std::to_string(info.h));

    const SWSeries chern = mod2_chern_of(r.character, r.cutoff);
    if (c.kind == ClassKind::Chern) {
      r.primary = extract_top(c.class_label(), c.expected_u_power(), chern, r.image);
      r.convention_invariant = chern == mod2_chern_of(other, r.cutoff);
    } else {
      const SWSeries sw = total_sw_real(r.character, r.cutoff);
      r.primary = extract_top(c.class_label(), c.expected_u_power(), sw, r.image);
      r.complexified = extract_top("c" + std::to_string(c.class_index), c.class_index, chern, r.image);
      r.square_relation = sw * sw == chern;
      r.convention_invariant =
          sw == total_sw_real(other, r.cutoff) && chern == mod2_chern_of(other, r.cutoff);
    }
    r.remark_generation = verify_remark_generation(r);
  } catch (const Error& e) {
    r.notes.push_back(std::string("pipeline error: ") + e.what());
  }
  r.dimension = dimension_audit(c, opts.convention);
  for (const auto& note : r.dimension.notes) r.notes.push_back(note);
  return r;
}

bool verify_remark_generation(const CaseReport& r) {
  return r.primary.top_is_u_power && r.primary.only_one_and_top &&
         static_cast<std::uint64_t>(r.primary.u_power) == r.image.generator_power;
}

bool CaseReport::passed() const {
  const bool primary_ok = primary.top_is_u_power && primary.only_one_and_top &&
                          primary.verdict == ImageVerdict::Indecomposable;
  bool sw_ok = true;
  if (kind == ClassKind::StiefelWhitney) {
    sw_ok = complexified && square_relation && *square_relation && complexified->top_is_u_power &&
            complexified->only_one_and_top && complexified->verdict == ImageVerdict::Decomposable;
  }
  return primary_ok && sw_ok && expected_matches_h && remark_generation && dimension.passed &&
         convention_invariant;
}

}  // namespace spinchern
