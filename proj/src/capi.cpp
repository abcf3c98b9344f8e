#include <spinchern/char_classes.hpp>
#include <spinchern/error.hpp>
#include <spinchern/report.hpp>
#include <spinchern/spinchern.h>

#include <cstring>
#include <memory>
#include <string>

struct sc_character {
  spinchern::MultiLaurent value;
};

struct sc_series {
  spinchern::TruncatedPoly value;
};

struct sc_report {
  spinchern::Report value;
};

namespace {

thread_local std::string t_last_error;

sc_status to_status(spinchern::ErrorCode code) {
  using spinchern::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return SC_ERR_PARSE;
    case ErrorCode::Domain: return SC_ERR_DOMAIN;
    case ErrorCode::VirtualCharacter: return SC_ERR_VIRTUAL_CHARACTER;
    case ErrorCode::Mismatch: return SC_ERR_MISMATCH;
    case ErrorCode::NotUnit: return SC_ERR_NOT_UNIT;
  }
  return SC_ERR_INTERNAL;
}

template <class F>
sc_status guarded(F&& body) {
  t_last_error.clear();
  try {
    return body();
  } catch (const spinchern::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return SC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return SC_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return SC_ERR_INTERNAL;
  }
}

sc_status invalid(const char* what) {
  t_last_error = what;
  return SC_ERR_INVALID_ARGUMENT;
}

sc_status write_text(const std::string& text, char* buf, size_t cap, size_t* len) {
  if (len) *len = text.size();
  if (!buf || cap < text.size() + 1) {
    t_last_error = "buffer too small: need " + std::to_string(text.size() + 1) + " bytes";
    return SC_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return SC_OK;
}

spinchern::LambdaConvention to_convention(sc_convention c) {
  return c == SC_CONVENTION_VECTOR_REP ? spinchern::LambdaConvention::VectorRep
                                       : spinchern::LambdaConvention::Literal;
}

template <class T, class V>
sc_status emit(T** out, V&& value) {
  *out = new T{std::forward<V>(value)};
  return SC_OK;
}

}  // namespace

extern "C" {

SC_API const char* sc_version(void) { return spinchern::kToolVersion.data(); }

SC_API const char* sc_last_error(void) { return t_last_error.c_str(); }

SC_API const char* sc_status_string(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SC_ERR_PARSE: return "parse error";
    case SC_ERR_DOMAIN: return "domain error";
    case SC_ERR_VIRTUAL_CHARACTER: return "virtual character";
    case SC_ERR_MISMATCH: return "ring mismatch";
    case SC_ERR_NOT_UNIT: return "not a unit";
    case SC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

SC_API sc_status sc_character_on_torus(int n, const char* expr, sc_convention convention, sc_character** out) {
  if (!expr || !out) return invalid("null argument");
  return guarded([&] {
    const spinchern::SpinGroup g(n);
    const auto e = spinchern::VirtualRepExpr::parse(expr);
    return emit(out, spinchern::character_on_torus(g, e, {to_convention(convention)}));
  });
}

SC_API sc_status sc_character_on_circle(int n, const char* expr, sc_convention convention, sc_character** out) {
  if (!expr || !out) return invalid("null argument");
  return guarded([&] {
    const spinchern::SpinGroup g(n);
    const auto e = spinchern::VirtualRepExpr::parse(expr);
    return emit(out, spinchern::character_on_circle(g, e, {to_convention(convention)}));
  });
}

SC_API sc_status sc_character_substitute_ones(const sc_character* ch, int keep_index, sc_character** out) {
  if (!ch || !out) return invalid("null argument");
  return guarded([&] { return emit(out, spinchern::substitute_ones(ch->value, keep_index)); });
}

SC_API sc_status sc_character_variable_count(const sc_character* ch, int* out) {
  if (!ch || !out) return invalid("null argument");
  *out = ch->value.variable_count();
  return SC_OK;
}

SC_API sc_status sc_character_dimension(const sc_character* ch, char* buf, size_t cap, size_t* len) {
  if (!ch) return invalid("null argument");
  return guarded([&] { return write_text(spinchern::evaluate_at_one(ch->value).get_str(), buf, cap, len); });
}

SC_API sc_status sc_character_is_palindromic(const sc_character* ch, int* out) {
  if (!ch || !out) return invalid("null argument");
  return guarded([&] {
    *out = spinchern::is_palindromic(ch->value) ? 1 : 0;
    return SC_OK;
  });
}

SC_API sc_status sc_character_to_string(const sc_character* ch, char* buf, size_t cap, size_t* len) {
  if (!ch) return invalid("null argument");
  return guarded([&] { return write_text(ch->value.to_string(), buf, cap, len); });
}

SC_API void sc_character_free(sc_character* ch) { delete ch; }

SC_API sc_status sc_total_chern(const sc_character* ch, int cutoff, sc_series** out) {
  if (!ch || !out) return invalid("null argument");
  return guarded([&] {
    const auto split = spinchern::split_virtual_character(ch->value);
    return emit(out, spinchern::total_chern_virtual(split.positive, split.negative, cutoff));
  });
}

SC_API sc_status sc_total_stiefel_whitney(const sc_character* ch, int cutoff, sc_series** out) {
  if (!ch || !out) return invalid("null argument");
  return guarded([&] { return emit(out, spinchern::total_sw_real(ch->value, cutoff)); });
}

SC_API sc_status sc_series_mod2(const sc_series* s, sc_series** out) {
  if (!s || !out) return invalid("null argument");
  return guarded([&] { return emit(out, spinchern::mod2(s->value)); });
}

SC_API sc_status sc_series_cutoff(const sc_series* s, int* out) {
  if (!s || !out) return invalid("null argument");
  *out = s->value.cutoff();
  return SC_OK;
}

SC_API sc_status sc_series_is_mod2(const sc_series* s, int* out) {
  if (!s || !out) return invalid("null argument");
  *out = s->value.ring() == spinchern::CoeffRing::Mod2 ? 1 : 0;
  return SC_OK;
}

SC_API sc_status sc_series_coefficient(const sc_series* s, int k, char* buf, size_t cap, size_t* len) {
  if (!s) return invalid("null argument");
  if (k < 0) return invalid("negative power");
  return guarded([&] { return write_text(s->value.coefficient(k).get_str(), buf, cap, len); });
}

SC_API sc_status sc_series_to_string(const sc_series* s, char* buf, size_t cap, size_t* len) {
  if (!s) return invalid("null argument");
  return guarded([&] { return write_text(s->value.to_string(), buf, cap, len); });
}

SC_API void sc_series_free(sc_series* s) { delete s; }

SC_API sc_status sc_quillen_h(int n, int* h) {
  if (!h) return invalid("null argument");
  return guarded([&] {
    *h = spinchern::quillen_h(n).h;
    return SC_OK;
  });
}

SC_API sc_status sc_indecomposable_in_image(long long u_power, int h, sc_image_verdict* out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    switch (spinchern::indecomposable_in_image(u_power, spinchern::ImageSubring::from_h(h))) {
      case spinchern::ImageVerdict::NotInImage: *out = SC_NOT_IN_IMAGE; break;
      case spinchern::ImageVerdict::Indecomposable: *out = SC_INDECOMPOSABLE; break;
      case spinchern::ImageVerdict::Decomposable: *out = SC_DECOMPOSABLE; break;
    }
    return SC_OK;
  });
}

SC_API sc_status sc_run_prop2(int m_lo, int m_hi, sc_report** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { return emit(out, spinchern::run_prop2(m_lo, m_hi)); });
}

SC_API sc_status sc_run_theorem1(sc_group group, sc_convention convention, int cutoff, sc_report** out) {
  if (!out) return invalid("null argument");
  std::optional<spinchern::ExceptionalGroup> selected;
  switch (group) {
    case SC_GROUP_ALL: break;
    case SC_GROUP_F4: selected = spinchern::ExceptionalGroup::F4; break;
    case SC_GROUP_E6: selected = spinchern::ExceptionalGroup::E6; break;
    case SC_GROUP_E7: selected = spinchern::ExceptionalGroup::E7; break;
    case SC_GROUP_E8: selected = spinchern::ExceptionalGroup::E8; break;
    default: return invalid("unknown group");
  }
  return guarded([&] { return emit(out, spinchern::run_theorem1(selected, to_convention(convention), cutoff)); });
}

SC_API sc_status sc_run_quillen(int n_lo, int n_hi, sc_report** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { return emit(out, spinchern::run_quillen(n_lo, n_hi)); });
}

SC_API sc_status sc_run_restrict(int n, const char* expr, sc_convention convention, int cutoff, sc_report** out) {
  if (!expr || !out) return invalid("null argument");
  return guarded([&] { return emit(out, spinchern::run_restrict(n, expr, to_convention(convention), cutoff)); });
}

SC_API sc_status sc_report_passed(const sc_report* r, int* out) {
  if (!r || !out) return invalid("null argument");
  *out = r->value.passed ? 1 : 0;
  return SC_OK;
}

SC_API sc_status sc_report_render(const sc_report* r, sc_format format, char* buf, size_t cap, size_t* len) {
  if (!r) return invalid("null argument");
  return guarded([&] {
    spinchern::ReportFormat f = spinchern::ReportFormat::Json;
    if (format == SC_FORMAT_MARKDOWN) f = spinchern::ReportFormat::Markdown;
    if (format == SC_FORMAT_PLAIN) f = spinchern::ReportFormat::Plain;
    return write_text(spinchern::render(r->value, f), buf, cap, len);
  });
}

SC_API void sc_report_free(sc_report* r) { delete r; }

}  // extern "C"
