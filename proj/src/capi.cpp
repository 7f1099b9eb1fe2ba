#include "t2w/t2w.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "t2w/constructors.hpp"
#include "t2w/document.hpp"
#include "t2w/equivalence.hpp"
#include "t2w/localmodels.hpp"
#include "t2w/surgery.hpp"

struct t2w_system {
  t2w::WeightSystem value;
};

struct t2w_decomposition {
  t2w::Decomposition value;
};

struct t2w_enumerator {
  t2w::Enumerator value;
};

namespace {

thread_local std::string last_error;

t2w_status status_of(t2w::ErrorCode code) {
  using t2w::ErrorCode;
  switch (code) {
    case ErrorCode::kNotCoprime: return T2W_ERR_NOT_COPRIME;
    case ErrorCode::kIllegalDeterminant: return T2W_ERR_ILLEGAL_DETERMINANT;
    case ErrorCode::kIllegalWeightSystem: return T2W_ERR_ILLEGAL_SYSTEM;
    case ErrorCode::kNotUnimodular: return T2W_ERR_NOT_UNIMODULAR;
    case ErrorCode::kIsotropyMismatch: return T2W_ERR_ISOTROPY_MISMATCH;
    case ErrorCode::kOrientationMismatch: return T2W_ERR_ORIENTATION_MISMATCH;
    case ErrorCode::kIllegalJunction: return T2W_ERR_ILLEGAL_JUNCTION;
    case ErrorCode::kNoSolutionInBound: return T2W_ERR_NO_SOLUTION;
    case ErrorCode::kIllegalParameters: return T2W_ERR_ILLEGAL_PARAMETERS;
    case ErrorCode::kOverflow: return T2W_ERR_OVERFLOW;
    case ErrorCode::kParse: return T2W_ERR_PARSE;
    case ErrorCode::kInvalidArgument: return T2W_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInternal: return T2W_ERR_INTERNAL;
  }
  return T2W_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
t2w_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const t2w::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return T2W_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return T2W_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

t2w_status null_argument() {
  last_error = "null argument";
  return T2W_ERR_INVALID_ARGUMENT;
}

t2w_system* wrap(t2w::WeightSystem w) { return new t2w_system{std::move(w)}; }

t2w::EquivalenceMode mode_of(t2w_mode mode) {
  return mode == T2W_MODE_WEAK ? t2w::EquivalenceMode::kWeak : t2w::EquivalenceMode::kStrict;
}

}  // namespace

extern "C" {

const char* t2w_version(void) { return "1.0.0"; }

const char* t2w_last_error(void) { return last_error.c_str(); }

const char* t2w_status_name(t2w_status status) {
  switch (status) {
    case T2W_OK: return "ok";
    case T2W_DONE: return "done";
    case T2W_ERR_PARSE: return "parse error";
    case T2W_ERR_NOT_COPRIME: return "not coprime";
    case T2W_ERR_ILLEGAL_DETERMINANT: return "illegal determinant";
    case T2W_ERR_ILLEGAL_SYSTEM: return "illegal weight system";
    case T2W_ERR_NOT_UNIMODULAR: return "not unimodular";
    case T2W_ERR_ISOTROPY_MISMATCH: return "isotropy mismatch";
    case T2W_ERR_ORIENTATION_MISMATCH: return "orientation mismatch";
    case T2W_ERR_ILLEGAL_JUNCTION: return "illegal junction";
    case T2W_ERR_NO_SOLUTION: return "no solution in bound";
    case T2W_ERR_ILLEGAL_PARAMETERS: return "illegal parameters";
    case T2W_ERR_OVERFLOW: return "integer overflow";
    case T2W_ERR_INVALID_ARGUMENT: return "invalid argument";
    case T2W_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void t2w_string_free(char* s) { std::free(s); }

t2w_status t2w_system_parse(const char* text, size_t length, t2w_system** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap(t2w::parse_document(std::string_view(text, length)));
    return T2W_OK;
  });
}

t2w_status t2w_system_serialize(const t2w_system* w, char** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(t2w::serialize_document(w->value));
    return T2W_OK;
  });
}

t2w_status t2w_system_clone(const t2w_system* w, t2w_system** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap(w->value);
    return T2W_OK;
  });
}

void t2w_system_free(t2w_system* w) { delete w; }

t2w_status t2w_system_validate(const t2w_system* w, int* legal, char** report) {
  if (w == nullptr || legal == nullptr) return null_argument();
  return guarded([&] {
    const t2w::ValidationReport r = t2w::validate(w->value);
    *legal = r.legal() ? 1 : 0;
    if (report != nullptr) *report = copy_string(r.to_string());
    return T2W_OK;
  });
}

t2w_status t2w_system_compare(const t2w_system* a, const t2w_system* b, t2w_mode mode,
                              int* isomorphic, char** witness) {
  if (a == nullptr || b == nullptr || isomorphic == nullptr) return null_argument();
  return guarded([&] {
    if (witness != nullptr) *witness = nullptr;
    const auto found = t2w::find_isomorphism(a->value, b->value, mode_of(mode));
    *isomorphic = found ? 1 : 0;
    if (found && witness != nullptr && mode == T2W_MODE_WEAK) {
      const t2w::Matrix2& m = found->basis_change;
      std::ostringstream text;
      text << "reverse=" << (found->reverse ? 1 : 0) << " A=[[" << m.a << "," << m.b << "],["
           << m.c << "," << m.d << "]]";
      *witness = copy_string(text.str());
    }
    return T2W_OK;
  });
}

t2w_status t2w_system_canonical(const t2w_system* w, t2w_mode mode, t2w_system** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap(t2w::canonical_form(w->value, mode_of(mode)).system);
    return T2W_OK;
  });
}

t2w_status t2w_system_reverse_orientation(const t2w_system* w, t2w_system** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    t2w::require_legal(w->value);
    *out = wrap(t2w::reverse_orientation(w->value));
    return T2W_OK;
  });
}

t2w_status t2w_system_basis_change(const t2w_system* w, int64_t a, int64_t b, int64_t c,
                                   int64_t d, t2w_system** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    t2w::require_legal(w->value);
    *out = wrap(t2w::apply_basis_change(w->value, t2w::Matrix2{a, b, c, d}));
    return T2W_OK;
  });
}

t2w_status t2w_system_localmodels(const t2w_system* w, char** listing) {
  if (w == nullptr || listing == nullptr) return null_argument();
  return guarded([&] {
    t2w::require_legal(w->value);
    *listing = copy_string(t2w::local_models_listing(w->value));
    return T2W_OK;
  });
}

t2w_status t2w_space_of_directions(int64_t m, int64_t n, int64_t m2, int64_t n2, int64_t* r,
                                   int64_t* s) {
  if (r == nullptr || s == nullptr) return null_argument();
  return guarded([&] {
    const t2w::Pair left{m, n};
    if (!t2w::is_coprime(left) || !t2w::is_coprime({m2, n2})) {
      throw t2w::Error(t2w::ErrorCode::kNotCoprime, "isotropy pairs must be coprime");
    }
    const t2w::LensClass lens = t2w::space_of_directions(left, {m2, n2});
    *r = lens.r;
    *s = lens.s;
    return T2W_OK;
  });
}

t2w_status t2w_system_is_simple(const t2w_system* w, int* simple) {
  if (w == nullptr || simple == nullptr) return null_argument();
  return guarded([&] {
    *simple = t2w::is_simple(w->value) ? 1 : 0;
    return T2W_OK;
  });
}

t2w_status t2w_system_decompose(const t2w_system* w, t2w_decomposition** out) {
  if (w == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new t2w_decomposition{t2w::decompose(w->value)};
    return T2W_OK;
  });
}

size_t t2w_decomposition_piece_count(const t2w_decomposition* d) {
  return d == nullptr ? 0 : d->value.simple_pieces.size();
}

t2w_status t2w_decomposition_manifold(const t2w_decomposition* d, t2w_system** out) {
  if (d == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap(d->value.manifold_part);
    return T2W_OK;
  });
}

t2w_status t2w_decomposition_piece(const t2w_decomposition* d, size_t index, t2w_system** out) {
  if (d == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    if (index >= d->value.simple_pieces.size()) {
      throw t2w::Error(t2w::ErrorCode::kInvalidArgument, "piece index out of range");
    }
    *out = wrap(d->value.simple_pieces[index]);
    return T2W_OK;
  });
}

t2w_status t2w_decomposition_manifest(const t2w_decomposition* d, const char* const* piece_names,
                                      const char* manifold_name, char** out) {
  if (d == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d->value.simple_pieces.size(); ++i) {
      names.push_back(piece_names != nullptr && piece_names[i] != nullptr
                          ? std::string(piece_names[i])
                          : "piece_" + std::to_string(i + 1) + ".json");
    }
    *out = copy_string(t2w::decomposition_manifest(
        d->value, names, manifold_name != nullptr ? manifold_name : "manifold.json"));
    return T2W_OK;
  });
}

t2w_status t2w_decomposition_reassemble(const t2w_decomposition* d, t2w_system** out) {
  if (d == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap(t2w::reassemble(d->value));
    return T2W_OK;
  });
}

void t2w_decomposition_free(t2w_decomposition* d) { delete d; }

t2w_status t2w_generate_suspension(int64_t p, int64_t q, int64_t m, int64_t n, int orientation,
                                   t2w_system** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    if (orientation != 1 && orientation != -1) {
      throw t2w::Error(t2w::ErrorCode::kIllegalParameters, "orientation must be 1 or -1");
    }
    *out = wrap(t2w::suspension_of_lens(
        t2w::make_pair(p, q), t2w::make_pair(m, n),
        orientation == 1 ? t2w::Orientation::kPositive : t2w::Orientation::kNegative));
    return T2W_OK;
  });
}

t2w_status t2w_generate_weighted_projective(int64_t r1, int64_t r2, int64_t r3,
                                            t2w_system** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = wrap(t2w::weighted_projective(r1, r2, r3));
    return T2W_OK;
  });
}

t2w_status t2w_enumerator_create(const t2w_bounds* bounds, t2w_enumerator** out) {
  if (bounds == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    t2w::EnumerationBounds b;
    b.max_genus = bounds->max_genus;
    b.max_cycles = bounds->max_cycles;
    b.max_cycle_length = bounds->max_cycle_length;
    b.max_weight_entry = bounds->max_weight_entry;
    b.max_exceptional = bounds->max_exceptional;
    b.max_alpha = bounds->max_alpha;
    *out = new t2w_enumerator{t2w::Enumerator(b)};
    return T2W_OK;
  });
}

t2w_status t2w_enumerator_next(t2w_enumerator* e, t2w_system** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto w = e->value.next();
    if (!w) {
      *out = nullptr;
      return T2W_DONE;
    }
    *out = wrap(std::move(*w));
    return T2W_OK;
  });
}

void t2w_enumerator_free(t2w_enumerator* e) { delete e; }

}  // extern "C"
