// extern-C surface of the toolkit: translates between opaque handles /
// status codes and the C++ core, and keeps a thread-local last-error string.

#include "ellmod/ellmod.h"

#include <cstdlib>
#include <cstring>
#include <variant>

#include "ecurve.hpp"
#include "report.hpp"
#include "rootsys.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
ellmod_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ELLMOD_OK;
  } catch (const ellmod::InputError& e) {
    g_last_error = e.what();
    return ELLMOD_ERR_INPUT;
  } catch (const ellmod::InternalError& e) {
    g_last_error = e.what();
    return ELLMOD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ELLMOD_ERR_INTERNAL;
  }
}

}  // namespace

struct ellmod_rootsys {
  ellmod::RootSystemData data;
};

struct ellmod_curve {
  std::variant<ellmod::WeierstrassCurve<ellmod::QQ>, ellmod::WeierstrassCurve<ellmod::GFp>> curve;
};

extern "C" {

const char* ellmod_version(void) { return ellmod::kVersion; }

const char* ellmod_last_error(void) { return g_last_error.c_str(); }

void ellmod_string_free(char* s) { std::free(s); }

ellmod_status ellmod_rootsys_create(char series, int rank, ellmod_rootsys** out) {
  return guarded([&] {
    ellmod::require(out != nullptr, "null output pointer");
    auto t = ellmod::CartanType::make(series, rank);
    *out = new ellmod_rootsys{ellmod::build_root_system(t)};
  });
}

void ellmod_rootsys_free(ellmod_rootsys* rs) { delete rs; }

ellmod_status ellmod_rootsys_root_count(const ellmod_rootsys* rs, int64_t* out) {
  return guarded([&] {
    ellmod::require(rs && out, "null pointer");
    *out = static_cast<int64_t>(rs->data.roots.size());
  });
}

ellmod_status ellmod_rootsys_cartan_det(const ellmod_rootsys* rs, int64_t* out) {
  return guarded([&] {
    ellmod::require(rs && out, "null pointer");
    *out = ellmod::cartan_determinant(rs->data);
  });
}

static ellmod_status fill_vec(const std::vector<int64_t>& v, int64_t* buf, int buflen,
                              int* written) {
  return guarded([&] {
    ellmod::require(buf && written, "null pointer");
    ellmod::require(buflen >= static_cast<int>(v.size()),
                    "buffer too small: need " + std::to_string(v.size()) + " entries");
    for (size_t i = 0; i < v.size(); ++i) buf[i] = v[i];
    *written = static_cast<int>(v.size());
  });
}

ellmod_status ellmod_rootsys_wps_weights(const ellmod_rootsys* rs, int64_t* buf, int buflen,
                                         int* written) {
  if (!rs) {
    g_last_error = "null handle";
    return ELLMOD_ERR_INPUT;
  }
  return fill_vec(ellmod::wps_weights(rs->data.type), buf, buflen, written);
}

ellmod_status ellmod_rootsys_invariant_degrees(const ellmod_rootsys* rs, int64_t* buf, int buflen,
                                               int* written) {
  if (!rs) {
    g_last_error = "null handle";
    return ELLMOD_ERR_INPUT;
  }
  return fill_vec(ellmod::invariant_degrees(rs->data.type), buf, buflen, written);
}

ellmod_status ellmod_curve_create(const char* field, const char* b2, const char* b3,
                                  ellmod_curve** out) {
  return guarded([&] {
    ellmod::require(field && b2 && b3 && out, "null pointer");
    std::string f(field);
    if (f == "q" || f == "Q" || f.empty()) {
      ellmod::QQ q;
      *out = new ellmod_curve{
          ellmod::WeierstrassCurve<ellmod::QQ>(q, q.parse(b2), q.parse(b3))};
    } else if (f.rfind("p:", 0) == 0) {
      ellmod::GFp fp(std::stoull(f.substr(2)));
      *out = new ellmod_curve{
          ellmod::WeierstrassCurve<ellmod::GFp>(fp, fp.parse(b2), fp.parse(b3))};
    } else {
      throw ellmod::InputError("field spec must be 'q' or 'p:<prime>'");
    }
  });
}

void ellmod_curve_free(ellmod_curve* c) { delete c; }

ellmod_status ellmod_curve_two_torsion_count(const ellmod_curve* c, int* out) {
  return guarded([&] {
    ellmod::require(c && out, "null pointer");
    std::visit([&](const auto& curve) { *out = static_cast<int>(two_torsion(curve).size()); },
               c->curve);
  });
}

ellmod_status ellmod_curve_point_count(const ellmod_curve* c, int64_t* out) {
  return guarded([&] {
    ellmod::require(c && out, "null pointer");
    const auto* fp = std::get_if<ellmod::WeierstrassCurve<ellmod::GFp>>(&c->curve);
    ellmod::require(fp != nullptr, "point counting needs a finite base field");
    *out = static_cast<int64_t>(ellmod::enumerate_points(*fp).size());
  });
}

ellmod_status ellmod_cmd_wps_table(const char* types, int max_rank, const char* format,
                                   char** out) {
  return guarded([&] {
    ellmod::require(out != nullptr, "null output pointer");
    auto res = ellmod::cmd_wps_table(types ? types : "all", max_rank);
    *out = dup_string(res.render(format ? format : "json"));
  });
}

ellmod_status ellmod_cmd_strata(const char* type, const char* field, const char* curve,
                                const char* points, const char* format, char** out) {
  return guarded([&] {
    ellmod::require(type && field && curve && points && out, "null pointer");
    auto res = ellmod::cmd_strata(type, field, curve, points);
    *out = dup_string(res.render(format ? format : "json"));
  });
}

ellmod_status ellmod_cmd_abel_jacobi(const char* field, const char* curve, const char* points,
                                     const char* format, char** out) {
  return guarded([&] {
    ellmod::require(field && curve && points && out, "null pointer");
    auto res = ellmod::cmd_abel_jacobi(field, curve, points);
    *out = dup_string(res.render(format ? format : "json"));
  });
}

ellmod_status ellmod_cmd_spectral_report(int n, int k, uint64_t seed, const char* coeffs_json,
                                         int selfcheck, const char* format, char** out) {
  return guarded([&] {
    ellmod::require(out != nullptr, "null output pointer");
    auto res = ellmod::cmd_spectral_report(n, k, seed, coeffs_json ? coeffs_json : "",
                                           selfcheck != 0);
    *out = dup_string(res.render(format ? format : "json"));
  });
}

ellmod_status ellmod_cmd_selftest(uint64_t seed, char** out) {
  try {
    if (!out) {
      g_last_error = "null output pointer";
      return ELLMOD_ERR_INPUT;
    }
    auto res = ellmod::cmd_selftest(seed);
    *out = dup_string(res.envelope.dump(2) + "\n");
    if (!res.all_pass) {
      g_last_error = "selftest failed at " + res.first_failure;
      return ELLMOD_ERR_SELFTEST;
    }
    g_last_error.clear();
    return ELLMOD_OK;
  } catch (const ellmod::InputError& e) {
    g_last_error = e.what();
    return ELLMOD_ERR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ELLMOD_ERR_INTERNAL;
  }
}

}  // extern "C"
