#include "ihtw/ihtw.h"

#include "ihtw/cap.hpp"
#include "ihtw/constructions.hpp"

#include <cstring>
#include <fstream>

struct ihtw_complex {
  ihtw::FilteredComplex k;
};

struct ihtw_groups {
  int first = 0;
  std::vector<ihtw::HomologyGroup> groups;
  std::vector<std::string> strings;
  std::vector<std::vector<std::string>> torsion;
};

struct ihtw_report {
  bool passed = true;
  std::vector<std::string> lines;
};

namespace {

thread_local std::string last_error;

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ihtw_status fail(ihtw_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
ihtw_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ihtw::InputError& e) {
    return fail(IHTW_INVALID_INPUT, e.what());
  } catch (const ComplexError& e) {
    return fail(IHTW_INVALID_COMPLEX, e.what());
  } catch (const ihtw::OrientationError& e) {
    return fail(IHTW_NOT_ORIENTABLE, e.what());
  } catch (const ihtw::NonFreeModuleError& e) {
    return fail(IHTW_UNSUPPORTED, e.what());
  } catch (const std::domain_error& e) {
    return fail(IHTW_INVALID_INPUT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(IHTW_INVALID_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(IHTW_INTERNAL, e.what());
  }
}

ihtw::CoefficientRing ring_of(const char* spec) {
  if (!spec) throw ihtw::InputError("missing coefficient ring");
  return ihtw::CoefficientRing::parse(spec);
}

ihtw::Perversity perversity_of(const char* expr, int n) {
  if (!expr) throw ihtw::InputError("missing perversity");
  return ihtw::Perversity::parse(expr, n);
}

// Throws ComplexError with the first failing witness.
void require_valid(const ihtw::FilteredComplex& k, bool need_normal) {
  ihtw::ValidationReport r = ihtw::validate(k);
  for (const auto& c : r.checks)
    if (!c.passed) throw ComplexError(c.condition + ": " + c.witness);
  if (need_normal && !r.normal) throw ComplexError("complex is not normal");
}

// Fails early with the offending top simplices named.
void require_oriented(const ihtw::FilteredComplex& k, const ihtw::CoefficientRing& ring) {
  try {
    ihtw::fundamental_class(k, ring);
  } catch (const ihtw::OrientationError& e) {
    std::string where;
    for (const auto& s : e.witness()) where += (where.empty() ? "" : " ") + k.describe(s);
    throw ihtw::OrientationError(std::string(e.what()) + (where.empty() ? "" : " at " + where), e.witness());
  }
}

ihtw_report* wrap(const ihtw::Report& r) { return new ihtw_report{r.passed, r.lines}; }

ihtw_status make_complex(ihtw::FilteredComplex k, ihtw_complex** out) {
  *out = new ihtw_complex{std::move(k)};
  return IHTW_OK;
}

}  // namespace

extern "C" {

const char* ihtw_last_error(void) { return last_error.c_str(); }

const char* ihtw_status_name(ihtw_status status) {
  switch (status) {
    case IHTW_OK: return "ok";
    case IHTW_INVALID_INPUT: return "invalid input";
    case IHTW_INVALID_COMPLEX: return "invalid complex";
    case IHTW_NOT_ORIENTABLE: return "not orientable";
    case IHTW_UNSUPPORTED: return "unsupported";
    case IHTW_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ihtw_status ihtw_complex_builtin(const char* name, ihtw_complex** out) {
  return guarded([&] {
    if (!name || !out) throw ihtw::InputError("null argument");
    return make_complex(ihtw::builtin_complex(name), out);
  });
}

ihtw_status ihtw_complex_parse(const char* text, ihtw_complex** out) {
  return guarded([&] {
    if (!text || !out) throw ihtw::InputError("null argument");
    return make_complex(ihtw::parse_complex(text), out);
  });
}

ihtw_status ihtw_complex_load(const char* path, ihtw_complex** out) {
  return guarded([&] {
    if (!path || !out) throw ihtw::InputError("null argument");
    return make_complex(ihtw::load_complex(path), out);
  });
}

void ihtw_complex_free(ihtw_complex* complex) { delete complex; }

int ihtw_complex_dimension(const ihtw_complex* complex) { return complex ? complex->k.dimension() : -1; }

size_t ihtw_complex_count(const ihtw_complex* complex, int dim) {
  if (!complex || dim < 0 || dim > complex->k.top_dimension()) return 0;
  return complex->k.count(dim);
}

ihtw_status ihtw_complex_validate(const ihtw_complex* complex, ihtw_report** out) {
  return guarded([&] {
    if (!complex || !out) throw ihtw::InputError("null argument");
    ihtw::ValidationReport r = ihtw::validate(complex->k);
    auto* report = new ihtw_report;
    report->passed = r.valid();
    std::string text = r.text();
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      report->lines.push_back(text.substr(start, end - start));
      start = end == std::string::npos ? text.size() : end + 1;
    }
    *out = report;
    return IHTW_OK;
  });
}

ihtw_status ihtw_compute(const ihtw_complex* complex, ihtw_kind kind, const char* ring, const char* perversity,
                         int first, int last, ihtw_groups** out) {
  return guarded([&] {
    if (!complex || !out) throw ihtw::InputError("null argument");
    if (first > last) throw ihtw::InputError("empty degree range");
    const ihtw::FilteredComplex& k = complex->k;
    const ihtw::CoefficientRing r = ring_of(ring);
    auto groups = std::make_unique<ihtw_groups>();
    groups->first = first;
    if (kind == IHTW_HOMOLOGY) {
      ihtw::PresentedComplex c = k.chain_complex(r);
      for (int d = first; d <= last; ++d) groups->groups.push_back(ihtw::homology(c, d));
    } else {
      const ihtw::Perversity p = perversity_of(perversity, k.dimension());
      require_valid(k, false);
      if (kind == IHTW_IH || kind == IHTW_GM) {
        ihtw::IntersectionComplex ic = ihtw::intersection_complex(k, p, r);
        ihtw::PresentedComplex dual = kind == IHTW_GM ? ihtw::gm_cochain_complex(ic) : ihtw::PresentedComplex(r, 0, {});
        for (int d = first; d <= last; ++d)
          groups->groups.push_back(kind == IHTW_GM ? ihtw::homology(dual, -d) : ihtw::homology(ic.complex(), d));
      } else if (kind == IHTW_TW) {
        ihtw::TWComplex tw = ihtw::tw_complex(std::make_shared<const ihtw::BlownComplex>(k, r), p);
        for (int d = first; d <= last; ++d) groups->groups.push_back(tw.cohomology(d));
      } else {
        throw ihtw::InputError("unknown kind");
      }
    }
    for (const auto& g : groups->groups) {
      groups->strings.push_back(g.to_string());
      std::vector<std::string> t;
      for (const auto& x : g.torsion()) t.push_back(x.str());
      groups->torsion.push_back(std::move(t));
    }
    *out = groups.release();
    return IHTW_OK;
  });
}

void ihtw_groups_free(ihtw_groups* groups) { delete groups; }

int ihtw_groups_first(const ihtw_groups* groups) { return groups ? groups->first : 0; }

int ihtw_groups_last(const ihtw_groups* groups) {
  return groups ? groups->first + static_cast<int>(groups->groups.size()) - 1 : -1;
}

namespace {

const ihtw::HomologyGroup* group_at(const ihtw_groups* groups, int degree, std::size_t* slot) {
  if (!groups || degree < groups->first || degree > ihtw_groups_last(groups)) return nullptr;
  *slot = static_cast<std::size_t>(degree - groups->first);
  return &groups->groups[*slot];
}

}  // namespace

const char* ihtw_groups_string(const ihtw_groups* groups, int degree) {
  std::size_t slot = 0;
  return group_at(groups, degree, &slot) ? groups->strings[slot].c_str() : nullptr;
}

size_t ihtw_groups_rank(const ihtw_groups* groups, int degree) {
  std::size_t slot = 0;
  const auto* g = group_at(groups, degree, &slot);
  return g ? g->rank() : 0;
}

size_t ihtw_groups_torsion_count(const ihtw_groups* groups, int degree) {
  std::size_t slot = 0;
  const auto* g = group_at(groups, degree, &slot);
  return g ? g->torsion().size() : 0;
}

const char* ihtw_groups_torsion(const ihtw_groups* groups, int degree, size_t i) {
  std::size_t slot = 0;
  if (!group_at(groups, degree, &slot) || i >= groups->torsion[slot].size()) return nullptr;
  return groups->torsion[slot][i].c_str();
}

ihtw_status ihtw_verify_factorization(const ihtw_complex* complex, const char* ring,
                                      const char* const* perversities, size_t count, ihtw_report** out) {
  return guarded([&] {
    if (!complex || !out || (count && !perversities)) throw ihtw::InputError("null argument");
    const ihtw::FilteredComplex& k = complex->k;
    require_valid(k, true);
    std::vector<ihtw::Perversity> ps;
    for (size_t i = 0; i < count; ++i) ps.push_back(perversity_of(perversities[i], k.dimension()));
    if (ps.empty()) ps = ihtw::gm_perversities(k.dimension());
    const ihtw::CoefficientRing r = ring_of(ring);
    require_oriented(k, r);
    *out = wrap(ihtw::verify_factorization(k, ps, r));
    return IHTW_OK;
  });
}

ihtw_status ihtw_check_zero_top(const ihtw_complex* complex, const char* ring, ihtw_report** out) {
  return guarded([&] {
    if (!complex || !out) throw ihtw::InputError("null argument");
    require_valid(complex->k, true);
    const ihtw::CoefficientRing r = ring_of(ring);
    require_oriented(complex->k, r);
    *out = wrap(ihtw::check_zero_top(complex->k, r));
    return IHTW_OK;
  });
}

ihtw_status ihtw_check_cap_identities(const ihtw_complex* complex, const char* ring, ihtw_report** out) {
  return guarded([&] {
    if (!complex || !out) throw ihtw::InputError("null argument");
    const ihtw::CoefficientRing r = ring_of(ring);
    ihtw::Report report = ihtw::check_local_cap_identity(complex->k, r);
    report.merge(ihtw::check_chain_level_identity(complex->k, r));
    *out = wrap(report);
    return IHTW_OK;
  });
}

ihtw_status ihtw_demo_sigma_rp3(ihtw_report** out) {
  return guarded([&] {
    if (!out) throw ihtw::InputError("null argument");
    *out = wrap(ihtw::gm_nonfactorization_demo(ihtw::builtin_complex("sigma-rp3")));
    return IHTW_OK;
  });
}

int ihtw_report_passed(const ihtw_report* report) { return report && report->passed ? 1 : 0; }

size_t ihtw_report_line_count(const ihtw_report* report) { return report ? report->lines.size() : 0; }

const char* ihtw_report_line(const ihtw_report* report, size_t i) {
  return report && i < report->lines.size() ? report->lines[i].c_str() : nullptr;
}

void ihtw_report_free(ihtw_report* report) { delete report; }

size_t ihtw_gm_perversity_count(int n) { return n < 0 ? 0 : ihtw::gm_perversities(n).size(); }

namespace {

ihtw_status copy_out(const std::string& s, char* buffer, size_t size) {
  if (!buffer || s.size() + 1 > size) return fail(IHTW_INVALID_INPUT, "buffer too small");
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return IHTW_OK;
}

}  // namespace

ihtw_status ihtw_gm_perversity_spec(int n, size_t index, char* buffer, size_t size) {
  return guarded([&] {
    if (n < 0) throw ihtw::InputError("negative dimension");
    auto all = ihtw::gm_perversities(n);
    if (index >= all.size()) throw ihtw::InputError("perversity index out of range");
    return copy_out(all[index].spec(), buffer, size);
  });
}

ihtw_status ihtw_perversity_values(const char* expr, int n, char* buffer, size_t size) {
  return guarded([&] { return copy_out(perversity_of(expr, n).to_string(), buffer, size); });
}

}  // extern "C"
