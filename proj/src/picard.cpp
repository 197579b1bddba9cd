#include "latfam/picard.hpp"

#include <algorithm>

#include "latfam/checked.hpp"

namespace latfam::picard {

bool DivisorClass::is_zero() const {
  if (l != 0) return false;
  return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

void require_same_basis(const DivisorClass& a, const DivisorClass& b) {
  if (a.e.size() != b.e.size())
    fail(Errc::BasisMismatch, "divisor classes live on different basis ranks");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("E" + std::to_string(i + 1));
  return out;
}

}  // namespace

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  require_same_basis(a, b);
  DivisorClass r{add_ck(a.l, b.l), {}};
  r.e.reserve(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e.push_back(add_ck(a.e[i], b.e[i]));
  return r;
}

DivisorClass sub(const DivisorClass& a, const DivisorClass& b) {
  require_same_basis(a, b);
  DivisorClass r{sub_ck(a.l, b.l), {}};
  r.e.reserve(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e.push_back(sub_ck(a.e[i], b.e[i]));
  return r;
}

DivisorClass scale(std::int64_t s, const DivisorClass& a) {
  DivisorClass r{mul_ck(s, a.l), {}};
  r.e.reserve(a.e.size());
  for (std::int64_t v : a.e) r.e.push_back(mul_ck(s, v));
  return r;
}

std::int64_t intersect(const DivisorClass& c, const DivisorClass& d) {
  require_same_basis(c, d);
  std::int64_t acc = mul_ck(c.l, d.l);
  for (std::size_t i = 0; i < c.e.size(); ++i) acc = sub_ck(acc, mul_ck(c.e[i], d.e[i]));
  return acc;
}

DivisorClass canonical_class(std::size_t n) {
  return {-3, std::vector<std::int64_t>(n, 1)};
}

namespace {

// Candidate (-1)-classes: self-intersection -1 and C·K = -1 by construction.
template <typename Fn>
void for_each_minus_one_candidate(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) {
    DivisorClass c{0, std::vector<std::int64_t>(n, 0)};
    c.e[i] = 1;
    if (!fn(c, "E" + std::to_string(i + 1))) return;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      DivisorClass c{1, std::vector<std::int64_t>(n, 0)};
      c.e[i] = -1;
      c.e[j] = -1;
      if (!fn(c, "L-E" + std::to_string(i + 1) + "-E" + std::to_string(j + 1))) return;
    }
  if (n < 5) return;
  std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
  while (true) {
    DivisorClass c{2, std::vector<std::int64_t>(n, 0)};
    std::string name = "2L";
    for (std::size_t i : idx) {
      c.e[i] = -1;
      name += "-E" + std::to_string(i + 1);
    }
    if (!fn(c, name)) return;
    // next 5-combination
    std::size_t k = 5;
    while (k > 0 && idx[k - 1] == n - 5 + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < 5; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

void validate_mprs_gate(const SurfaceModel& model) {
  const DivisorClass& d = model.d;
  const std::size_t n = model.n();
  if (intersect(d, d) < 0) fail(Errc::NotMprs, "D^2 < 0");
  if (d.l < 0) fail(Errc::NotMprs, "D·L < 0");
  for (std::size_t i = 0; i < n; ++i)
    if (neg_ck(d.e[i]) < 0)
      fail(Errc::NotMprs, "D·" + model.labels[i] + " < 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (add_ck(add_ck(d.l, d.e[i]), d.e[j]) < 0)
        fail(Errc::NotMprs,
             "D·(L-" + model.labels[i] + "-" + model.labels[j] + ") < 0");
  std::string hit;
  for_each_minus_one_candidate(n, [&](const DivisorClass& c, const std::string& name) {
    if (intersect(d, c) == 0) {
      hit = name;
      return false;
    }
    return true;
  });
  if (!hit.empty())
    fail(Errc::NotMprs, "candidate (-1)-class " + hit + " has D·C = 0");
}

SurfaceModel surface_from_basepoints(std::int64_t parametric_degree,
                                     const std::vector<std::int64_t>& multiplicities,
                                     std::vector<std::string> labels) {
  if (parametric_degree <= 0) fail(Errc::NotMprs, "parametric degree must be positive");
  for (std::int64_t m : multiplicities)
    if (m < 0) fail(Errc::NotMprs, "multiplicities must be nonnegative");
  SurfaceModel model;
  model.d.l = parametric_degree;
  model.d.e.reserve(multiplicities.size());
  for (std::int64_t m : multiplicities) model.d.e.push_back(neg_ck(m));
  if (labels.empty())
    model.labels = default_labels(multiplicities.size());
  else if (labels.size() == multiplicities.size())
    model.labels = std::move(labels);
  else
    fail(Errc::NotMprs, "label count does not match multiplicity count");
  validate_mprs_gate(model);
  return model;
}

MinimalityResult is_minimal_mprs(const SurfaceModel& model) {
  const DivisorClass& d = model.d;
  DivisorClass a = add(d, canonical_class(model.n()));
  if (intersect(d, d) == 0) return {true, "D^2=0"};
  if (intersect(a, d) < 0) return {true, "adjoint-empty"};
  if (a.is_zero()) return {true, "adjoint-zero"};
  if (intersect(a, a) >= 0 && intersect(a, d) >= 0 && a.l >= 0) return {false, ""};
  fail(Errc::MinimalityUndecidable,
       "effectivity of |D+K| is not decidable from the class lattice: " + divisor_to_string(a));
}

const char* case_b_name(CaseB c) {
  switch (c) {
    case CaseB::B0: return "B0";
    case CaseB::B1: return "B1";
    case CaseB::B2: return "B2";
    case CaseB::B3: return "B3";
    case CaseB::B4: return "B4";
  }
  return "?";
}

AdjointStep adjoint_step(const SurfaceModel& model) {
  if (is_minimal_mprs(model).minimal)
    fail(Errc::AlreadyMinimal, "adjoint step on a minimal model");
  const std::size_t n = model.n();
  DivisorClass a = add(model.d, canonical_class(n));

  AdjointStep step;
  step.model.d.l = a.l;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.e[i] == 0) {  // (D+K)·E_i = 0: blow down
      step.contracted_slots.push_back(i);
      step.contracted_labels.push_back(model.labels[i]);
    } else {
      step.model.d.e.push_back(a.e[i]);
      step.model.labels.push_back(model.labels[i]);
    }
  }

  // Basis slots are actual (-1)-curves by the model's semantics, so the
  // contractions above are forced. A non-basis orthogonal candidate that
  // meets one of them cannot be an irreducible curve at the same time (two
  // intersecting curves cannot both be blown down by one morphism) and is
  // discarded; a candidate disjoint from all of them may genuinely need a
  // Cremona basis change, which is reported, never performed.
  std::string non_basis;
  for_each_minus_one_candidate(n, [&](const DivisorClass& c, const std::string& name) {
    if (c.l == 0) return true;  // basis slot
    if (intersect(a, c) != 0) return true;
    for (std::size_t slot : step.contracted_slots)
      if (c.e[slot] != 0) return true;
    non_basis = name;
    return false;
  });
  if (!non_basis.empty())
    fail(Errc::NonBasisContractionNeeded,
         "non-basis (-1)-class " + non_basis +
             " has (D+K)·C = 0 and is disjoint from every contracted basis class");

  validate_mprs_gate(step.model);
  return step;
}

CaseB classify_case_B(const SurfaceModel& model, const SurfaceModel& next) {
  bool plane = model.n() == 0;
  bool plane_next = next.n() == 0;
  if (plane && plane_next) return CaseB::B1;
  if (plane && !plane_next) fail(Errc::Internal, "adjoint step cannot raise the lattice rank");
  if (plane_next) return CaseB::B2;
  return is_minimal_mprs(next).minimal ? CaseB::B3 : CaseB::B4;
}

const char* terminal_kind_name(TerminalKind k) {
  switch (k) {
    case TerminalKind::Ruled: return "ruled";
    case TerminalKind::LinearFibration: return "linear-fibration";
    case TerminalKind::Plane: return "plane";
    case TerminalKind::ConicFibration: return "conic-fibration";
    case TerminalKind::Halphen: return "halphen";
    case TerminalKind::Undecided: return "undecided";
  }
  return "?";
}

namespace {

std::int64_t content(const DivisorClass& d) {
  std::int64_t g = abs_ck(d.l);
  for (std::int64_t v : d.e) g = gcd64(g, v);
  return g;
}

}  // namespace

MinimalRecognition recognize_minimal(const SurfaceModel& model) {
  if (!is_minimal_mprs(model).minimal)
    fail(Errc::Internal, "recognize_minimal requires a minimal model");
  const std::size_t n = model.n();
  const DivisorClass& d = model.d;
  const DivisorClass k = canonical_class(n);

  if (d.is_zero())
    fail(Errc::UnrecognizedMinimalModel, "zero polarization");

  if (intersect(d, d) == 0) {
    std::int64_t g = content(d);
    DivisorClass p = {d.l / g, {}};
    p.e.reserve(n);
    for (std::int64_t v : d.e) p.e.push_back(v / g);
    std::int64_t pk = intersect(p, k);
    if (pk == -2) return {0, {{p, true}}, true, TerminalKind::Ruled};
    if (pk == 0 && p == scale(-1, k))
      return {mul_ck(2, g), {}, false, TerminalKind::Halphen};
    fail(Errc::UnrecognizedMinimalModel,
         "D^2 = 0 but the primitive part " + divisor_to_string(p) +
             " is neither a rational pencil nor anticanonical (P·K = " + std::to_string(pk) + ")");
  }

  if (n == 0) {
    DivisorClass line{1, {}};
    if (d.l >= 1 && d.l <= 3)
      return {d.l, {{line, false}}, true, TerminalKind::Plane};
    fail(Errc::UnrecognizedMinimalModel,
         "rank-1 polarization " + std::to_string(d.l) + "L matches no plane row");
  }

  DivisorClass a = add(d, k);
  if (a.is_zero()) {
    std::int64_t d2 = intersect(d, d);
    if (d2 >= 1 && d2 <= 8) return {2, {}, false, TerminalKind::ConicFibration};
    fail(Errc::UnrecognizedMinimalModel,
         "anticanonical polarization with D^2 = " + std::to_string(d2) + " outside 1..8");
  }

  DivisorClass t = add(scale(2, d), k);
  if (!t.is_zero() && intersect(t, t) == 0) {
    std::int64_t g = content(t);
    DivisorClass p = {t.l / g, {}};
    p.e.reserve(n);
    for (std::int64_t v : t.e) p.e.push_back(v / g);
    if (intersect(p, k) == -2 && intersect(p, d) == 1)
      return {1, {{p, true}}, true, TerminalKind::LinearFibration};
  }

  fail(Errc::UnrecognizedMinimalModel,
       "minimal model matches no recognizer row: D = " + divisor_to_string(d) +
           ", D^2 = " + std::to_string(intersect(d, d)) +
           ", (D+K)·D = " + std::to_string(intersect(a, d)));
}

ChainReport solve_min_degree(const SurfaceModel& model) {
  std::vector<ChainStep> steps;
  MinimalRecognition base;
  try {
    SurfaceModel cur = model;
    while (true) {
      if (is_minimal_mprs(cur).minimal) {
        base = recognize_minimal(cur);
        steps.push_back({cur, CaseB::B0, {}, {}});
        break;
      }
      AdjointStep next = adjoint_step(cur);
      CaseB label = classify_case_B(cur, next.model);
      steps.push_back({cur, label, next.contracted_slots, next.contracted_labels});
      cur = std::move(next.model);
    }
  } catch (const Error& err) {
    throw ChainError(err, std::move(steps));
  }

  ChainReport rep;
  rep.steps = steps;
  rep.v = base.v;
  rep.optimal_families = base.families;
  rep.families_complete = base.families_complete;
  rep.terminal_kind = base.kind;

  // Unwind from the minimal model back to the original basis.
  for (std::size_t s = steps.size() - 1; s-- > 0;) {
    const ChainStep& step = steps[s];
    const std::size_t n_pre = step.model.n();
    switch (step.label) {
      case CaseB::B1:
        rep.v = add_ck(rep.v, 3);
        rep.optimal_families = {{DivisorClass{1, {}}, false}};
        rep.families_complete = true;
        break;
      case CaseB::B2: {
        rep.v = add_ck(rep.v, 2);
        rep.optimal_families.clear();
        for (std::size_t slot : step.contracted_slots) {
          DivisorClass f{1, std::vector<std::int64_t>(n_pre, 0)};
          f.e[slot] = -1;
          rep.optimal_families.push_back({f, true});
        }
        rep.families_complete = true;
        break;
      }
      case CaseB::B3:
      case CaseB::B4: {
        rep.v = add_ck(rep.v, 2);
        // Tight pullback adds no exceptional component: re-insert zeros at
        // the contracted slots, coefficients otherwise unchanged.
        for (FamilyClass& fam : rep.optimal_families) {
          std::vector<std::int64_t> lifted(n_pre, 0);
          std::size_t src = 0;
          for (std::size_t i = 0; i < n_pre; ++i) {
            if (std::find(step.contracted_slots.begin(), step.contracted_slots.end(), i) !=
                step.contracted_slots.end())
              continue;
            lifted[i] = fam.cls.e[src++];
          }
          fam.cls.e = std::move(lifted);
        }
        break;
      }
      case CaseB::B0:
        fail(Errc::Internal, "B0 inside the unwind");
    }
  }
  return rep;
}

std::string divisor_to_string(const DivisorClass& d, const std::vector<std::string>& labels) {
  std::string out;
  if (d.l != 0) {
    if (d.l == 1)
      out = "L";
    else if (d.l == -1)
      out = "-L";
    else
      out = std::to_string(d.l) + "L";
  }
  for (std::size_t i = 0; i < d.e.size(); ++i) {
    std::int64_t c = d.e[i];
    if (c == 0) continue;
    std::string name = i < labels.size() ? labels[i] : "E" + std::to_string(i + 1);
    std::string mag = abs_ck(c) == 1 ? "" : std::to_string(abs_ck(c));
    if (out.empty())
      out += (c < 0 ? "-" : "") + mag + name;
    else
      out += (c < 0 ? " - " : " + ") + mag + name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace latfam::picard
