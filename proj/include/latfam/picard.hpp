#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latfam/errors.hpp"

namespace latfam::picard {

// Divisor class l·L + sum_i e_i·E_i on a plane blown up in n points, with the
// standard intersection form L^2 = 1, E_i·E_j = -delta_ij, L·E_i = 0.
struct DivisorClass {
  std::int64_t l = 0;
  std::vector<std::int64_t> e;

  bool is_zero() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass sub(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(std::int64_t s, const DivisorClass& a);
std::int64_t intersect(const DivisorClass& c, const DivisorClass& d);

// -3L + E_1 + ... + E_n.
DivisorClass canonical_class(std::size_t n);

// Numeric model of a minimally polarized rational surface: the class lattice
// of a blown-up plane together with the polarization D. Point positions are
// not represented; nefness and the (-1)-curve condition are checked through
// the necessary lattice conditions only (construction gate), the rest is a
// documented modeling assumption on the input.
struct SurfaceModel {
  DivisorClass d;
  std::vector<std::string> labels;  // one name per exceptional basis slot

  std::size_t n() const { return d.e.size(); }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

// Gate used at construction and after every contraction:
//   D^2 >= 0, D·L >= 0, D·E_i >= 0, D·(L-E_i-E_j) >= 0,
//   and D·C != 0 for every candidate (-1)-class C in
//   { E_i, L-E_i-E_j, 2L-E_i-E_j-E_k-E_l-E_p }.
// Throws NotMprs naming the violated check.
void validate_mprs_gate(const SurfaceModel& model);

// D = degree·L - sum multiplicities_i·E_i, gate-checked.
SurfaceModel surface_from_basepoints(std::int64_t parametric_degree,
                                     const std::vector<std::int64_t>& multiplicities,
                                     std::vector<std::string> labels = {});

struct MinimalityResult {
  bool minimal = false;
  std::string reason;  // "D^2=0", "adjoint-empty", "adjoint-zero", or ""
};

// Sound one-sided minimality test:
//   D^2 = 0                         -> minimal
//   (D+K)·D < 0 (D nef => |D+K|=∅)  -> minimal
//   D+K = 0     (dim|0| = 0)        -> minimal
//   (D+K)^2 >= 0, (D+K)·D >= 0, (D+K)·L >= 0 -> not minimal
//   otherwise                        -> MinimalityUndecidable
MinimalityResult is_minimal_mprs(const SurfaceModel& model);

enum class CaseB { B0, B1, B2, B3, B4 };
const char* case_b_name(CaseB c);

// Adjoint relation (X,D) -> (X', D' = D+K restricted): contracts every basis
// class E_i with (D+K)·E_i = 0. A non-basis candidate (-1)-class orthogonal
// to D+K cannot be contracted in this basis and raises
// NonBasisContractionNeeded (reported, never silently skipped).
struct AdjointStep {
  SurfaceModel model;
  std::vector<std::size_t> contracted_slots;  // indices in the pre-step basis
  std::vector<std::string> contracted_labels;
};
AdjointStep adjoint_step(const SurfaceModel& model);

// Case of an adjoint relation; P^2 is recognized as class-lattice rank 1.
CaseB classify_case_B(const SurfaceModel& model, const SurfaceModel& next);

enum class TerminalKind { Ruled, LinearFibration, Plane, ConicFibration, Halphen, Undecided };
const char* terminal_kind_name(TerminalKind k);

struct FamilyClass {
  DivisorClass cls;
  bool tight = false;  // tight families satisfy F·K = -2

  friend bool operator==(const FamilyClass&, const FamilyClass&) = default;
};

struct MinimalRecognition {
  std::int64_t v = 0;
  std::vector<FamilyClass> families;
  bool families_complete = true;  // false when the row does not enumerate them
  TerminalKind kind = TerminalKind::Undecided;
};

// Recognizer table for minimal models:
//   D = nP, P·K = -2          -> v = 0, F = P            (ruled)
//   D = -cK, D^2 = 0, c > 0   -> v = 2c, infinitely many (Halphen)
//   rank 1, D = L / 2L / 3L   -> v = 1 / 2 / 3, F = L    (plane)
//   D+K = 0, 1 <= D^2 <= 8    -> v = 2, not enumerated   (conic fibration)
//   2D+K = nP, P·K = -2, P·D = 1 -> v = 1, F = P         (linear fibration)
// Anything else raises UnrecognizedMinimalModel with diagnostics.
MinimalRecognition recognize_minimal(const SurfaceModel& model);

struct ChainStep {
  SurfaceModel model;
  CaseB label;                                // B0 on the terminal row
  std::vector<std::size_t> contracted_slots;  // empty on the terminal row
  std::vector<std::string> contracted_labels;
};

struct ChainReport {
  std::vector<ChainStep> steps;  // chain order; last row is the minimal model
  std::int64_t v = 0;
  std::vector<FamilyClass> optimal_families;  // in the ORIGINAL basis
  bool families_complete = true;
  TerminalKind terminal_kind = TerminalKind::Undecided;
};

// Chain-step failures carry the steps completed so far.
class ChainError : public Error {
 public:
  ChainError(const Error& base, std::vector<ChainStep> partial)
      : Error(base.code(), base.message()), partial_steps(std::move(partial)) {}

  std::vector<ChainStep> partial_steps;
};

// Runs the adjoint chain to a minimal model, recognizes it, and accumulates
// +3 per B1 step and +2 per B2/B3/B4 step while transporting family classes
// back to the original basis (B2 replaces them with L - E_p per contracted
// slot, B1 with the line class).
ChainReport solve_min_degree(const SurfaceModel& model);

std::string divisor_to_string(const DivisorClass& d, const std::vector<std::string>& labels = {});

}  // namespace latfam::picard
