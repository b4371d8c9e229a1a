#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypsys/models.hpp"

// Every computer comparison behind the systole bounds, re-implemented as a
// signed-margin check. A record compares a closed-form quantity (lhs) with
// the matching function of the half candidate length h, in a single
// functional scale, sign-adjusted so that a positive margin means the
// claimed inequality holds. Sweeps evaluate checks over genus ranges and
// aggregate worst cases.

namespace hypsys::verifier {

using models::ModelKind;

enum class CheckId {
    VertexDiameter,
    EdgeDiameter,
    OhEdgeAbj,
    NonadjEdges,
    B1C3Diameter,
    C1C2Diameter,
    CenterEdge,
    X2Diameter,
    X3Diameter,
    XX3Separation,
    FtMinimum,
    B1C4Perpendicular,
};

inline constexpr int kCheckCount = 12;

// Scale in which lhs and threshold are expressed.
enum class Scale { Cosh, Sinh, Length };

// Claimed relation of the underlying distances (lhs vs threshold).
enum class Relation { Greater, Less, Equal };

enum class Status { Pass, Fail, Unasserted, Indeterminate };

struct MarginRecord {
    CheckId check;
    ModelKind kind;
    int genus = 0;
    int index = 0;       // k or j where applicable, else 0
    double lhs = 0;      // closed-form quantity in `scale`
    double threshold = 0;
    double margin = 0;   // sign-adjusted: positive = claim holds
    Scale scale = Scale::Cosh;
    Relation relation = Relation::Greater;
    Status status = Status::Unasserted;
    bool pass = false;
};

const char* check_name(CheckId c);          // UPPER_SNAKE identifier
const char* check_cli_name(CheckId c);      // kebab-case CLI spelling
std::optional<CheckId> check_from_cli_name(const std::string& s);
const char* status_name(Status s);
const char* scale_name(Scale s);
const char* relation_name(Relation r);

// Smallest genus at which the check's claim is asserted for the model;
// smaller genera are still evaluated but reported UNASSERTED.
int threshold_genus(CheckId c, ModelKind kind);

// Comparisons inside +-guard of zero are INDETERMINATE (and fail sweeps);
// equality-type records use a fixed 1e-10 tolerance instead.
inline constexpr double kDefaultGuard = 1e-9;
inline constexpr double kEqualityTol = 1e-10;

// --- single-cell checks ----------------------------------------------------

// Distance from vertex k (direction 2ka from the diameter vertex) to the
// diameter, in sinh scale. k in [1, floor(n/4)].
MarginRecord check_vertex_diameter(ModelKind kind, int genus, int k,
                                   double guard = kDefaultGuard);

// Distance from the k-th nearest edge to the diameter, cosh scale. k is
// the 1-based ordinal: k=1 is the edge sharing the vertex A, the k-th
// edge midpoint sits at angle (2k-1)a. Claimed below h for k <= 2 and
// above h for k >= 3 while (2k-1)a <= pi/2; obtuse positions (reachable
// only in the dual-domain lobe) are evaluated but not asserted.
MarginRecord check_edge_diameter(ModelKind kind, int genus, int k,
                                 double guard = kDefaultGuard);

// Distance from the segment OH to the j-th edge at the vertex A
// (j = 1, 2, 3), sinh scale. Claimed within h for j = 1, 2, beyond for j = 3.
MarginRecord check_oh_edge(ModelKind kind, int genus, int j,
                           double guard = kDefaultGuard);

// Distance between nearest non-intersecting edges, cosh scale.
MarginRecord check_nonadjacent_edges(ModelKind kind, int genus,
                                     double guard = kDefaultGuard);

// Distance from the diameter to the edge two steps out at the adjacent
// vertex (angles b and 4b over one edge length), cosh scale.
MarginRecord check_b1c3(ModelKind kind, int genus, double guard = kDefaultGuard);

// Distance from the diameter to the second-ring edge seen from the center
// (angles 4a and 3b over the circumradius), cosh scale.
MarginRecord check_c1c2(ModelKind kind, int genus, double guard = kDefaultGuard);

// Distance from the polygon center to its edges (the apothem), cosh scale.
MarginRecord check_center_edge(ModelKind kind, int genus,
                               double guard = kDefaultGuard);

// Two stacked perpendiculars separating the diameter from the once-removed
// diameter: their summed length against h, length scale.
MarginRecord check_x2(ModelKind kind, int genus, double guard = kDefaultGuard);

// Distance from the diameter to the diameter of the second-ring polygon
// (angles 4b and 4a over the circumradius), cosh scale.
MarginRecord check_x3_diameter(ModelKind kind, int genus,
                               double guard = kDefaultGuard);

// The midline bound yy0 of the symmetrized quadrilateral over the same
// base, length scale against h.
MarginRecord check_x_x3_separation(ModelKind kind, int genus,
                                   double guard = kDefaultGuard);

// Global minimum of f(t), the squared-corner distance profile along the
// diameter, against cosh(2h); also validates the closed-form derivative
// against central finite differences at five sample points.
MarginRecord check_ft_minimum(ModelKind kind, int genus,
                              double guard = kDefaultGuard);

// The two routes to the minimizer of f, for cross-checking: the closed-form
// stationary point (|AR1| - |C6R2|)/2 and a golden-section search over f.
double ft_stationary_point(ModelKind kind, int genus);
double ft_argmin_by_golden_section(ModelKind kind, int genus);

// Exact-equality witnesses built by explicit half-plane construction:
// index 0: distance(AA', B1B1') = h, 1e-10 tolerance
// index 1: distance(H, B1B1') = h (tangency), 1e-10 tolerance
// index 2: distance(AA', B2B2') >= h
std::vector<MarginRecord> check_b1c4_perpendicular(ModelKind kind, int genus,
                                                   double guard = kDefaultGuard);

// --- sweeps ----------------------------------------------------------------

struct SweepSummary {
    CheckId check;
    ModelKind kind;
    double min_margin = 0;       // over asserted records
    int argmin_genus = 0;
    int argmin_index = 0;
    int asserted = 0;
    int unasserted = 0;
    int failed = 0;              // FAIL or INDETERMINATE
};

struct SweepReport {
    std::vector<MarginRecord> records;
    std::vector<SweepSummary> summaries;
    bool all_pass = true;        // no asserted FAIL/INDETERMINATE
};

// Evaluates each check at each genus of [genus_lo, genus_hi]. Indexed
// checks record their claimed-near cells plus the binding far cell per
// genus. Per-check domain errors become failed records; the sweep never
// aborts. Records appear in deterministic (genus, check, index) order.
SweepReport sweep(const std::vector<CheckId>& checks, ModelKind kind,
                  int genus_lo, int genus_hi, double guard = kDefaultGuard);

std::vector<CheckId> all_checks();

}  // namespace hypsys::verifier
