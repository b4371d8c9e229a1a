#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypsys/halfplane.hpp"
#include "hypsys/models.hpp"

// Brute-force oracle for the systole: side-pairing generators of the
// opposite-edge gluing of the centered regular polygon, breadth-first
// enumeration of short group elements with metric pruning, and recovery of
// the minimal translation length together with the number of distinct
// shortest closed geodesics.

namespace hypsys::fuchsian {

using halfplane::MoebiusMap;
using models::ModelKind;

struct GeneratorSet {
    ModelKind kind;
    int genus;
    int n_sides;                    // 4g or 4g+2
    std::vector<MoebiusMap> gens;   // gens[s] carries the neighbor across side s;
                                    // gens[(s + n/2) % n] is its inverse
    double circumradius;            // |OA|
    double apothem;                 // |OD|; every generator translates by twice this
};

// Builds the side pairings for P1 or P2 (the dual domain shares P2's group).
// Validates endpoint mapping of each pairing to 1e-10 and the vertex-cycle
// holonomy (product ~ +-identity, wedge angles summing to 2 pi per class).
GeneratorSet build_generators(ModelKind kind, int genus);

// Corner cycle around one vertex class: step count, accumulated matrix
// residual from +-identity, and the total wedge angle.
struct VertexCycle {
    int corners = 0;
    double residual = 0;
    double angle_sum = 0;
};
VertexCycle vertex_cycle(const GeneratorSet& gs, int start_corner);

struct GroupElement {
    std::vector<uint16_t> word;  // generator indices
    MoebiusMap matrix;           // determinant-1 normalized
    double displacement;         // d(o, gamma o), o the polygon center
    double trace_abs;

    bool hyperbolic() const { return trace_abs > 2.0 + 1e-12; }
    double translation_length() const { return 2.0 * std::acosh(trace_abs / 2.0); }
};

struct EnumerationCaps {
    std::size_t max_visited = 10'000'000;
};

struct EnumerationResult {
    std::vector<GroupElement> elements;  // displacement <= bound, sorted
    std::size_t visited = 0;             // dedup set size over all phases
    double bound = 0;
};

// All distinct group elements with base-point displacement at most `bound`.
// Deterministic: output sorted by (displacement, matrix entries).
EnumerationResult enumerate_short_elements(const GeneratorSet& gs, double bound,
                                           const EnumerationCaps& caps = {});

// Default search bound guaranteeing every geodesic at most as long as the
// candidate has an enumerated representative.
double default_displacement_bound(ModelKind kind, int genus);

struct OracleResult {
    double systole = 0;        // minimal translation length found
    double candidate = 0;      // closed-form candidate for comparison
    int multiplicity = 0;      // distinct shortest closed geodesics
    std::size_t element_count = 0;
    std::size_t visited = 0;
    double seconds = 0;
};

OracleResult oracle_systole(ModelKind kind, int genus,
                            std::optional<double> displacement_bound = std::nullopt,
                            const EnumerationCaps& caps = {});

struct ProbeSample {
    double arc;        // position along the diameter, measured from O
    double half_disp;  // min over nontrivial gamma of d(x, gamma x)/2
};

struct ProbeResult {
    std::vector<ProbeSample> samples;  // along OA, with H included exactly
    double min_half = 0;
    double argmin_arc = 0;
    double at_h = 0;
    double at_o = 0;
    double oh = 0;  // |OH|, the sample x = H
};

// Injectivity-radius probe along the segment OA (H included as an exact
// sample point): half the minimal displacement over nontrivial elements.
ProbeResult ball_embedding_probe(ModelKind kind, int genus, int samples,
                                 const EnumerationCaps& caps = {});

}  // namespace hypsys::fuchsian
