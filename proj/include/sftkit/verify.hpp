#pragma once

#include <optional>
#include <vector>

#include "sftkit/codes.hpp"
#include "sftkit/core.hpp"

namespace sftkit::verify {

using codes::SlidingBlockCode;
using core::Pattern;
using core::PeriodicConfig;
using core::SftSpec;
using core::Status;

// Certificate of conjugacy: codes both ways plus the block-test radius.
// Validity requires k > r_F' + r_G', the primes being the star-augmented
// radii max(r_F, r_X) and max(r_G, r_Y).
struct ConjugacyCertificate {
    SlidingBlockCode F;  // source spec -> target spec
    SlidingBlockCode G;  // target spec -> source spec
    int k = 0;
};

struct CertificateVerdict {
    Status status = Status::unknown;
    // refuted: an admissible B_k block whose round trip disagrees at the
    // origin; in_target tells which spec it belongs to
    std::optional<Pattern> counterexample;
    bool counterexample_in_target = false;
    int k = 0;
};

// Finite, sound both ways: Proven certifies conjugacy (compactness),
// Refuted carries the violating block. Never Unknown.
CertificateVerdict verify_conjugacy_certificate(const SftSpec& X, const SftSpec& Y,
                                                const ConjugacyCertificate& cert, int threads = 0);

struct ConjugacySearchVerdict {
    Status status = Status::unknown;  // proven or unknown, never refuted
    std::optional<ConjugacyCertificate> certificate;
    int max_radius = 0;
    int max_k = 0;
};

// Dovetailed enumeration: radius pairs by ascending sum, F tables in
// lexicographic order, G tables likewise, k ascending. Tables map the
// admissible source windows; inadmissible windows fall back to the first
// target symbol.
ConjugacySearchVerdict search_conjugacy(const SftSpec& X, const SftSpec& Y, int max_radius, int max_k);

struct InclusionVerdict {
    Status status = Status::unknown;  // proven or unknown
    // unknown: admissible block whose image carries a forbidden pattern in
    // its center region; it may be non-extensible, so this does not refute
    // inclusion. Retry at larger r or run check_extensibility on it.
    std::optional<Pattern> block;
    int r = 0;
};

// Proven soundly certifies F(X) included in Y: every admissible B_r block
// maps to a block with no forbidden pattern of Y anchored in the centered
// B_{r - r_F - r_Y} region.
InclusionVerdict check_factor_inclusion(const SlidingBlockCode& F, const SftSpec& X, const SftSpec& Y,
                                        int r);

enum class SurjectivityBlockClass {
    satisfied_by_preimage,
    satisfied_by_nonextensibility,
    refuted,
    undetermined,
};

struct SurjectivityBlockReport {
    Pattern block;
    SurjectivityBlockClass cls;
    std::optional<Pattern> preimage;           // satisfied_by_preimage
    int nonextensible_radius = -1;             // satisfied_by_nonextensibility
    std::optional<PeriodicConfig> witness;     // refuted: extensibility witness
};

struct SurjectivityReport {
    Status status = Status::unknown;
    // proven status is evidence at (n, R), not a proof of the statement
    bool evidence_only = true;
    std::vector<SurjectivityBlockReport> blocks;
    int n = 0;
    int extension_radius = 0;
    int period_budget = 0;
};

// Classifies every admissible B_n block of Y: preimage found, proven
// non-extensible, soundly refuting (extensible but with empty preimage
// set over B_{n+r_F}), or undetermined.
SurjectivityReport check_surjectivity(const SlidingBlockCode& F, const SftSpec& X, const SftSpec& Y,
                                      int n, int extension_radius, int period_budget);

struct EmptinessVerdict {
    Status status = Status::unknown;
    int radius = -1;  // proven: least n with zero admissible B_n blocks
    int n_max = 0;
};

EmptinessVerdict prove_empty(const SftSpec& X, int n_max);

struct NonemptinessVerdict {
    Status status = Status::unknown;
    std::optional<PeriodicConfig> witness;
    int period_budget = 0;
};

// Sound branch only: a valid torus proves nonemptiness; Unknown does not
// mean empty.
NonemptinessVerdict prove_nonempty(const SftSpec& X, int period_budget);

}  // namespace sftkit::verify
