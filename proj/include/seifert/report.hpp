#pragma once

#include <string>

#include <json.hpp>

#include "seifert/star_graph.hpp"
#include "seifert/sweep.hpp"

namespace seifert {

// All command results are built as one ordered JSON document; --json dumps
// it verbatim and the text mode renders the same document with the walker
// below, so both views carry identical data in identical order.
using Document = nlohmann::ordered_json;

// Full invariant bundle: e, chi, chi/e, alpha, the numerical order of K,
// the discriminant group and |det|. Rationals are emitted as exact "p/q"
// strings. With verify set, the canonical cycle closed form is compared
// against the adjunction-system oracle coefficient by coefficient and
// |det| against e * prod(n_i); mismatches raise consistency_error.
Document invariants_document(const StarGraph& sg, bool verify);

// Every curve label with its K coefficient, always cross-checked against
// the oracle solve (the document says so explicitly).
Document canonical_cycle_document(const StarGraph& sg);

// Singularity class plus, at genus 0, the matched guaranteed case and the
// full certificate chain.
Document classify_document(const StarGraph& sg);

// dim A_k for 0 <= k <= k_max (genus 0 only).
Document poincare_document(const StarGraph& sg, long k_max);

// Gorenstein test and order of K in the graded sense. At genus >= 1 only
// the numerical order is reported, with the torsion question flagged as
// undecided.
Document gorenstein_document(const StarGraph& sg);

// Continued fraction expansion of n/q.
Document cf_document(const Int& n, const Int& q);

// One enumerated match, and the whole sweep with its counters.
Document sweep_match_document(const SweepMatch& m);
Document sweep_document(const SweepBounds& b, SweepFilter f, const SweepResult& r);

// Deterministic plain-text rendering: "key: value" lines, two-space
// indentation for nested documents, "- " items for arrays of records,
// scalar arrays inline as [a,b,c].
std::string render_text(const Document& d);

// The inline scalar-array form by itself (used for bare list output).
std::string render_inline_array(const Document& a);

} // namespace seifert
