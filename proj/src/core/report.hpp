#pragma once

#include <json.hpp>

#include "core/cochain.hpp"
#include "core/embedding.hpp"
#include "core/expander.hpp"
#include "core/hypergraph.hpp"
#include "core/lattice.hpp"
#include "core/pach.hpp"
#include "core/plmap.hpp"

namespace pachgap {

using ordered_json = nlohmann::ordered_json;

// All reports serialize through here: ordered keys, rationals as "p/q", no
// floats, so equal inputs give byte-identical output.
std::string dump_json(const ordered_json& j);

ordered_json point_json(const Point& p);
ordered_json lattice_info_json(const GradedLattice& L);
ordered_json validation_json(const ValidationReport& r);
ordered_json embedding_json(const GenericEmbedding& e);
ordered_json expansion_json(const BipartiteIncidence& G, long long m_lo, long long m_hi);
ordered_json corradi_chain_json(const CorradiChain& c);
ordered_json membership_json(const FaceMembership& fm);
ordered_json cover_json(const CoverReport& r);
ordered_json certificate_json(const CoverCertificate& c);
ordered_json box_json(const BoxResult& b);
ordered_json box_analysis_json(const BoxCoatomAnalysis& a);
ordered_json tau_json(const TauReport& r);
// tau table plus coatom analyses of a few witnessed boxes; failed analysis
// checks bump *violations when given.
ordered_json tau_section_json(const PLMap& M, const TauReport& r, int* violations);
ordered_json chain_json(const TauBoundChain& ch);
ordered_json hk_result_json(const HkResult& h, const std::vector<long long>& betti);
ordered_json hk_case_json(const std::string& name, const WeightedComplex& X,
                          const std::vector<HkResult>& hs, const std::vector<long long>& betti);
ordered_json hbox_json(const MultipartiteHypergraph& H, const HBox& b);
ordered_json baseline_json(const AffineBaselineReport& r);

// The whole desk-scale pipeline on the canonical instance, one deterministic
// document: lattice, expansion table, map covering samples, tau table, size
// bound chain, expansion presets, box extraction, affine references, and a
// violation counter over every checked invariant.
ordered_json run_all(uint64_t seed);

} // namespace pachgap
