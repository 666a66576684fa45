#pragma once

#include <json.hpp>

#include "mfkit/catalog.hpp"
#include "mfkit/search.hpp"

namespace mfkit {

using Json = nlohmann::ordered_json;

/// Readers throw ParseError or Error on malformed input.
Json mf_to_json(const MatrixFactorization& X);
MatrixFactorization mf_from_json(const Json& j);

Json qdim_result_to_json(const QDimResult& r);
Json certificate_to_json(const EquivalenceCertificate& c);
EquivalenceCertificate certificate_from_json(const Json& j);

Json action_to_json(const GroupAction& a);
GroupAction action_from_json(const Json& j);

Json witness_to_json(const DescentWitness& w);
DescentWitness witness_from_json(const Json& j);

Json search_request_to_json(const SearchRequest& r, const SearchBudget& budget);
/// Budget fields present in the request override `options`.
SearchRequest search_request_from_json(const Json& j, SearchOptions& options);
Json search_response_to_json(const SearchResult& r, std::optional<long> group_order_claim);

Json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const Json& j);
Json catalog_report_to_json(const CatalogReport& r);
Json chain_report_to_json(const ChainReport& r);

/// lcm of the cyclotomic orders of the coefficients.
unsigned field_order_of(const std::vector<Polynomial>& polys);

}  // namespace mfkit
