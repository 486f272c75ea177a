#pragma once

#include <string>

#include "json.hpp"
#include "sumfree/catalog.hpp"

namespace sumfree {

using json = nlohmann::ordered_json;

json factorization_to_json(const XnFactorization& fz);
json subspace_to_json(const FieldCtx& F, const Subspace& s);
json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
json table1_to_json(const std::vector<CyclotomicRow>& rows);
json kn_report_to_json(const KnReport& r);
json c2_to_json(unsigned n, const std::vector<C2Triple>& triples);
json cc3_to_json(unsigned n, const std::vector<Cc3Entry>& entries);
json status_to_json(const StatusVerdict& sv);

// Aligned plaintext renderings, byte-identical across runs.
std::string table1_to_text(const std::vector<CyclotomicRow>& rows);
std::string table2_to_text(const std::vector<KnReport>& reports);
std::string c2_to_text(unsigned n, const std::vector<C2Triple>& triples);

} // namespace sumfree
