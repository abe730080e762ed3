#pragma once

// Shared pieces of the NVD/cve-search field mapping (docs/nvd-mapping.md),
// used by both feed ingestion and the remote query client.

#include <optional>
#include <string>

#include "cpsva/vulndb.hpp"

namespace cpsva::detail_nvd {

Privilege privilege_from_cvss(const std::string& value);
Effect effect_from_text(const std::string& lower_summary);
Privilege gained_privilege(Effect effect, Privilege required,
                           const std::string& lower_summary,
                           const std::string& severity);
std::optional<ProductDescriptor> product_from_cpe23(const std::string& uri);

}  // namespace cpsva::detail_nvd
