#pragma once

#include "qent/detail/catalog_a_closed.hpp"
#include "qent/detail/catalog_a_semi.hpp"
#include "qent/detail/catalog_b.hpp"
#include "qent/identities.hpp"

namespace qent {

inline const std::vector<IdentityRecord>& identity_catalog() {
    static const std::vector<IdentityRecord> catalog = [] {
        std::vector<IdentityRecord> records;
        detail::build_catalog_a_closed(records);
        detail::build_catalog_a_semi(records);
        detail::build_catalog_b(records);
        return records;
    }();
    return catalog;
}

}  // namespace qent
