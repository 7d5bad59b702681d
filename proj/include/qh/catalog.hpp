#ifndef QH_CATALOG_HPP
#define QH_CATALOG_HPP

#include <string>
#include <vector>

#include "qh/quandle.hpp"

namespace qh {

struct CatalogEntry {
    std::string key;
    std::string description;
};

/// Built-in quandles, in a stable listing order.
const std::vector<CatalogEntry>& catalog_entries();

/// Keys: trivial:n, dihedral:n, qs5, qs6, alexander:n:<poly>.
/// Throws std::invalid_argument on an unknown or malformed key.
FiniteQuandle catalog_quandle(const std::string& key);

/// Catalog key if recognized, otherwise treats `source` as a file path.
FiniteQuandle load_quandle(const std::string& source);

}  // namespace qh

#endif
