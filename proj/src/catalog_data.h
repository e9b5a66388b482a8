// Embedded solid table, generated by tools/gen_catalog. Coordinates are
// decimal strings with 50 significant digits so both the double pipeline and
// the multiprecision verifier parse one source of truth.
#pragma once

namespace rupert {

struct CatalogSolid {
  const char* name;
  const char* family;
  int vertex_count;
  const char* const* coords;  // vertex_count * 3 decimal strings
};

extern const CatalogSolid kCatalogSolids[];
extern const int kCatalogSolidCount;

}  // namespace rupert
