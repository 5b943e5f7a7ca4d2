#pragma once

#include <string>
#include <vector>

#include "hyperg/expectation.hpp"
#include "hyperg/group.hpp"

namespace hyperg {

/// A named finite group with printable element names.
struct CatalogGroup {
  std::string name;
  GroupTable table;
  std::vector<std::string> element_names;
};

/** Names of the built-in groups: Z2..Z12, S3, S4, D4, Q8. */
std::vector<std::string> catalog_group_names();

/** Builds a catalog group by name; throws std::invalid_argument for unknown names. */
CatalogGroup catalog_group(const std::string& name);

/** Index of a group element by printable name; throws std::invalid_argument when absent. */
int catalog_element_index(const CatalogGroup& g, const std::string& element_name);

/// A (group, conditional expectation) pair from the standard instance list.
struct CatalogInstance {
  std::string name;     // "<group>:<builder>"
  std::string builder;  // id | double_coset | conjugation | automorphism_orbit
  CatalogGroup group;
  ConditionalExpectation expectation;
};

/**
 * The standard instances: Z2..Z12 with the identity expectation, S3 with
 * identity / double cosets of the order-2 subgroup generated by (12) /
 * conjugation, conjugation on S4, D4 and Q8, and the automorphism orbit
 * expectation on Z5 generated by doubling.
 */
std::vector<CatalogInstance> catalog_instances();

/** Names of the expectation builders usable with catalog groups. */
std::vector<std::string> catalog_builder_names();

}  // namespace hyperg
