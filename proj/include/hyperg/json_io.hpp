#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hyperg/catalog.hpp"
#include "hyperg/checks.hpp"
#include "hyperg/expectation.hpp"
#include "hyperg/group.hpp"
#include "hyperg/hypergroup.hpp"

namespace hyperg {

/// Preserves key insertion order so emitted documents are stable.
using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** {"order": n, "table": [[...]]} */
Json group_to_json(const GroupTable& g);

/** Parses and fully validates; throws ParseError on shape, GroupError on axioms. */
GroupTable group_from_json(const Json& j);

/** {"blocks": [[...]], "weights": [["1/2", ...]]} with rational strings. */
Json expectation_to_json(const ConditionalExpectation& e);

/** Parses and validates against the group order; throws ParseError / ExpectationError. */
ConditionalExpectation expectation_from_json(const Json& j, int group_order);

/** {"size", "identity", "involution", "constants", "haar", "modular"}; rationals as strings. */
Json hypergroup_to_json(const HypergroupTable& h);

HypergroupTable hypergroup_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

}  // namespace hyperg
