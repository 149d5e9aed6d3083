#pragma once

// JSON forms of diagrams, elements, reports and tensor operators.
//
// A diagram is an array of blocks, each an array of signed labels with a'
// written as -a. Integers that do not fit in 64 bits are written as decimal
// strings; readers accept both.

#include <string_view>

#include "json.hpp"
#include "partalg/element.hpp"
#include "partalg/tensor.hpp"
#include "partalg/verifier.hpp"

namespace partalg {

  using Json = nlohmann::ordered_json;

  Json diagram_to_json(Diagram const& d);

  // The rank is the largest |label| unless `rank` is given. Throws ParseError
  // on a malformed document and MalformedPartition on an invalid partition.
  Diagram diagram_from_json(Json const& j, int rank = -1);

  // Text form or JSON, chosen by the first non-blank character.
  Diagram parse_diagram_any(std::string_view text, int rank = -1);

  // {"rank", "terms": [{"diagram", "coeff": [c0, c1, ...]}]}, terms ordered
  // by the diagram's text form.
  Json element_to_json(AlgebraElement const& a);
  AlgebraElement element_from_json(Json const& j);

  // {"suite", "rank", ["n",] "checks": [{"id", "indices", "pass"}],
  //  "vacuous", "out_of_range", "notes"}. Timing is never written.
  Json report_to_json(VerificationReport const& r);

  // {"n", "r", "entries": [[row, col, value]]} in row-major order.
  Json operator_to_json(SparseOperator const& op);

  Json integer_to_json(Integer const& x);
  Integer integer_from_json(Json const& j);

}  // namespace partalg
