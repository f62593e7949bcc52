#pragma once

#include "fintop/closure.hpp"
#include "fintop/function.hpp"
#include "fintop/topology.hpp"

#include <string>
#include <string_view>
#include <vector>

// File formats. All three are single JSON objects; emission is compact, with
// element lists ascending and families in ascending mask order.
//
//   topology  {"n":2,"opens":[[],[0],[0,1]]}
//   operator  {"n":1,"table":[[],[0]]}              entry i is the image of mask i
//   function  {"dom_n":2,"cod_n":3,"table":[0,2]}
//
// Parsers throw ParseError for syntax errors, missing or unknown fields, wrong
// types, and points outside the carrier.

namespace fintop {

/// A topology file as written, before the axioms are checked.
struct TopologyRecord {
    Carrier carrier;
    std::vector<PointSet> opens;
};

struct OperatorRecord {
    Carrier carrier;
    std::vector<PointSet> table;
};

enum class FileKind { Topology, Operator, Function };

TopologyRecord parse_topology_record(std::string_view text);
/// Parses and validates; an axiom failure throws PreconditionError naming it.
Topology parse_topology(std::string_view text);
std::string emit_topology(const Topology& t);

/// Does not check the table length; validate_kuratowski does.
OperatorRecord parse_operator_record(std::string_view text);
std::string emit_operator(const ClosureOperator& op);

FiniteFunction parse_function(std::string_view text);
std::string emit_function(const FiniteFunction& f);

/// Decides the kind from the object's fields.
FileKind detect_file_kind(std::string_view text);

} // namespace fintop
