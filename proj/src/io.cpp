#include "fintop/io.hpp"

#include "fintop/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <initializer_list>

namespace fintop {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text)
{
    try {
        json j = json::parse(text.begin(), text.end());
        if (!j.is_object())
            throw ParseError("expected a JSON object", std::string("/"));
        return j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

void require_fields(const json& j, std::initializer_list<const char*> fields)
{
    for (const char* f : fields)
        if (!j.contains(f))
            throw ParseError(std::string("missing field '") + f + "'", std::string("/"));
    for (const auto& [key, value] : j.items())
        if (std::find_if(fields.begin(), fields.end(), [&](const char* f) { return key == f; }) == fields.end())
            throw ParseError("unknown field '" + key + "'", "/" + key);
}

unsigned read_unsigned(const json& j, const std::string& where, unsigned limit)
{
    if (!j.is_number_integer())
        throw ParseError("expected a non-negative integer", where);
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(limit))
        throw ParseError("value " + std::to_string(v) + " must be below " + std::to_string(limit), where);
    return static_cast<unsigned>(v);
}

Carrier read_carrier(const json& j, const std::string& where)
{
    return Carrier(read_unsigned(j, where, Carrier::kMaxSize + 1));
}

PointSet read_element_list(const json& j, Carrier c, const std::string& where)
{
    if (!j.is_array())
        throw ParseError("expected an element list", where);
    Mask m = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "/" + std::to_string(i);
        const unsigned p = read_unsigned(j[i], at, c.size());
        if (m & (Mask{1} << p))
            throw ParseError("duplicate point " + std::to_string(p), at);
        m |= Mask{1} << p;
    }
    return PointSet(c, m);
}

std::vector<PointSet> read_family(const json& j, Carrier c, const std::string& where)
{
    if (!j.is_array())
        throw ParseError("expected a list of element lists", where);
    std::vector<PointSet> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(read_element_list(j[i], c, where + "/" + std::to_string(i)));
    return out;
}

ordered_json element_list(Mask m)
{
    ordered_json out = ordered_json::array();
    for (Point p = 0; m != 0; ++p, m >>= 1)
        if (m & 1u)
            out.push_back(p);
    return out;
}

} // namespace

TopologyRecord parse_topology_record(std::string_view text)
{
    const json j = parse_json(text);
    require_fields(j, {"n", "opens"});
    const Carrier c = read_carrier(j["n"], "/n");
    return {c, read_family(j["opens"], c, "/opens")};
}

Topology parse_topology(std::string_view text)
{
    const TopologyRecord record = parse_topology_record(text);
    auto t = validate(record.carrier, record.opens);
    if (!t)
        throw PreconditionError("not a topology: " + t.report().lines().front());
    return t.value();
}

std::string emit_topology(const Topology& t)
{
    ordered_json j;
    j["n"] = t.carrier().size();
    ordered_json opens = ordered_json::array();
    for (Mask m : t.open_masks())
        opens.push_back(element_list(m));
    j["opens"] = std::move(opens);
    return j.dump();
}

OperatorRecord parse_operator_record(std::string_view text)
{
    const json j = parse_json(text);
    require_fields(j, {"n", "table"});
    const Carrier c = read_carrier(j["n"], "/n");
    return {c, read_family(j["table"], c, "/table")};
}

std::string emit_operator(const ClosureOperator& op)
{
    ordered_json j;
    j["n"] = op.carrier().size();
    ordered_json table = ordered_json::array();
    for (Mask m : op.table())
        table.push_back(element_list(m));
    j["table"] = std::move(table);
    return j.dump();
}

FiniteFunction parse_function(std::string_view text)
{
    const json j = parse_json(text);
    require_fields(j, {"dom_n", "cod_n", "table"});
    const Carrier dom = read_carrier(j["dom_n"], "/dom_n");
    const Carrier cod = read_carrier(j["cod_n"], "/cod_n");
    const json& table = j["table"];
    if (!table.is_array())
        throw ParseError("expected a list of points", std::string("/table"));
    if (table.size() != dom.size())
        throw ParseError("table has " + std::to_string(table.size()) + " entries for a domain of size "
                             + std::to_string(dom.size()),
                         std::string("/table"));
    std::vector<Point> values;
    for (std::size_t i = 0; i < table.size(); ++i)
        values.push_back(read_unsigned(table[i], "/table/" + std::to_string(i), cod.size()));
    return FiniteFunction(dom, cod, std::move(values));
}

std::string emit_function(const FiniteFunction& f)
{
    ordered_json j;
    j["dom_n"] = f.dom().size();
    j["cod_n"] = f.cod().size();
    j["table"] = f.table();
    return j.dump();
}

FileKind detect_file_kind(std::string_view text)
{
    const json j = parse_json(text);
    if (j.contains("dom_n"))
        return FileKind::Function;
    if (j.contains("opens"))
        return FileKind::Topology;
    if (j.contains("table"))
        return FileKind::Operator;
    throw ParseError("cannot tell the file kind from its fields", std::string("/"));
}

} // namespace fintop
