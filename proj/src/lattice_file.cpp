#include "latwalk/lattice_file.hpp"

#include "latwalk/errors.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace latwalk {

namespace {

// Convert a byte offset from the JSON parser into a 1-based line:column pair.
std::string position_of(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream out;
    out << line << ":" << col;
    return out.str();
}

Vec vec_from_json(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + " must be an array of integers");
    Vec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

IntMat mat_from_json(const nlohmann::json& j, const std::string& where, std::size_t width)
{
    if (!j.is_array())
        throw ParseError(where + " must be an array of vectors");
    IntMat m;
    m.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        Vec row = vec_from_json(j[i], where + "[" + std::to_string(i) + "]");
        if (row.size() != width)
            throw ParseError(where + "[" + std::to_string(i) + "] has length "
                             + std::to_string(row.size()) + ", expected " + std::to_string(width));
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

Int int_from_string(const std::string& text, const std::string& where)
{
    std::size_t start = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool ok = text.size() > start;
    for (std::size_t i = start; i < text.size() && ok; ++i)
        ok = std::isdigit(static_cast<unsigned char>(text[i])) != 0;
    if (!ok)
        throw ParseError(where + ": \"" + text + "\" is not a decimal integer");
    return Int(text);
}

Int int_from_json(const nlohmann::json& j, const std::string& where)
{
    if (j.is_number_unsigned())
        return Int(j.get<std::uint64_t>());
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string())
        return int_from_string(j.get<std::string>(), where);
    if (j.is_number_float())
        throw ParseError(where + ": expected an integer, got a non-integral number; "
                         "write values beyond 64 bits as decimal strings");
    throw ParseError(where + ": expected an integer or a decimal string");
}

nlohmann::json json_int(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return v.convert_to<std::int64_t>();
    return v.str();
}

nlohmann::json json_rat(const Rat& v)
{
    return {{"num", json_int(num(v))}, {"den", json_int(den(v))}};
}

nlohmann::json json_vec(const Vec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Int& x : v)
        out.push_back(json_int(x));
    return out;
}

nlohmann::json json_mat(const IntMat& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Vec& row : m)
        out.push_back(json_vec(row));
    return out;
}

nlohmann::json json_signature(const Signature& s)
{
    return {{"positive", json_int(Int(s.positive))},
            {"negative", json_int(Int(s.negative))},
            {"zero", json_int(Int(s.zero))}};
}

LatticeFile parse_lattice_json(const std::string& text, const std::string& origin)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(origin + ":" + position_of(text, err.byte > 0 ? err.byte - 1 : 0)
                         + ": malformed JSON (" + err.what() + ")");
    }

    try {
        if (!doc.is_object())
            throw ParseError("top level must be an object");
        if (!doc.contains("rank"))
            throw ParseError("missing required field \"rank\"");
        Int rank_value = int_from_json(doc["rank"], "\"rank\"");
        if (rank_value <= 0 || rank_value > 1024)
            throw ParseError("\"rank\" must be a positive integer (at most 1024)");
        std::size_t n = rank_value.convert_to<std::size_t>();

        if (!doc.contains("gram"))
            throw ParseError("missing required field \"gram\"");
        IntMat gram = mat_from_json(doc["gram"], "\"gram\"", n);
        if (gram.size() != n)
            throw ParseError("\"gram\" has " + std::to_string(gram.size())
                             + " rows, expected " + std::to_string(n));

        LatticeFile file{Lattice(n, gram), {}, {}, {}};

        if (doc.contains("vectors")) {
            if (!doc["vectors"].is_object())
                throw ParseError("\"vectors\" must be an object mapping names to arrays");
            for (const auto& item : doc["vectors"].items()) {
                Vec v = vec_from_json(item.value(), "\"vectors\"." + item.key());
                if (v.size() != n)
                    throw ParseError("\"vectors\"." + item.key() + " has length "
                                     + std::to_string(v.size()) + ", expected " + std::to_string(n));
                file.vectors.emplace(item.key(), std::move(v));
            }
        }
        if (doc.contains("walls"))
            file.walls = mat_from_json(doc["walls"], "\"walls\"", n);
        if (doc.contains("mbm"))
            file.mbm = mat_from_json(doc["mbm"], "\"mbm\"", n);
        return file;
    } catch (const PreconditionError& err) {
        throw ParseError(origin + ": " + err.what());
    }
}

LatticeFile load_lattice_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_lattice_json(buffer.str(), path);
}

} // namespace latwalk
