#include "kfan/cli/fan_io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace kfan::cli {

namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Integer parse_integer(const json& v, const std::string& where)
{
    if (v.is_number_integer())
        return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                      : Integer(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        bool digits = s.size() > start;
        for (std::size_t i = start; i < s.size(); ++i)
            digits = digits && s[i] >= '0' && s[i] <= '9';
        if (digits)
            return Integer(s);
    }
    throw FanParseError(where + ": expected an integer");
}

std::size_t parse_index(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw FanParseError(where + ": expected a non-negative ray index");
    return static_cast<std::size_t>(v.get<std::uint64_t>());
}

const json& field(const json& doc, const char* name)
{
    auto it = doc.find(name);
    if (it == doc.end())
        throw FanParseError(std::string("missing field '") + name + "'");
    return *it;
}

nlohmann::ordered_json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

} // namespace

Fan parse_fan_document(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        auto colon = what.rfind(": ");
        throw FanParseError("invalid JSON at " + position(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                            (colon == std::string::npos ? what : what.substr(colon + 2)));
    }
    if (!doc.is_object())
        throw FanParseError("document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "rank" && key != "rays" && key != "maximal_cones" && key != "name")
            throw FanParseError("unknown field '" + key + "'");

    const json& rank_v = field(doc, "rank");
    if (!rank_v.is_number_unsigned())
        throw FanParseError("rank: expected a non-negative integer");
    const auto rank = static_cast<std::size_t>(rank_v.get<std::uint64_t>());

    const json& rays_v = field(doc, "rays");
    if (!rays_v.is_array())
        throw FanParseError("rays: expected an array");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < rays_v.size(); ++i) {
        const std::string where = "rays[" + std::to_string(i) + "]";
        if (!rays_v[i].is_array())
            throw FanParseError(where + ": expected an array of integers");
        IntVector u;
        for (std::size_t j = 0; j < rays_v[i].size(); ++j)
            u.push_back(parse_integer(rays_v[i][j], where + "[" + std::to_string(j) + "]"));
        rays.push_back(std::move(u));
    }

    const json& cones_v = field(doc, "maximal_cones");
    if (!cones_v.is_array())
        throw FanParseError("maximal_cones: expected an array");
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < cones_v.size(); ++i) {
        const std::string where = "maximal_cones[" + std::to_string(i) + "]";
        if (!cones_v[i].is_array())
            throw FanParseError(where + ": expected an array of ray indices");
        std::vector<RayId> ids;
        for (std::size_t j = 0; j < cones_v[i].size(); ++j)
            ids.push_back(parse_index(cones_v[i][j], where + "[" + std::to_string(j) + "]"));
        try {
            cones.emplace_back(std::move(ids));
        } catch (const std::invalid_argument&) {
            throw FanParseError(where + ": repeated ray index");
        }
    }

    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            throw FanParseError("name: expected a string");
        name = it->get<std::string>();
    }
    return Fan::from_maximal_cones(rank, std::move(rays), cones, std::move(name));
}

std::string serialize_fan(const Fan& fan)
{
    nlohmann::ordered_json doc;
    doc["rank"] = fan.rank();
    auto rays = nlohmann::ordered_json::array();
    for (const auto& u : fan.rays()) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : u)
            row.push_back(integer_json(x));
        rays.push_back(std::move(row));
    }
    doc["rays"] = std::move(rays);
    auto cones = nlohmann::ordered_json::array();
    for (const auto& c : fan.maximal_cones())
        cones.push_back(c.rays());
    doc["maximal_cones"] = std::move(cones);
    if (!fan.name().empty())
        doc["name"] = fan.name();
    return doc.dump(2) + "\n";
}

std::vector<std::string> builtin_names()
{
    return {"p1", "p2", "p3", "a2", "a3", "p1xp1", "hirzebruch:<a>", "blowup-p2"};
}

Fan builtin_fan(std::string_view name)
{
    if (name == "p1" || name == "p2" || name == "p3")
        return projective_space(static_cast<std::size_t>(name[1] - '0'));
    if (name == "a2" || name == "a3")
        return affine_space(static_cast<std::size_t>(name[1] - '0'));
    if (name == "p1xp1")
        return product(projective_space(1), projective_space(1));
    if (name == "blowup-p2") {
        Fan f = star_subdivision(projective_space(2), Cone{0, 1});
        return Fan(f.rank(), f.rays(), f.cones(), "blowup-p2");
    }
    constexpr std::string_view hirz = "hirzebruch:";
    if (name.substr(0, hirz.size()) == hirz) {
        auto digits = name.substr(hirz.size());
        long a = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), a);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return hirzebruch(a);
    }
    throw FanParseError("unknown builtin fan '" + std::string(name) + "'");
}

Fan load_fan(const std::string& source)
{
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0)
        return builtin_fan(std::string_view(source).substr(prefix.size()));
    std::ifstream in(source, std::ios::binary);
    if (!in)
        throw FanParseError("cannot read '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fan_document(buf.str());
}

} // namespace kfan::cli
