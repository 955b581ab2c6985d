#include "evenlat/io.hpp"
#include "evenlat/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace evenlat::io {

Json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

Json to_json(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return to_json(Integer(c.get_num()));
    return Json(to_string(c));
}

Json to_json(const IntVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const RatVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const IntMat& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const RatMat& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Rational r;
        try {
            r = parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("not an integer: " + j.dump());
        }
        if (r.get_den() != 1)
            throw ParseError("not an integer: " + j.dump());
        return r.get_num();
    }
    throw ParseError("not an integer: " + j.dump());
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError("not a rational: " + j.dump());
}

namespace {

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, const std::string& what, F conv)
{
    if (!j.is_array())
        throw ParseError(what + ": expected an array of rows");
    std::vector<std::vector<T>> rows;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array())
            throw ParseError(what + ": row " + std::to_string(i + 1) + " is not an array");
        if (i == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError(what + ": row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(cols));
        std::vector<T> r;
        for (const auto& x : row)
            r.push_back(conv(x));
        rows.push_back(std::move(r));
    }
    return Matrix<T>::from_rows(rows, cols);
}

} // namespace

IntMat int_matrix_from_json(const Json& j, const std::string& what)
{
    return matrix_from_json<Integer>(j, what, integer_from_json);
}

RatMat rat_matrix_from_json(const Json& j, const std::string& what)
{
    return matrix_from_json<Rational>(j, what, rational_from_json);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

GramFile parse_gram_file(const std::string& text)
{
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("gram"))
        throw ParseError("gram file: missing \"gram\"");
    GramFile g;
    g.gram = int_matrix_from_json(j["gram"], "gram");
    if (!g.gram.is_square())
        throw ParseError("gram: not square");
    for (std::size_t i = 0; i < g.gram.rows(); ++i)
        for (std::size_t k = i + 1; k < g.gram.cols(); ++k)
            if (g.gram(i, k) != g.gram(k, i))
                throw ParseError("gram: not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")");
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ParseError("gram file: \"name\" must be a string");
        g.name = j["name"].get<std::string>();
    }
    return g;
}

Json gram_file_json(const GramFile& g)
{
    Json j;
    j["schema"] = kSchema;
    if (!g.name.empty())
        j["name"] = g.name;
    j["gram"] = to_json(g.gram);
    return j;
}

CurveConfig parse_config(const std::string& text)
{
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array())
        throw ParseError("config: missing \"curves\" array");
    std::vector<std::string> labels;
    IntVec self;
    std::map<std::string, std::size_t> index;
    for (const auto& c : j["curves"]) {
        if (!c.is_object() || !c.contains("label") || !c["label"].is_string() || !c.contains("self"))
            throw ParseError("config: each curve needs \"label\" and \"self\"");
        std::string l = c["label"].get<std::string>();
        if (index.count(l))
            throw ParseError("config: duplicate label " + l);
        index[l] = labels.size();
        labels.push_back(l);
        self.push_back(integer_from_json(c["self"]));
    }
    IntMat mult(labels.size(), labels.size());
    if (j.contains("mult")) {
        if (!j["mult"].is_array())
            throw ParseError("config: \"mult\" must be an array");
        for (const auto& m : j["mult"]) {
            if (!m.is_array() || m.size() != 3 || !m[0].is_string() || !m[1].is_string())
                throw ParseError("config: mult entries are [label, label, int]");
            auto a = index.find(m[0].get<std::string>()), b = index.find(m[1].get<std::string>());
            if (a == index.end() || b == index.end())
                throw ParseError("config: unknown label in " + m.dump());
            if (a->second == b->second)
                throw ParseError("config: self pairing in mult: " + m.dump());
            Integer v = integer_from_json(m[2]);
            if (v < 0)
                throw ParseError("config: negative multiplicity in " + m.dump());
            Integer& slot = mult(a->second, b->second);
            if (slot != 0 && slot != v)
                throw ParseError("config: conflicting multiplicities for " + m[0].get<std::string>() + ", " +
                                 m[1].get<std::string>());
            slot = v;
            mult(b->second, a->second) = v;
        }
    }
    try {
        return CurveConfig(labels, self, mult);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
}

Json config_json(const CurveConfig& c)
{
    Json j;
    j["schema"] = kSchema;
    Json curves = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        curves.push_back(Json{{"label", c.labels()[i]}, {"self", to_json(c.self_int()[i])}});
    j["curves"] = curves;
    Json mult = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = i + 1; k < c.size(); ++k)
            if (c.mult()(i, k) != 0)
                mult.push_back(Json::array({c.labels()[i], c.labels()[k], to_json(c.mult()(i, k))}));
    j["mult"] = mult;
    return j;
}

InvolutionAction parse_involution(const std::string& text)
{
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("perm") || !j["perm"].is_array())
        throw ParseError("involution: missing \"perm\" array");
    std::vector<int> images;
    for (const auto& x : j["perm"]) {
        if (!x.is_number_integer())
            throw ParseError("involution: perm entries must be integers");
        images.push_back(x.get<int>());
    }
    try {
        return InvolutionAction::from_one_based(images);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("involution: ") + e.what());
    }
}

Json involution_json(const InvolutionAction& a)
{
    Json p = Json::array();
    for (auto x : a.perm)
        p.push_back(x + 1);
    return Json{{"schema", kSchema}, {"perm", p}};
}

namespace {

bool is_file(const std::string& path)
{
    std::ifstream in(path);
    return static_cast<bool>(in);
}

} // namespace

Lattice lattice_from_spec(const std::string& spec)
{
    if (is_file(spec)) {
        GramFile g = parse_gram_file(read_file(spec));
        return Lattice(g.gram, g.name);
    }
    std::vector<Lattice> parts;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t plus = spec.find('+', pos);
        if (plus == std::string::npos)
            plus = spec.size();
        std::string item = spec.substr(pos, plus - pos);
        pos = plus + 1;
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.empty())
            throw ParseError("empty summand in lattice spec " + spec);
        int times = 1;
        auto hat = item.rfind('^');
        if (hat != std::string::npos) {
            try {
                times = std::stoi(item.substr(hat + 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in " + item);
            }
            if (times < 1)
                throw ParseError("bad exponent in " + item);
            item = item.substr(0, hat);
        }
        try {
            Lattice l = make_named(item);
            for (int k = 0; k < times; ++k)
                parts.push_back(l);
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("lattice spec: ") + e.what());
        }
    }
    if (parts.empty())
        throw ParseError("empty lattice spec");
    return direct_sum(parts);
}

IntMat matrix_from_spec(const std::string& spec, const std::string& key)
{
    Json j = parse_json(is_file(spec) ? read_file(spec) : spec);
    if (j.is_object()) {
        if (!j.contains(key))
            throw ParseError("missing \"" + key + "\"");
        return int_matrix_from_json(j[key], key);
    }
    return int_matrix_from_json(j, key);
}

CoverStep parse_cover_step(const std::string& text)
{
    Json j = parse_json(text);
    if (!j.is_object())
        throw ParseError("cover step: expected an object");
    CoverStep st;
    if (j.contains("branch_points")) {
        if (!j["branch_points"].is_object())
            throw ParseError("cover step: \"branch_points\" must map labels to counts");
        for (const auto& [k, v] : j["branch_points"].items()) {
            if (!v.is_number_integer())
                throw ParseError("cover step: branch count for " + k + " is not an integer");
            st.branch_points[k] = v.get<int>();
        }
    }
    if (j.contains("sheet_parity")) {
        if (!j["sheet_parity"].is_array())
            throw ParseError("cover step: \"sheet_parity\" must be an array");
        for (const auto& p : j["sheet_parity"]) {
            if (!p.is_object() || !p.contains("curves") || !p["curves"].is_array() || p["curves"].size() != 2 ||
                !p["curves"][0].is_string() || !p["curves"][1].is_string() || !p.contains("parity") ||
                !p["parity"].is_array())
                throw ParseError("cover step: sheet_parity entries are {\"curves\": [a, b], \"parity\": [...]}");
            std::vector<int> par;
            for (const auto& x : p["parity"]) {
                if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
                    throw ParseError("cover step: parity values are 0 or 1");
                par.push_back(x.get<int>());
            }
            st.sheet_parity[{p["curves"][0].get<std::string>(), p["curves"][1].get<std::string>()}] = par;
        }
    }
    return st;
}

} // namespace evenlat::io
