#include "ivq/problem_io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ivq {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys = {"description", "alternatives", "attributes",
                                             "experts",     "q",            "matrices",
                                             "attribute_measure", "expert_measure"};

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

std::vector<std::string> parse_names(const json& arr, const char* what) {
    if (!arr.is_array()) fail(std::string("'") + what + "' must be an array of names");
    std::vector<std::string> names;
    for (const auto& v : arr) {
        if (!v.is_string()) fail(std::string("'") + what + "' entries must be strings");
        names.push_back(v.get<std::string>());
    }
    return names;
}

std::vector<AttributeSpec> parse_attributes(const json& arr) {
    if (!arr.is_array()) fail("'attributes' must be an array");
    std::vector<AttributeSpec> out;
    for (const auto& v : arr) {
        AttributeSpec spec;
        if (v.is_string()) {
            spec.name = v.get<std::string>();
        } else if (v.is_object()) {
            for (const auto& [key, _] : v.items())
                if (key != "name" && key != "kind") fail("unknown attribute key '" + key + "'");
            const auto& name = require(v, "name");
            if (!name.is_string()) fail("attribute name must be a string");
            spec.name = name.get<std::string>();
            if (auto it = v.find("kind"); it != v.end()) {
                if (!it->is_string()) fail("attribute kind must be \"benefit\" or \"cost\"");
                const auto kind = it->get<std::string>();
                if (kind == "benefit") spec.kind = AttributeKind::Benefit;
                else if (kind == "cost") spec.kind = AttributeKind::Cost;
                else fail("attribute " + spec.name + ": kind must be \"benefit\" or \"cost\", got \"" + kind + "\"");
            }
        } else {
            fail("attribute entries must be names or {name, kind} objects");
        }
        out.push_back(std::move(spec));
    }
    return out;
}

std::optional<int> parse_q(const json& obj) {
    auto it = obj.find("q");
    if (it == obj.end()) return std::nullopt;
    if (it->is_string()) {
        if (it->get<std::string>() == "auto") return std::nullopt;
        fail("'q' must be \"auto\" or a positive integer");
    }
    if (!it->is_number_integer() && !it->is_number_unsigned())
        fail("'q' must be \"auto\" or a positive integer");
    const auto q = it->get<long long>();
    if (q < 1 || q > 1000) fail("'q' must be a positive integer");
    return static_cast<int>(q);
}

IvqRofn parse_entry(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 4) fail(where + ": expected [t_lo, t_hi, f_lo, f_hi]");
    double x[4];
    for (int k = 0; k < 4; ++k) {
        if (!v[k].is_number()) fail(where + ": grades must be numbers");
        x[k] = v[k].get<double>();
    }
    try {
        return make_ivqrofn(x[0], x[1], x[2], x[3]);
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.what());
    }
}

Matrix parse_matrix(const json& m, const std::string& expert, std::size_t rows, std::size_t cols,
                    const std::vector<std::string>& alternatives,
                    const std::vector<AttributeSpec>& attributes) {
    if (!m.is_array()) fail("matrix of expert " + expert + " must be an array of rows");
    if (m.size() != rows)
        fail("matrix of expert " + expert + " has " + std::to_string(m.size()) + " rows, expected " +
             std::to_string(rows));
    Matrix out;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = m[i];
        if (!row.is_array() || row.size() != cols)
            fail("matrix of expert " + expert + ", row " + alternatives[i] + ": expected " +
                 std::to_string(cols) + " cells");
        std::vector<IvqRofn> cells;
        for (std::size_t j = 0; j < cols; ++j)
            cells.push_back(parse_entry(row[j], "entry " + expert + "/" + alternatives[i] + "/" +
                                                    attributes[j].name));
        out.push_back(std::move(cells));
    }
    return out;
}

FuzzyMeasure parse_measure(const json& arr, const std::vector<std::string>& names,
                           const char* what) {
    if (!arr.is_array()) fail(std::string("'") + what + "' must be an array of {subset, value}");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
    std::map<Subset, double> entries;
    for (const auto& e : arr) {
        if (!e.is_object()) fail(std::string(what) + " entries must be {subset, value} objects");
        for (const auto& [key, _] : e.items())
            if (key != "subset" && key != "value")
                fail(std::string(what) + ": unknown key '" + key + "'");
        const auto& subset = require(e, "subset");
        const auto& value = require(e, "value");
        if (!subset.is_array()) fail(std::string(what) + ": subset must be a list of names");
        if (!value.is_number()) fail(std::string(what) + ": value must be a number");
        Subset s = 0;
        for (const auto& n : subset) {
            if (!n.is_string()) fail(std::string(what) + ": subset members must be names");
            auto it = index.find(n.get<std::string>());
            if (it == index.end())
                fail(std::string(what) + ": unknown name '" + n.get<std::string>() + "'");
            if (s & singleton(it->second))
                fail(std::string(what) + ": name '" + it->first + "' repeated in a subset");
            s |= singleton(it->second);
        }
        if (!entries.emplace(s, value.get<double>()).second)
            fail(std::string(what) + ": subset " + subset.dump() + " listed twice");
    }
    return FuzzyMeasure::from_table(static_cast<int>(names.size()), entries);
}

json emit_measure(const FuzzyMeasure& m, const std::vector<std::string>& names) {
    std::vector<Subset> subsets;
    for (Subset s = 1; s <= full_set(names.size()); ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(), [](Subset a, Subset b) {
        return std::popcount(a) < std::popcount(b);
    });
    json out = json::array();
    for (Subset s : subsets) {
        json members = json::array();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (s & singleton(i)) members.push_back(names[i]);
        out.push_back({{"subset", members}, {"value", m.value(s)}});
    }
    return out;
}

}  // namespace

DecisionProblem parse_problem(std::string_view text) {
    try {
        const json doc = json::parse(text.begin(), text.end());
        if (!doc.is_object()) fail("problem document must be a JSON object");
        for (const auto& [key, _] : doc.items())
            if (!kTopLevelKeys.contains(key)) fail("unknown key '" + key + "'");
        if (auto it = doc.find("description"); it != doc.end() && !it->is_string())
            fail("'description' must be a string");

        auto alternatives = parse_names(require(doc, "alternatives"), "alternatives");
        auto attributes = parse_attributes(require(doc, "attributes"));
        auto experts = parse_names(require(doc, "experts"), "experts");
        const auto q = parse_q(doc);

        const auto& mats = require(doc, "matrices");
        if (!mats.is_object()) fail("'matrices' must map expert names to matrices");
        for (const auto& [key, _] : mats.items())
            if (std::find(experts.begin(), experts.end(), key) == experts.end())
                fail("matrix given for undeclared expert '" + key + "'");
        std::vector<Matrix> matrices;
        for (const auto& e : experts) {
            auto it = mats.find(e);
            if (it == mats.end()) fail("missing matrix for expert '" + e + "'");
            matrices.push_back(parse_matrix(*it, e, alternatives.size(), attributes.size(),
                                            alternatives, attributes));
        }

        std::vector<std::string> attr_names;
        for (const auto& a : attributes) attr_names.push_back(a.name);
        if (attr_names.empty()) fail("no attributes declared");
        if (experts.empty()) fail("no experts declared");
        auto attribute_measure =
            parse_measure(require(doc, "attribute_measure"), attr_names, "attribute_measure");
        auto expert_measure = [&] {
            auto it = doc.find("expert_measure");
            if (it == doc.end()) {
                if (experts.size() != 1) fail("missing key 'expert_measure'");
                return FuzzyMeasure::from_table(1, {});
            }
            return parse_measure(*it, experts, "expert_measure");
        }();

        DecisionProblem p{std::move(alternatives), std::move(attributes), std::move(experts),
                          std::move(matrices),     std::move(attribute_measure),
                          std::move(expert_measure), q};
        p.validate_shape();
        return p;
    } catch (const json::exception& e) {
        fail(std::string("malformed problem document: ") + e.what());
    }
}

DecisionProblem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read problem file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string emit_problem(const DecisionProblem& p, std::string_view description) {
    json doc = json::object();
    if (!description.empty()) doc["description"] = std::string(description);
    doc["alternatives"] = p.alternatives;
    json attrs = json::array();
    for (const auto& a : p.attributes)
        attrs.push_back({{"name", a.name}, {"kind", a.kind == AttributeKind::Cost ? "cost" : "benefit"}});
    doc["attributes"] = attrs;
    doc["experts"] = p.experts;
    if (p.q) doc["q"] = *p.q;
    else doc["q"] = "auto";
    json mats = json::object();
    for (std::size_t k = 0; k < p.experts.size(); ++k) {
        json rows = json::array();
        for (const auto& row : p.matrices[k]) {
            json cells = json::array();
            for (const auto& a : row) cells.push_back({a.t.lo(), a.t.hi(), a.f.lo(), a.f.hi()});
            rows.push_back(cells);
        }
        mats[p.experts[k]] = rows;
    }
    doc["matrices"] = mats;
    std::vector<std::string> attr_names;
    for (const auto& a : p.attributes) attr_names.push_back(a.name);
    doc["attribute_measure"] = emit_measure(p.attribute_measure, attr_names);
    doc["expert_measure"] = emit_measure(p.expert_measure, p.experts);
    return doc.dump(2) + "\n";
}

}  // namespace ivq
