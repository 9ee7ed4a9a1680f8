#include "gqc4/codespec.hpp"

#include <fstream>
#include <sstream>

#include "gqc4/error.hpp"
#include "gqc4/polytext.hpp"
#include "json.hpp"

namespace gqc4 {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

template <class T>
std::optional<T> opt(const json& obj, const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    return obj.at(key).get<T>();
}

}  // namespace

CodeSpec parse_code_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("spec file: ") + e.what(), e.byte);
    }
    try {
        if (!doc.is_object()) throw ParseError("spec file: top level must be an object");
        if (!doc.contains("block_lengths")) throw ParseError("spec file: missing \"block_lengths\"");
        BlockLengths lengths(doc.at("block_lengths").get<std::vector<int>>());
        CodeSpec spec{GqcCode{lengths, {}}, {}};
        if (doc.contains("generators")) {
            std::size_t g = 0;
            for (const auto& gen : doc.at("generators")) {
                ++g;
                const auto blocks = gen.get<std::vector<std::string>>();
                if (static_cast<int>(blocks.size()) != lengths.index())
                    throw ParseError("spec file: generator " + std::to_string(g) + " has " + std::to_string(blocks.size()) +
                                         " blocks, expected " + std::to_string(lengths.index()));
                std::vector<QuadPoly> polys;
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                    try {
                        polys.push_back(parse_quad(blocks[b]));
                    } catch (const ParseError& e) {
                        throw ParseError("spec file: generator " + std::to_string(g) + ", block " + std::to_string(b + 1) +
                                             ": " + e.what());
                    }
                }
                spec.code.generators.push_back(make_element(lengths, std::move(polys)));
            }
        }
        if (spec.code.generators.empty()) spec.code.generators.push_back(zero_element(lengths));
        if (doc.contains("expect")) {
            const auto& e = doc.at("expect");
            spec.expect.k1 = opt<int>(e, "k1");
            spec.expect.k2 = opt<int>(e, "k2");
            spec.expect.min_lee_distance = opt<int>(e, "min_lee_distance");
            spec.expect.dual_k1 = opt<int>(e, "dual_k1");
            spec.expect.dual_k2 = opt<int>(e, "dual_k2");
            spec.expect.linear_image = opt<bool>(e, "linear_image");
        }
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("spec file: ") + e.what());
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("spec file: ") + e.what());
    }
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code_spec(ss.str());
}

std::string to_json(const CodeSpec& spec, int indent) {
    json doc;
    doc["block_lengths"] = spec.code.lengths.values();
    json gens = json::array();
    for (const auto& g : spec.code.generators) {
        json blocks = json::array();
        for (const auto& b : g.blocks) blocks.push_back(b.to_string());
        gens.push_back(blocks);
    }
    doc["generators"] = gens;
    const auto& x = spec.expect;
    if (!x.empty()) {
        json e = json::object();
        if (x.k1) e["k1"] = *x.k1;
        if (x.k2) e["k2"] = *x.k2;
        if (x.min_lee_distance) e["min_lee_distance"] = *x.min_lee_distance;
        if (x.dual_k1) e["dual_k1"] = *x.dual_k1;
        if (x.dual_k2) e["dual_k2"] = *x.dual_k2;
        if (x.linear_image) e["linear_image"] = *x.linear_image;
        doc["expect"] = e;
    }
    return doc.dump(indent);
}

std::string describe_generators(const GqcCode& code) {
    std::string out;
    for (std::size_t g = 0; g < code.generators.size(); ++g) {
        if (g) out += ';';
        for (std::size_t b = 0; b < code.generators[g].blocks.size(); ++b) {
            if (b) out += '|';
            out += code.generators[g].blocks[b].to_string();
        }
    }
    return out;
}

GqcCode parse_generators(const BlockLengths& lengths, const std::string& text) {
    GqcCode code{lengths, {}};
    for (const auto& gen : split(text, ';')) {
        const auto blocks = split(gen, '|');
        if (static_cast<int>(blocks.size()) != lengths.index())
            throw ParseError("generator \"" + gen + "\" has " + std::to_string(blocks.size()) + " blocks, expected " +
                                 std::to_string(lengths.index()));
        std::vector<QuadPoly> polys;
        for (const auto& b : blocks) polys.push_back(parse_quad(b));
        code.generators.push_back(make_element(lengths, std::move(polys)));
    }
    return code;
}

}  // namespace gqc4
