#include "crp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crp/stochastic.hpp"

namespace crp {

namespace {

using nlohmann::json;

json bay_json_object(const Bay& bay) {
    json j;
    j["tiers"] = bay.tiers();
    j["columns"] = bay.columns();
    j["stacks"] = bay.stacks();
    return j;
}

Bay bay_from_json_object(const json& j) {
    if (!j.contains("tiers") || !j.contains("columns") || !j.contains("stacks"))
        throw ParseError("instance JSON needs tiers, columns and stacks fields");
    int tiers, columns;
    std::vector<std::vector<int>> stacks;
    try {
        tiers = j.at("tiers").get<int>();
        columns = j.at("columns").get<int>();
        stacks = j.at("stacks").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
    try {
        return Bay(tiers, columns, stacks);
    } catch (const InvalidParams& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
}

}  // namespace

std::string bay_to_json(const Bay& bay) {
    return bay_json_object(bay).dump();
}

Bay bay_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
    return bay_from_json_object(j);
}

std::string bay_to_text(const Bay& bay) {
    std::ostringstream out;
    out << bay.tiers() << ' ' << bay.columns() << '\n';
    for (const auto& stack : bay.stacks()) {
        for (size_t i = 0; i < stack.size(); ++i) out << (i ? " " : "") << stack[i];
        out << '\n';
    }
    return out.str();
}

Bay bay_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("line 1: missing 'P C' header");
    std::istringstream header(line);
    int tiers = 0, columns = 0;
    if (!(header >> tiers >> columns)) throw ParseError("line 1: header must be 'P C'");
    std::vector<std::vector<int>> stacks;
    int line_no = 1;
    while (std::getline(in, line) && static_cast<int>(stacks.size()) < columns) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<int> stack;
        int label;
        while (ls >> label) stack.push_back(label);
        if (!ls.eof()) {
            std::string bad;
            ls.clear();
            ls >> bad;
            throw ParseError("line " + std::to_string(line_no) + ": bad label '" + bad + "'");
        }
        stacks.push_back(std::move(stack));
    }
    if (static_cast<int>(stacks.size()) != columns)
        throw ParseError("expected " + std::to_string(columns) + " column lines, got " +
                         std::to_string(stacks.size()));
    try {
        return Bay(tiers, columns, stacks);
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

Bay load_bay_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(path + ": empty file");
    return text[first] == '{' ? bay_from_json(text) : bay_from_text(text);
}

void save_bay_file(const Bay& bay, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << bay_to_json(bay) << '\n';
}

std::string two_stage_to_json(const TwoStageInstance& inst, std::uint64_t seed) {
    json j = bay_json_object(inst.bay);
    j["known"] = inst.known;
    j["t_star"] = inst.t_star;
    j["seed"] = seed;
    return j.dump();
}

TwoStageInstance two_stage_from_json(const std::string& text, std::uint64_t* seed_out) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("two-stage JSON: ") + e.what());
    }
    TwoStageInstance inst;
    inst.bay = bay_from_json_object(j);
    try {
        inst.known = j.at("known").get<int>();
        inst.t_star = j.at("t_star").get<int>();
        if (seed_out) *seed_out = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw ParseError(std::string("two-stage JSON: ") + e.what());
    }
    try {
        inst.validate();
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
    return inst;
}

TwoStageInstance load_two_stage_file(const std::string& path, std::uint64_t* seed_out) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return two_stage_from_json(buf.str(), seed_out);
}

}  // namespace crp
