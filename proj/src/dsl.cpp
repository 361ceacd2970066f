#include "ym2d/dsl.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ym2d/error.hpp"

namespace ym2d {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw Error(errc::parse_error, what); }

const json& need(const json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) fail(where + ": missing field '" + field + "'");
    return *it;
}

}  // namespace

const LoopWord& LoopFile::loop(const std::string& name) const {
    for (const auto& [n, w] : loops)
        if (n == name) return w;
    throw Error(errc::unknown_loop, "no loop named '" + name + "'");
}

LoopFile parse_dsl(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");

    LoopFile file;
    const json& angles = need(doc, "angles", "top level");
    if (!angles.is_array() || angles.size() < 2) fail("'angles' must be an array of >= 2 numbers");
    for (const auto& a : angles) {
        if (!a.is_number()) fail("'angles' entries must be numbers");
        file.angles.push_back(a.get<double>());
    }

    std::set<std::string> arc_ids;
    const json& arcs = need(doc, "arcs", "top level");
    if (!arcs.is_array()) fail("'arcs' must be an array");
    for (const auto& a : arcs) {
        if (!a.is_object()) fail("'arcs' entries must be objects");
        Arc arc;
        const json& id = need(a, "id", "arc");
        if (!id.is_string()) fail("arc 'id' must be a string");
        arc.id = id.get<std::string>();
        const json& sector = need(a, "sector", "arc '" + arc.id + "'");
        if (!sector.is_number_integer()) fail("arc '" + arc.id + "': 'sector' must be an integer");
        arc.sector = sector.get<int>();
        const json& samples = need(a, "samples", "arc '" + arc.id + "'");
        if (!samples.is_array() || samples.size() < 2)
            fail("arc '" + arc.id + "': 'samples' must be an array of >= 2 numbers");
        for (const auto& s : samples) {
            if (!s.is_number()) fail("arc '" + arc.id + "': samples must be numbers");
            arc.samples.push_back(s.get<double>());
        }
        if (!arc_ids.insert(arc.id).second) fail("duplicate arc id '" + arc.id + "'");
        file.arcs.push_back(std::move(arc));
    }

    const json& loops = need(doc, "loops", "top level");
    if (!loops.is_array()) fail("'loops' must be an array");
    std::set<std::string> loop_names;
    for (const auto& l : loops) {
        if (!l.is_object()) fail("'loops' entries must be objects");
        const json& name = need(l, "name", "loop");
        if (!name.is_string()) fail("loop 'name' must be a string");
        std::string n = name.get<std::string>();
        if (!loop_names.insert(n).second) fail("duplicate loop name '" + n + "'");
        const json& word = need(l, "word", "loop '" + n + "'");
        if (!word.is_array()) fail("loop '" + n + "': 'word' must be an array");
        LoopWord w;
        for (const auto& letter : word) {
            if (!letter.is_string()) fail("loop '" + n + "': word letters must be strings");
            std::string s = letter.get<std::string>();
            if (s.size() < 2 || (s[0] != '+' && s[0] != '-'))
                fail("loop '" + n + "': letter '" + s + "' must be '+<arcId>' or '-<arcId>'");
            std::string id = s.substr(1);
            if (!arc_ids.count(id))
                fail("loop '" + n + "': letter '" + s + "' names an unknown arc");
            w.letters.push_back({id, s[0] == '+' ? 1 : -1});
        }
        file.loops.emplace_back(std::move(n), std::move(w));
    }
    return file;
}

std::string serialize_dsl(const LoopFile& file) {
    json doc;
    doc["angles"] = file.angles;
    doc["arcs"] = json::array();
    for (const auto& arc : file.arcs) {
        json a;
        a["id"] = arc.id;
        a["sector"] = arc.sector;
        a["samples"] = arc.samples;
        doc["arcs"].push_back(std::move(a));
    }
    doc["loops"] = json::array();
    for (const auto& [name, word] : file.loops) {
        json l;
        l["name"] = name;
        json w = json::array();
        for (const auto& letter : word.letters)
            w.push_back((letter.sign > 0 ? "+" : "-") + letter.arc);
        l["word"] = std::move(w);
        doc["loops"].push_back(std::move(l));
    }
    return doc.dump(2) + "\n";
}

LoopFile load_dsl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dsl(buf.str());
}

}  // namespace ym2d
