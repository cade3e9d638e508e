#include "obc/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace obc {

namespace {

using Json = nlohmann::ordered_json;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("config: " + msg);
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> known,
                         const char* where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        require(ok, std::string("unknown key '") + key + "' in " + where);
    }
}

}  // namespace

double RunConfig::rho_linear() const { return std::pow(10.0, rho_db / 10.0); }

SystemSpec RunConfig::make_spec() const {
    std::vector<UserSpec> parsed;
    parsed.reserve(users.size());
    for (const ConfigUser& u : users) parsed.push_back({FadingModel::parse(u.fading), u.epsilon});
    return SystemSpec(rho_linear(), std::move(parsed));
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    require(j.is_object(), "top level must be an object");
    reject_unknown_keys(j, {"rho_db", "users", "grid", "mc_samples", "seed"}, "config");
    require(j.contains("rho_db") && j["rho_db"].is_number(), "rho_db must be a number");
    require(j.contains("users") && j["users"].is_array() && !j["users"].empty(),
            "users must be a nonempty array");

    RunConfig cfg;
    cfg.rho_db = j["rho_db"].get<double>();
    require(std::isfinite(cfg.rho_db), "rho_db must be finite");
    for (const Json& ju : j["users"]) {
        require(ju.is_object(), "each user must be an object");
        reject_unknown_keys(ju, {"fading", "epsilon"}, "user");
        require(ju.contains("fading") && ju["fading"].is_string(),
                "user fading must be a string");
        require(ju.contains("epsilon") && ju["epsilon"].is_number(),
                "user epsilon must be a number");
        ConfigUser u;
        u.fading = ju["fading"].get<std::string>();
        u.epsilon = ju["epsilon"].get<double>();
        require(u.epsilon > 0.0 && u.epsilon < 1.0, "user epsilon must lie in (0, 1)");
        cfg.users.push_back(std::move(u));
    }
    if (j.contains("grid")) {
        require(j["grid"].is_number_integer(), "grid must be an integer");
        cfg.grid = j["grid"].get<int>();
        require(cfg.grid >= 2, "grid must be >= 2");
    }
    if (j.contains("mc_samples")) {
        require(j["mc_samples"].is_number_integer(), "mc_samples must be an integer");
        cfg.mc_samples = j["mc_samples"].get<std::int64_t>();
        require(cfg.mc_samples >= 1, "mc_samples must be >= 1");
    }
    if (j.contains("seed")) {
        require(j["seed"].is_number_integer() && !j["seed"].is_number_float(),
                "seed must be an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    return cfg;
}

std::string RunConfig::to_json_text() const {
    Json j;
    j["rho_db"] = rho_db;
    j["users"] = Json::array();
    for (const ConfigUser& u : users)
        j["users"].push_back(Json{{"fading", u.fading}, {"epsilon", u.epsilon}});
    j["grid"] = grid;
    j["mc_samples"] = mc_samples;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void RunConfig::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out.good()) throw std::invalid_argument("config: cannot write " + path);
    out << to_json_text();
}

}  // namespace obc
