#include "repfuse/config.hpp"

#include <fstream>
#include <stdexcept>

namespace repfuse {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::defaults() {
    Config c;
    c.values_ = {
        {"seed", "12345"},
        {"grid.N", "1024"},
        {"grid.L", "20"},
        {"grid2.N", "256"},
        {"grid2.L", "12"},
        {"haar.N", "96"},
        {"haar.Lpq", "6"},
        {"haar.Lt", "12"},
        {"haar.width", "4"},
        {"tol.unitarity", "1e-13"},
        {"tol.homomorphism", "1e-10"},
        {"tol.character", "1e-12"},
        {"tol.gaussian", "1e-8"},
        {"tol.central", "1e-12"},
        {"tol.pd", "1e-8"},
        {"tol.tensor", "1e-12"},
        {"tol.plancherel", "1e-12"},
        {"tol.rotation", "1e-8"},
        {"tol.intertwiner", "1e-6"},
        {"tol.intertwiner_central", "1e-12"},
        {"tol.haar", "1e-6"},
        {"rules.trivial_identity", "on"},
        {"rules.regular_absorbs", "on"},
        {"fusion.max_closure_iterations", "64"},
    };
    return c;
}

void Config::merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        merge_line(line);
    }
}

void Config::merge_line(const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("config entries are key=value, got: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("empty config key in: " + line);
    values_[key] = value;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::string Config::get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw std::invalid_argument("missing config key: " + key);
    return it->second;
}

long long Config::get_int(const std::string& key) const {
    try {
        return std::stoll(get_string(key));
    } catch (const std::exception&) {
        throw std::invalid_argument("config key " + key + " is not an integer");
    }
}

double Config::get_double(const std::string& key) const {
    try {
        return std::stod(get_string(key));
    } catch (const std::exception&) {
        throw std::invalid_argument("config key " + key + " is not a number");
    }
}

bool Config::get_bool(const std::string& key) const {
    std::string v = get_string(key);
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw std::invalid_argument("config key " + key + " is not a boolean (on/off)");
}

}  // namespace repfuse
