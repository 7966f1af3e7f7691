#pragma once

#include <map>
#include <string>

namespace repfuse {

// Flat key=value configuration with dotted keys ("grid.N", "tol.haar", ...).
// '#' starts a comment; whitespace around keys and values is trimmed.
// CLI flags override file values which override built-in defaults.
class Config {
  public:
    static Config defaults();

    void merge_file(const std::string& path);           // throws on unreadable file
    void merge_line(const std::string& line);           // single "key=value"
    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    long long get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;        // on/off/true/false/1/0

    const std::map<std::string, std::string>& entries() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace repfuse
