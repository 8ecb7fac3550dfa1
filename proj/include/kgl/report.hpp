#pragma once

#include <string>
#include <vector>

namespace kgl {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Itemized pass/fail results of axiom checks; failures are data, not errors.
struct ValidationReport {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back(CheckItem{name, pass, detail});
    }
    void absorb(const ValidationReport& other, const std::string& prefix) {
        for (const auto& it : other.items) items.push_back(CheckItem{prefix + it.name, it.pass, it.detail});
    }
    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::string summary() const {
        std::string s;
        for (const auto& it : items) {
            s += it.pass ? "[ok]   " : "[FAIL] ";
            s += it.name;
            if (!it.detail.empty()) s += ": " + it.detail;
            s += "\n";
        }
        return s;
    }
};

}  // namespace kgl
