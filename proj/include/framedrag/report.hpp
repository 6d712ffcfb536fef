#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "framedrag/format.hpp"

namespace framedrag::cli {

struct ReportLine {
    std::string name;
    double value;
    std::string unit;
    std::string anchor;  // derivation anchor, listed in docs/derivations.md
};

/// Result of one command: echoed inputs, anchored outputs, notes and warnings.
///
/// Rendered form, one record per line:
///   command <name>
///   input <key> = <raw text>
///   output <name> = <17 digits> <unit> [<anchor>] ~<4 digits>
///   note <text>
///   WARN <tag>: <text>
struct RunReport {
    RunReport() = default;
    explicit RunReport(std::string name) : command(std::move(name)) {}

    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ReportLine> outputs;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;

    void add(std::string name, double value, std::string unit, std::string anchor) {
        outputs.push_back({std::move(name), value, std::move(unit), std::move(anchor)});
    }

    void warn(const std::string& tag, const std::string& text) { warnings.push_back("WARN " + tag + ": " + text); }

    void note(std::string text) { notes.push_back(std::move(text)); }

    const ReportLine* find(const std::string& name) const {
        for (const auto& l : outputs)
            if (l.name == name) return &l;
        return nullptr;
    }

    std::optional<double> value(const std::string& name) const {
        if (auto l = find(name)) return l->value;
        return std::nullopt;
    }

    bool has_warning(const std::string& tag) const {
        for (const auto& w : warnings)
            if (w.rfind("WARN " + tag + ":", 0) == 0) return true;
        return false;
    }

    std::string render() const {
        std::ostringstream os;
        os << "command " << command << '\n';
        for (const auto& [k, v] : inputs) os << "input " << k << " = " << v << '\n';
        for (const auto& l : outputs) {
            os << "output " << l.name << " = " << format_exact(l.value);
            if (!l.unit.empty()) os << ' ' << l.unit;
            os << " [" << l.anchor << "] ~" << format_short(l.value) << '\n';
        }
        for (const auto& n : notes) os << "note " << n << '\n';
        for (const auto& w : warnings) os << w << '\n';
        return os.str();
    }
};

struct CommandOutput {
    RunReport report;
    std::optional<std::string> csv;
};

} // namespace framedrag::cli
