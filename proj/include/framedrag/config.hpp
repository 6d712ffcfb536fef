#pragma once

// Flat key=value configuration, spectrum files and refractive-model files.
//
// Config lines look like `source.rs = 0.009`; '#' starts a comment. Later
// assignments override earlier ones, so layering defaults, presets, a config
// file and command-line overrides is a sequence of merges.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "framedrag/errors.hpp"
#include "framedrag/fiber.hpp"
#include "framedrag/interference.hpp"

namespace framedrag::config {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view text, std::string_view what) {
    const std::string_view t = trim(text);
    double x = 0.0;
    const auto* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(t.data(), end, x);
    if (ec != std::errc() || ptr != end || t.empty())
        throw ConfigError("cannot parse '" + std::string(t) + "' as a number for " + std::string(what));
    return x;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class KeyValues {
public:
    /// Merge `key = value` lines; `origin` names the source in error messages.
    void merge_text(std::string_view text, std::string_view origin) {
        std::size_t line_no = 0;
        while (!text.empty()) {
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key=value");
            set(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
        }
    }

    void merge_file(const std::string& path) { merge_text(read_file(path), path); }

    /// `key=value` as given on a command line.
    void merge_assignment(std::string_view assignment) {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
        set(std::string(trim(assignment.substr(0, eq))), std::string(trim(assignment.substr(eq + 1))));
    }

    /// Setting one member of an alternative group (e.g. source.a vs source.a_over_rs)
    /// drops the others, so a later layer can switch parametrization.
    void set(std::string key, std::string value) {
        if (key.empty()) throw ConfigError("empty key");
        static const std::vector<std::vector<std::string>> groups = {
            {"source.rs", "source.mass_kg"},
            {"source.a", "source.a_over_rs", "source.J"},
            {"point.r", "point.r_over_rs"},
            {"turntable.v", "turntable.omega_rad_s"},
        };
        for (const auto& g : groups) {
            if (std::find(g.begin(), g.end(), key) == g.end()) continue;
            for (const auto& other : g)
                if (other != key) values_.erase(other);
        }
        values_[std::move(key)] = std::move(value);
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::optional<std::string> raw(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::string, std::string>& values() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Typed, recording view over KeyValues: every key read is remembered with its
/// raw text so reports can echo inputs exactly as given.
class Scenario {
public:
    explicit Scenario(KeyValues kv) : kv_(std::move(kv)) {}

    bool has(const std::string& key) const { return kv_.has(key); }

    double number(const std::string& key) {
        auto r = kv_.raw(key);
        if (!r) throw ConfigError("missing required key " + key);
        note(key, *r);
        return parse_double(*r, key);
    }

    double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

    std::optional<double> maybe_number(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    std::string text(const std::string& key, const std::string& fallback) {
        auto r = kv_.raw(key);
        if (!r) return fallback;
        note(key, *r);
        return *r;
    }

    unsigned count(const std::string& key, unsigned fallback) {
        if (!has(key)) return fallback;
        const double x = number(key);
        if (x < 0 || x != static_cast<double>(static_cast<unsigned>(x)))
            throw ConfigError(key + " must be a non-negative integer");
        return static_cast<unsigned>(x);
    }

    const std::vector<std::pair<std::string, std::string>>& echoed() const noexcept { return echoed_; }

    const KeyValues& key_values() const noexcept { return kv_; }

private:
    void note(const std::string& key, const std::string& raw) {
        if (seen_.insert(key).second) echoed_.emplace_back(key, raw);
    }

    KeyValues kv_;
    std::set<std::string> seen_;
    std::vector<std::pair<std::string, std::string>> echoed_;
};

/// Two-column spectrum text (omega in 1/m, density), '#' comments; renormalized on load.
inline interference::Wavepacket parse_spectrum(std::string_view text, std::string_view origin) {
    std::vector<double> omega, density;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto sep = line.find_first_of(" \t,");
        if (sep == std::string_view::npos)
            throw ConfigError(std::string(origin) + ":" + std::to_string(line_no) + ": expected two columns");
        const std::string where = std::string(origin) + ":" + std::to_string(line_no);
        omega.push_back(parse_double(line.substr(0, sep), where));
        density.push_back(parse_double(trim(line.substr(sep + 1)), where));
    }
    return interference::Wavepacket::tabulated(std::move(omega), std::move(density));
}

inline interference::Wavepacket load_spectrum(const std::string& path) { return parse_spectrum(read_file(path), path); }

/// Refractive model from `A=`, `B=`, `k0=`, `k_min=`, `k_max=` (unprefixed) or
/// `model.`-prefixed keys. Missing keys fall back to the fused-silica values.
inline fiber::RefractiveModel refractive_model(Scenario& s) {
    const auto silica = fiber::RefractiveModel::fused_silica();
    KeyValues merged;
    if (s.has("model.file")) {
        const std::string path = s.text("model.file", "");
        merged.merge_file(path);
    }
    auto pick = [&](const std::string& key, double fallback) {
        if (s.has("model." + key)) return s.number("model." + key);
        if (auto r = merged.raw(key)) return parse_double(*r, key);
        return fallback;
    };
    const double a = pick("A", silica.coefficient_a());
    const double b = pick("B", silica.coefficient_b());
    const double k0 = pick("k0", silica.k0());
    const double kmin = pick("k_min", silica.k_min());
    const double kmax = pick("k_max", silica.k_max());
    return fiber::RefractiveModel::inverse_wavenumber(a, b, k0, kmin, kmax);
}

} // namespace framedrag::config
