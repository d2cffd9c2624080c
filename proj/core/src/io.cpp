#include "stefanlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace stefanlab::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << text;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream os;
    os << "t,h,h_prime,u_max,v_max\n";
    for (const auto& r : tr.records) {
        os << format_double(r.t) << ',' << format_double(r.h) << ','
           << format_double(r.h_prime) << ',' << format_double(r.u_max) << ','
           << format_double(r.v_max) << '\n';
    }
    return os.str();
}

std::string profile_csv(const SolutionState& s, std::size_t n) {
    std::ostringstream os;
    os << "y,x,u,v\n";
    const double dy = 1.0 / double(n + 1);
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        const double y = dy * double(i);
        os << format_double(y) << ',' << format_double(y * s.h) << ','
           << format_double(s.u[i]) << ',' << format_double(s.v[i]) << '\n';
    }
    return os.str();
}

std::string wave_csv(const std::vector<double>& z, const std::vector<double>& q,
                     const std::vector<double>& p) {
    std::ostringstream os;
    os << "z,q,p\n";
    for (std::size_t i = 0; i < z.size(); ++i) {
        os << format_double(z[i]) << ',' << format_double(q[i]) << ','
           << format_double(p[i]) << '\n';
    }
    return os.str();
}

namespace {
std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

JsonObject& JsonObject::field(const std::string& key, double value) {
    entries_.emplace_back(key, format_double(value));
    return *this;
}
JsonObject& JsonObject::field(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, quote(value));
    return *this;
}
JsonObject& JsonObject::field(const std::string& key, long long value) {
    entries_.emplace_back(key, std::to_string(value));
    return *this;
}
JsonObject& JsonObject::field_null(const std::string& key) {
    entries_.emplace_back(key, "null");
    return *this;
}
JsonObject& JsonObject::field_raw(const std::string& key, const std::string& raw) {
    entries_.emplace_back(key, raw);
    return *this;
}

std::string JsonObject::str() const {
    std::ostringstream os;
    os << "{\n";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        os << "  " << quote(entries_[i].first) << ": " << entries_[i].second;
        if (i + 1 < entries_.size()) os << ',';
        os << '\n';
    }
    os << "}\n";
    return os.str();
}

std::string json_array(const std::vector<std::string>& raw_elements) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < raw_elements.size(); ++i) {
        if (i) os << ", ";
        os << raw_elements[i];
    }
    os << ']';
    return os.str();
}

std::string json_string_array(const std::vector<std::string>& strings) {
    std::vector<std::string> quoted;
    quoted.reserve(strings.size());
    for (const auto& s : strings) quoted.push_back(quote(s));
    return json_array(quoted);
}

}  // namespace stefanlab::io
