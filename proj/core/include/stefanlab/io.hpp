#ifndef STEFANLAB_IO_HPP
#define STEFANLAB_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "stefanlab/solver.hpp"

namespace stefanlab::io {

/// 17 significant digits, enough for exact double round-trips.
std::string format_double(double x);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Columns: t, h, h_prime, u_max, v_max.
std::string trajectory_csv(const Trajectory& tr);

/// Columns: y, x, u, v.
std::string profile_csv(const SolutionState& s, std::size_t n);

/// Columns: z, q, p.
std::string wave_csv(const std::vector<double>& z, const std::vector<double>& q,
                     const std::vector<double>& p);

/// Minimal deterministic JSON object writer; insertion order is preserved
/// and doubles are printed with 17 significant digits.
class JsonObject {
public:
    JsonObject& field(const std::string& key, double value);
    JsonObject& field(const std::string& key, const std::string& value);
    JsonObject& field(const std::string& key, long long value);
    JsonObject& field_null(const std::string& key);
    JsonObject& field_raw(const std::string& key, const std::string& raw);

    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::string json_array(const std::vector<std::string>& raw_elements);
std::string json_string_array(const std::vector<std::string>& strings);

}  // namespace stefanlab::io

#endif
