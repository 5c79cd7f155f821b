#pragma once

// Configuration matrices [n|q] of complete intersections in products of
// projective spaces. Row r of the matrix is the ambient factor P^{n_r};
// column alpha is a defining equation of multidegree (q_alpha^1..q_alpha^m).

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "toddkit/errors.hpp"

namespace toddkit {

/// Unvalidated configuration data as read from a file.
struct RawConfig {
    std::string name;
    std::vector<long long> dims;
    /// K rows (one per equation) of m entries.
    std::vector<std::vector<long long>> degrees;
};

class ConfigMatrix;
ConfigMatrix validate_config(const RawConfig& raw);

/// A configuration satisfying the Calabi-Yau row condition
/// sum_alpha q_alpha^r = n_r + 1 with dim X = sum n_r - K >= 1.
class ConfigMatrix {
public:
    const std::string& name() const { return name_; }
    const std::vector<unsigned>& dims() const { return dims_; }
    const std::vector<std::vector<unsigned>>& degrees() const { return degrees_; }

    std::size_t factor_count() const { return dims_.size(); }       // m
    std::size_t equation_count() const { return degrees_.size(); }  // K
    unsigned q(std::size_t alpha, std::size_t r) const { return degrees_[alpha][r]; }
    unsigned n(std::size_t r) const { return dims_[r]; }

    int dim() const {
        return static_cast<int>(std::accumulate(dims_.begin(), dims_.end(), 0u)) -
               static_cast<int>(degrees_.size());
    }

    bool strictly_positive() const {
        for (const auto& row : degrees_)
            for (unsigned v : row)
                if (v == 0) return false;
        return true;
    }

    /// r belongs to R when every equation has degree exactly 1 in factor r.
    bool in_unit_set(std::size_t r) const {
        for (const auto& row : degrees_)
            if (row[r] != 1) return false;
        return true;
    }

    /// Name if one was given, else the matrix in [n|q] notation.
    std::string id() const { return name_.empty() ? notation() : name_; }

    std::string notation() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t r = 0; r < dims_.size(); ++r) os << (r ? " " : "") << dims_[r];
        os << "|";
        for (std::size_t a = 0; a < degrees_.size(); ++a) {
            if (dims_.size() == 1) {
                os << (a ? " " : "") << degrees_[a][0];
                continue;
            }
            os << (a ? "," : "") << "(";
            for (std::size_t r = 0; r < dims_.size(); ++r) os << (r ? "," : "") << degrees_[a][r];
            os << ")";
        }
        os << "]";
        return os.str();
    }

    RawConfig raw() const {
        RawConfig out{name_, {}, {}};
        for (unsigned d : dims_) out.dims.push_back(d);
        for (const auto& row : degrees_) out.degrees.emplace_back(row.begin(), row.end());
        return out;
    }

private:
    friend ConfigMatrix validate_config(const RawConfig& raw);
    ConfigMatrix() = default;

    std::string name_;
    std::vector<unsigned> dims_;
    std::vector<std::vector<unsigned>> degrees_;
};

inline ConfigMatrix validate_config(const RawConfig& raw) {
    if (raw.dims.empty()) throw ValidationError("configuration has no ambient factors");
    if (raw.degrees.empty()) throw ValidationError("configuration has no defining equations");
    const std::size_t m = raw.dims.size();
    for (std::size_t r = 0; r < m; ++r)
        if (raw.dims[r] < 1)
            throw ValidationError("row " + std::to_string(r + 1) + ": ambient dimension must be positive", int(r + 1));
    for (std::size_t a = 0; a < raw.degrees.size(); ++a) {
        if (raw.degrees[a].size() != m)
            throw ValidationError("equation " + std::to_string(a + 1) + " has " +
                                  std::to_string(raw.degrees[a].size()) + " degrees, expected " + std::to_string(m));
        for (std::size_t r = 0; r < m; ++r)
            if (raw.degrees[a][r] < 0)
                throw ValidationError("row " + std::to_string(r + 1) + ": negative degree in equation " +
                                          std::to_string(a + 1),
                                      int(r + 1));
    }
    for (std::size_t r = 0; r < m; ++r) {
        long long sum = 0;
        std::string terms;
        for (std::size_t a = 0; a < raw.degrees.size(); ++a) {
            sum += raw.degrees[a][r];
            terms += (a ? "+" : "") + std::to_string(raw.degrees[a][r]);
        }
        if (sum != raw.dims[r] + 1)
            throw ValidationError("row " + std::to_string(r + 1) + ": Calabi-Yau condition fails, " + terms + " = " +
                                      std::to_string(sum) + " != n_" + std::to_string(r + 1) + "+1 = " +
                                      std::to_string(raw.dims[r] + 1),
                                  int(r + 1));
    }
    ConfigMatrix cfg;
    cfg.name_ = raw.name;
    for (long long d : raw.dims) cfg.dims_.push_back(static_cast<unsigned>(d));
    for (const auto& row : raw.degrees) cfg.degrees_.emplace_back(row.begin(), row.end());
    if (cfg.dim() < 1)
        throw ValidationError("dimension of the complete intersection is " + std::to_string(cfg.dim()) +
                              ", must be at least 1");
    return cfg;
}

}  // namespace toddkit
