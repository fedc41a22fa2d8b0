#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dhsim {

using ObjectId = std::uint32_t;

// One request event. Object ids are dense integers assigned at ingestion;
// times are milliseconds and non-decreasing within a trace.
struct TraceRecord {
    double time_ms = 0.0;
    ObjectId object_id = 0;
    std::uint64_t size_bytes = 0;
};

// Deterministic miss latency: z(size) = base + coeff * size.
struct LatencyModel {
    double base_ms = 10.0;
    double coeff_ms_per_byte = 0.0;

    double fetch_latency(std::uint64_t size_bytes) const {
        if (size_bytes == 0)
            throw std::invalid_argument("fetch_latency: size must be positive");
        return base_ms + coeff_ms_per_byte * static_cast<double>(size_bytes);
    }
};

enum class PolicyKind { Lru, LruMad, Lac, Cala, VaCdh };

std::string_view to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view name);

// Full policy identity. Parameters irrelevant to a kind are ignored but
// stored; reports echo the whole struct.
struct PolicyConfig {
    PolicyKind kind = PolicyKind::Lru;
    double omega = 1.0;           // variance sensitivity (VA_CDH)
    double gamma = 0.5;           // mean/upper-bound mix (CALA), in [0,1]
    std::size_t window_size = 10000;  // learning window S, in requests

    void validate() const {
        if (!(omega >= 0.0))
            throw std::invalid_argument("policy: omega must be >= 0");
        if (!(gamma >= 0.0 && gamma <= 1.0))
            throw std::invalid_argument("policy: gamma must be in [0,1]");
        if (window_size < 1)
            throw std::invalid_argument("policy: window_size must be >= 1");
    }
};

struct CacheConfig {
    std::uint64_t capacity_bytes = 0;
    PolicyConfig policy;
    std::uint64_t seed = 0;
};

}  // namespace dhsim
