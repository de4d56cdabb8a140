#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cts/domain.hpp"

namespace cts {

enum class DemandFamily { Uniform, Gamma, Exponential, Normal, Poisson };

const char* to_string(DemandFamily f);
DemandFamily demand_family_from_string(const std::string& s);

/// A product's demand distribution, frozen for a whole episode.
struct DemandModel {
    DemandFamily family = DemandFamily::Uniform;
    double mean = 1.0;
    bool operator==(const DemandModel&) const = default;
};

/// Full generative description of an experiment. Serialized as a JSON
/// document (schema_version 1).
struct ScenarioConfig {
    int n_warehouses = 4;
    int n_products = 10;
    int replenishment_period = 50;   // T
    int max_customers_per_step = 1;  // k
    bool variable_arrivals = false;  // false: exactly k orders; true: 1..k
    PlanArea plan_area;
    int max_level_min = 20;
    int max_level_max = 100;
    int quantization_min = 1;
    int quantization_max = 10;
    double demand_mean_fraction = 0.5;  // demand mean ~ U[1, frac * mean(max levels)]
    double demand_clip_factor = 3.0;    // samples clipped to [0, factor * mean]
    CostWeights weights;
    std::vector<double> activation_costs;   // optional per-warehouse override
    std::vector<DemandModel> demand_models; // optional explicit models
    int episode_length = 50;
    uint64_t seed = 0;

    bool operator==(const ScenarioConfig&) const = default;
};

/// A generated world: layout, catalog and frozen demand models. Everything
/// here is deterministic given the config (including its seed).
struct Scenario {
    ScenarioConfig config;
    std::vector<Warehouse> warehouses;
    std::vector<ProductSpec> products;
    std::vector<DemandModel> demand_models;

    int n_warehouses() const { return static_cast<int>(warehouses.size()); }
    int n_products() const { return static_cast<int>(products.size()); }

    /// Every cell stocked to its maximum level.
    Inventory max_inventory() const;
};

/// Builds the scenario. Warehouses sit at cell centers of an r x r grid when
/// N = r^2 (quadrant centers for N = 4); any other N falls back to
/// uniform-random placement from the layout stream.
Scenario generate_scenario(const ScenarioConfig& config);

/// One demand draw, clipped to [0, clip_factor * mean] and rounded.
int sample_demand(const DemandModel& model, double clip_factor, std::mt19937_64& rng);

std::string config_to_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);
void save_config_file(const ScenarioConfig& config, const std::string& path);

}  // namespace cts
