#include "cts/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cts/rng.hpp"

namespace cts {

using nlohmann::json;

namespace {
constexpr int kConfigSchemaVersion = 1;

const DemandFamily kFamilies[] = {DemandFamily::Uniform, DemandFamily::Gamma,
                                  DemandFamily::Exponential, DemandFamily::Normal,
                                  DemandFamily::Poisson};
}  // namespace

const char* to_string(DemandFamily f) {
    switch (f) {
        case DemandFamily::Uniform: return "uniform";
        case DemandFamily::Gamma: return "gamma";
        case DemandFamily::Exponential: return "exponential";
        case DemandFamily::Normal: return "normal";
        case DemandFamily::Poisson: return "poisson";
    }
    return "unknown";
}

DemandFamily demand_family_from_string(const std::string& s) {
    for (DemandFamily f : kFamilies)
        if (s == to_string(f)) return f;
    throw ConfigError("unknown demand family: " + s);
}

Inventory Scenario::max_inventory() const {
    Inventory inv(n_products(), n_warehouses());
    for (int i = 0; i < n_products(); ++i)
        for (int j = 0; j < n_warehouses(); ++j)
            inv.at(i, j) = products[i].max_levels[j];
    return inv;
}

Scenario generate_scenario(const ScenarioConfig& config) {
    if (config.n_warehouses < 1 || config.n_products < 1 ||
        config.replenishment_period < 1 || config.max_customers_per_step < 1 ||
        config.episode_length < 1)
        throw ConfigError("scenario dimensions must all be >= 1");
    if (!config.activation_costs.empty() &&
        config.activation_costs.size() != static_cast<size_t>(config.n_warehouses))
        throw ConfigError("activation_costs must have one entry per warehouse");
    if (!config.demand_models.empty() &&
        config.demand_models.size() != static_cast<size_t>(config.n_products))
        throw ConfigError("demand_models must have one entry per product");

    Scenario sc;
    sc.config = config;
    auto layout_rng = substream(config.seed, "layout");

    // Warehouse placement: grid cell centers when N is a perfect square,
    // uniform-random otherwise.
    const int n = config.n_warehouses;
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    const PlanArea& area = config.plan_area;
    for (int j = 0; j < n; ++j) {
        Warehouse w;
        w.id = j;
        if (side * side == n) {
            const int a = j / side;  // x cell
            const int b = j % side;  // y cell
            w.location.x = area.min_x + area.width() * (2 * a + 1) / (2.0 * side);
            w.location.y = area.min_y + area.height() * (2 * b + 1) / (2.0 * side);
        } else {
            std::uniform_real_distribution<double> ux(area.min_x, area.max_x);
            std::uniform_real_distribution<double> uy(area.min_y, area.max_y);
            w.location.x = ux(layout_rng);
            w.location.y = uy(layout_rng);
        }
        w.activation_cost = config.activation_costs.empty() ? config.weights.warehouse_weight
                                                            : config.activation_costs[j];
        sc.warehouses.push_back(w);
    }

    // Product catalog.
    std::uniform_int_distribution<int> level_dist(config.max_level_min, config.max_level_max);
    std::uniform_int_distribution<int> quant_dist(config.quantization_min, config.quantization_max);
    for (int i = 0; i < config.n_products; ++i) {
        ProductSpec p;
        p.id = i;
        p.quantization = quant_dist(layout_rng);
        p.max_levels.resize(n);
        for (int j = 0; j < n; ++j) p.max_levels[j] = level_dist(layout_rng);
        sc.products.push_back(std::move(p));
    }

    // Demand models: one family per product, frozen for the episode.
    if (!config.demand_models.empty()) {
        sc.demand_models = config.demand_models;
    } else {
        auto model_rng = substream(config.seed, "demand-model");
        std::uniform_int_distribution<int> family_dist(0, 4);
        for (int i = 0; i < config.n_products; ++i) {
            DemandModel m;
            m.family = kFamilies[family_dist(model_rng)];
            double level_mean = 0.0;
            for (int j = 0; j < n; ++j) level_mean += sc.products[i].max_levels[j];
            level_mean /= n;
            const double hi = std::max(1.0, config.demand_mean_fraction * level_mean);
            m.mean = std::uniform_real_distribution<double>(1.0, hi)(model_rng);
            sc.demand_models.push_back(m);
        }
    }
    return sc;
}

int sample_demand(const DemandModel& model, double clip_factor, std::mt19937_64& rng) {
    const double mu = model.mean;
    double x = 0.0;
    switch (model.family) {
        case DemandFamily::Uniform:
            x = std::uniform_real_distribution<double>(0.0, 2.0 * mu)(rng);
            break;
        case DemandFamily::Gamma:
            x = std::gamma_distribution<double>(2.0, mu / 2.0)(rng);
            break;
        case DemandFamily::Exponential:
            x = std::exponential_distribution<double>(1.0 / mu)(rng);
            break;
        case DemandFamily::Normal:
            x = std::normal_distribution<double>(mu, mu / 3.0)(rng);
            break;
        case DemandFamily::Poisson:
            x = static_cast<double>(std::poisson_distribution<long>(mu)(rng));
            break;
    }
    x = std::clamp(x, 0.0, clip_factor * mu);
    return static_cast<int>(std::lround(x));
}

namespace {

json weights_to_json(const CostWeights& w) {
    return json{{"distance", w.distance_weight},
                {"carton", w.carton_weight},
                {"warehouse", w.warehouse_weight},
                {"unfulfilment", w.unfulfilment_penalty}};
}

CostWeights weights_from_json(const json& j) {
    CostWeights w;
    w.distance_weight = j.value("distance", w.distance_weight);
    w.carton_weight = j.value("carton", w.carton_weight);
    w.warehouse_weight = j.value("warehouse", w.warehouse_weight);
    w.unfulfilment_penalty = j.value("unfulfilment", w.unfulfilment_penalty);
    return w;
}

}  // namespace

std::string config_to_json(const ScenarioConfig& c) {
    json j;
    j["schema_version"] = kConfigSchemaVersion;
    j["n_warehouses"] = c.n_warehouses;
    j["n_products"] = c.n_products;
    j["replenishment_period"] = c.replenishment_period;
    j["max_customers_per_step"] = c.max_customers_per_step;
    j["variable_arrivals"] = c.variable_arrivals;
    j["plan_area"] = {{"min_x", c.plan_area.min_x},
                      {"min_y", c.plan_area.min_y},
                      {"max_x", c.plan_area.max_x},
                      {"max_y", c.plan_area.max_y}};
    j["max_level_range"] = {c.max_level_min, c.max_level_max};
    j["quantization_range"] = {c.quantization_min, c.quantization_max};
    j["demand_mean_fraction"] = c.demand_mean_fraction;
    j["demand_clip_factor"] = c.demand_clip_factor;
    j["weights"] = weights_to_json(c.weights);
    if (!c.activation_costs.empty()) j["activation_costs"] = c.activation_costs;
    if (!c.demand_models.empty()) {
        json models = json::array();
        for (const auto& m : c.demand_models)
            models.push_back({{"family", to_string(m.family)}, {"mean", m.mean}});
        j["demand_models"] = models;
    }
    j["episode_length"] = c.episode_length;
    j["seed"] = c.seed;
    return j.dump(2) + "\n";
}

ScenarioConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("bad scenario config: ") + e.what());
    }
    const int version = j.value("schema_version", kConfigSchemaVersion);
    if (version != kConfigSchemaVersion)
        throw ConfigError("unsupported config schema_version " + std::to_string(version));

    ScenarioConfig c;
    c.n_warehouses = j.value("n_warehouses", c.n_warehouses);
    c.n_products = j.value("n_products", c.n_products);
    c.replenishment_period = j.value("replenishment_period", c.replenishment_period);
    c.max_customers_per_step = j.value("max_customers_per_step", c.max_customers_per_step);
    c.variable_arrivals = j.value("variable_arrivals", c.variable_arrivals);
    if (j.contains("plan_area")) {
        const json& a = j["plan_area"];
        c.plan_area = {a.value("min_x", 0.0), a.value("min_y", 0.0), a.value("max_x", 1.0),
                       a.value("max_y", 1.0)};
    }
    if (j.contains("max_level_range")) {
        c.max_level_min = j["max_level_range"].at(0).get<int>();
        c.max_level_max = j["max_level_range"].at(1).get<int>();
    }
    if (j.contains("quantization_range")) {
        c.quantization_min = j["quantization_range"].at(0).get<int>();
        c.quantization_max = j["quantization_range"].at(1).get<int>();
    }
    c.demand_mean_fraction = j.value("demand_mean_fraction", c.demand_mean_fraction);
    c.demand_clip_factor = j.value("demand_clip_factor", c.demand_clip_factor);
    if (j.contains("weights")) c.weights = weights_from_json(j["weights"]);
    if (j.contains("activation_costs"))
        c.activation_costs = j["activation_costs"].get<std::vector<double>>();
    if (j.contains("demand_models")) {
        for (const auto& m : j["demand_models"]) {
            DemandModel model;
            model.family = demand_family_from_string(m.at("family").get<std::string>());
            model.mean = m.at("mean").get<double>();
            c.demand_models.push_back(model);
        }
    }
    c.episode_length = j.value("episode_length", c.episode_length);
    c.seed = j.value("seed", c.seed);
    return c;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

void save_config_file(const ScenarioConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file: " + path);
    out << config_to_json(config);
}

}  // namespace cts
